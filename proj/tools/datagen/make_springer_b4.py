"""Write the bundled B4 (SO(9)) Springer table.

Characters of W(B4) are bipartitions (a, b) with ((4), ()) trivial. The
correspondence below sends the regular orbit to the trivial character; the
bundled file uses the zero-orbit-trivial convention, obtained by tensoring
with the sign character, (a, b) -> (b', a') where ' is conjugation.

usage: make_springer_b4.py DATADIR
"""
import sys

REGULAR_TO_TRIVIAL = [
    ("111111111", "triv", (), (1, 1, 1, 1)),
    ("2211111", "triv", (), (2, 1, 1)),
    ("3111111", "triv", (1,), (1, 1, 1)),
    ("3111111", "eps", (1, 1, 1, 1), ()),
    ("22221", "triv", (), (2, 2)),
    ("32211", "triv", (1, 1), (1, 1)),
    ("32211", "eps", (1, 1, 1), (1,)),
    ("33111", "triv", (1,), (2, 1)),
    ("33111", "eps", (), (3, 1)),
    ("333", "triv", (1, 1), (2,)),
    ("51111", "triv", (2,), (1, 1)),
    ("51111", "eps", (2, 1, 1), ()),
    ("441", "triv", (1,), (3,)),
    ("522", "triv", (2, 1), (1,)),
    ("531", "triv", (2,), (2,)),
    ("531", "eps_a", (2, 2), ()),
    ("531", "eps_b", (), (4,)),
    ("711", "triv", (3,), (1,)),
    ("711", "eps", (3, 1), ()),
    ("9", "triv", (4,), ()),
]


def conjugate(p):
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


def fmt(p):
    return "(" + ",".join(map(str, p)) + ")"


def main():
    with open(f"{sys.argv[1]}/springer_b4.tsv", "w") as f:
        f.write("#group\tB4\n")
        for orbit, local_system, a, b in REGULAR_TO_TRIVIAL:
            f.write(f"{orbit}\t{local_system}\t({fmt(conjugate(b))},{fmt(conjugate(a))})\n")


if __name__ == "__main__":
    main()
