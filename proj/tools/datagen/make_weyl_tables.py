"""Convert a GAP dump of W(E8) and W(E7) into the bundled character-table TSVs.

Irreducibles are named d_b, where d is the degree and b the lowest degree in
which the character occurs in the coinvariant algebra (its fake degree),
computed from the characteristic polynomials via Molien's formula.

usage: make_weyl_tables.py weyl_dump.txt OUTDIR
"""
import sys
from fractions import Fraction

DEGREES = {"E8": [2, 8, 12, 14, 18, 20, 24, 30], "E7": [2, 6, 8, 10, 12, 14, 18]}


def parse(path):
    groups, fusion, cur = [], None, None
    # GAP wraps long output lines with a trailing backslash
    text = open(path).read().replace("\\\n", "")
    for line in text.splitlines():
        f = line.split()
        if not f:
            continue
        if f[0] == "GROUP":
            cur = {"name": f[1], "order": int(f[2]), "classes": [], "irr": []}
            groups.append(cur)
        elif f[0] == "CLASS":
            cur["classes"].append((f[3], int(f[2]), [int(x) for x in f[4].split(",")]))
        elif f[0] == "IRR":
            cur["irr"].append([int(x) for x in f[1].split(",")])
        elif f[0] == "FUSION":
            fusion = [int(x) for x in f[1].split(",")]
    return groups, fusion


def series_inverse(p, n):
    # p[0] == 1
    inv = [0] * n
    inv[0] = 1
    for k in range(1, n):
        inv[k] = -sum(p[j] * inv[k - j] for j in range(1, min(k, len(p) - 1) + 1))
    return inv


def divide_by_x_minus_1(cp):
    # cp ascending; synthetic division by (x - 1)
    desc = list(reversed(cp))
    q = [desc[0]]
    for c in desc[1:-1]:
        q.append(c + q[-1])
    assert desc[-1] + q[-1] == 0
    return list(reversed(q))


def b_values(g):
    rank = len(DEGREES[g["name"]])
    top = sum(d - 1 for d in DEGREES[g["name"]]) + 1
    invs = []
    for _, _, cp in g["classes"]:
        # a parabolic subgroup fixes the complement of its span: strip those (x - 1) factors
        while len(cp) - 1 > rank:
            cp = divide_by_x_minus_1(cp)
        # det(1 - qw) has coefficients cp reversed
        invs.append(series_inverse(list(reversed(cp)), top))
    prod = [1]
    for d in DEGREES[g["name"]]:
        nxt = [0] * (len(prod) + d)
        for i, c in enumerate(prod):
            nxt[i] += c
            nxt[i + d] -= c
        prod = nxt
    out = []
    for chi in g["irr"]:
        s = [Fraction(0)] * top
        for (_, size, _), v, inv in zip(g["classes"], chi, invs):
            for k in range(top):
                s[k] += size * v * inv[k]
        fake = [sum(prod[j] * s[k - j] for j in range(min(k, len(prod) - 1) + 1)) / g["order"]
                for k in range(top)]
        b = next(k for k, c in enumerate(fake) if c != 0)
        assert all(c.denominator == 1 and c >= 0 for c in fake)
        assert sum(fake) == chi[0]
        out.append(b)
    return out


def write_table(g, path):
    bs = b_values(g)
    labels = [f"{chi[0]}_{b}" for chi, b in zip(g["irr"], bs)]
    assert len(set(labels)) == len(labels), "d_b labels are not unique"
    order = sorted(range(len(labels)), key=lambda i: (bs[i], g["irr"][i][0]))
    with open(path, "w") as f:
        f.write(f"#group\tW({g['name']})\t{g['order']}\n")
        f.write("#classes\t" + "\t".join(c[0] for c in g["classes"]) + "\n")
        f.write("#sizes\t" + "\t".join(str(c[1]) for c in g["classes"]) + "\n")
        for i in order:
            f.write(labels[i] + "\t" + "\t".join(map(str, g["irr"][i])) + "\n")
    return labels


def main():
    dump, outdir = sys.argv[1], sys.argv[2]
    groups, fusion = parse(dump)
    e8, e7 = groups
    write_table(e8, f"{outdir}/weyl_e8.tsv")
    write_table(e7, f"{outdir}/weyl_e7.tsv")
    with open(f"{outdir}/fusion_e7_e8.tsv", "w") as f:
        for i, j in enumerate(fusion):
            f.write(f"{e7['classes'][i][0]}\t{e8['classes'][j - 1][0]}\n")


if __name__ == "__main__":
    main()
