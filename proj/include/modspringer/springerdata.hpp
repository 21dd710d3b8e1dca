#ifndef MODSPRINGER_SPRINGERDATA_HPP
#define MODSPRINGER_SPRINGERDATA_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modspringer/orbits.hpp"
#include "modspringer/partitions.hpp"
#include "modspringer/weylrep.hpp"

#ifndef MODSPRINGER_DATA_DIR
#define MODSPRINGER_DATA_DIR "data"
#endif

namespace modspringer {

/// (orbit label, local system label)
using PairLabel = std::pair<std::string, std::string>;

inline std::string pair_string(const PairLabel& p) { return "(" + p.first + "," + p.second + ")"; }

struct SpringerRow {
  std::string orbit;
  std::string local_system;
  std::string character;

  PairLabel pair() const { return {orbit, local_system}; }
};

/// Ordinary Springer correspondence: a bijection from its pairs onto Irr(W).
struct SpringerTable {
  std::string group_label;
  std::vector<SpringerRow> rows;
  std::map<std::string, Integer> degree;
  Integer group_order = 0;

  std::optional<std::size_t> find(const PairLabel& p) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].pair() == p) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> find_character(const std::string& chi) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].character == chi) return i;
    return std::nullopt;
  }
};

namespace detail {

inline std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace detail

/// Reads `#group <name>` then `<orbit>\t<local-system>\t<character>` rows, validated against `w`.
inline SpringerTable load_springer_table(std::istream& in, const CharacterTable& w) {
  SpringerTable t;
  std::string line;
  std::size_t lineno = 0;
  std::set<PairLabel> seen_pairs;
  std::set<std::string> seen_chars;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = detail::split_tabs(line);
    if (f[0] == "#group") {
      if (f.size() < 2 || f[1].empty()) throw data_error(detail::at(lineno, 2) + "#group needs a name");
      t.group_label = f[1];
      continue;
    }
    if (f[0].rfind('#', 0) == 0) continue;
    if (t.group_label.empty()) throw data_error(detail::at(lineno, 1) + "row before #group header");
    if (f.size() != 3)
      throw data_error(detail::at(lineno, std::min<std::size_t>(f.size() + 1, 4)) + "expected 3 tab-separated fields, got " +
                       std::to_string(f.size()));
    for (std::size_t c = 0; c < 3; ++c)
      if (f[c].empty()) throw data_error(detail::at(lineno, c + 1) + "empty field");
    SpringerRow r{f[0], f[1], f[2]};
    if (!seen_pairs.insert(r.pair()).second)
      throw data_error(detail::at(lineno, 1) + "duplicate pair " + pair_string(r.pair()));
    if (!seen_chars.insert(r.character).second)
      throw data_error(detail::at(lineno, 3) + "character " + r.character + " assigned twice");
    auto chi = w.find_irr(r.character);
    if (!chi) throw data_error(detail::at(lineno, 3) + "unknown character " + r.character + " of " + w.group.str());
    t.degree[r.character] = w.degree(*chi);
    t.rows.push_back(std::move(r));
  }
  if (t.group_label.empty()) throw data_error("Springer table has no #group header");
  if (t.rows.size() != w.irr_count())
    throw data_error("Springer table covers " + std::to_string(t.rows.size()) + " of " + std::to_string(w.irr_count()) +
                     " irreducible characters");
  Integer squares = 0;
  for (const auto& [chi, d] : t.degree) squares += d * d;
  t.group_order = w.order();
  if (squares != t.group_order)
    throw data_error("degree squares sum to " + squares.str() + ", expected " + t.group_order.str());
  return t;
}

/// Bala-Carter orbit with its strict lower set in the closure order and |A(x)|.
struct OrbitMeta {
  std::string label;
  std::vector<std::string> lower;
  int component_group_order = 1;
};

struct OrbitPoset {
  std::string group_label;
  std::vector<OrbitMeta> orbits;

  const OrbitMeta* find(const std::string& label) const {
    for (const auto& o : orbits)
      if (o.label == label) return &o;
    return nullptr;
  }

  bool leq(const std::string& a, const std::string& b) const {
    if (a == b) return find(a) != nullptr;
    const auto* ob = find(b);
    if (!ob) throw std::out_of_range("unknown orbit " + b);
    return std::find(ob->lower.begin(), ob->lower.end(), a) != ob->lower.end();
  }

  std::set<std::string> strictly_below(const std::string& label) const {
    const auto* o = find(label);
    if (!o) throw std::out_of_range("unknown orbit " + label);
    return {o->lower.begin(), o->lower.end()};
  }
};

/// Reads `<orbit>\t<comma-separated lower orbits>\t<A-group order>` rows; the lower lists must form a strict partial order.
inline OrbitPoset load_orbit_meta(std::istream& in) {
  OrbitPoset p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = detail::split_tabs(line);
    if (f[0] == "#group") {
      if (f.size() > 1) p.group_label = f[1];
      continue;
    }
    if (f[0].rfind('#', 0) == 0) continue;
    if (f.size() != 3) throw data_error(detail::at(lineno, 1) + "expected 3 tab-separated fields");
    OrbitMeta m;
    m.label = f[0];
    if (m.label.empty()) throw data_error(detail::at(lineno, 1) + "empty orbit label");
    std::string cur;
    for (char c : f[1] + ",") {
      if (c == ',') {
        if (!cur.empty()) m.lower.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    Integer a = detail::parse_integer(f[2], lineno, 3);
    if (a < 1) throw data_error(detail::at(lineno, 3) + "component group order must be positive");
    m.component_group_order = a.convert_to<int>();
    if (p.find(m.label)) throw data_error(detail::at(lineno, 1) + "duplicate orbit " + m.label);
    p.orbits.push_back(std::move(m));
  }
  for (const auto& o : p.orbits) {
    std::set<std::string> below(o.lower.begin(), o.lower.end());
    if (below.size() != o.lower.size()) throw data_error("orbit " + o.label + " lists a lower orbit twice");
    if (below.count(o.label)) throw data_error("orbit " + o.label + " lies strictly below itself");
    for (const auto& b : o.lower) {
      const auto* ob = p.find(b);
      if (!ob) throw data_error("orbit " + o.label + " lists unknown lower orbit " + b);
      for (const auto& c : ob->lower)
        if (!below.count(c)) throw data_error("closure order not transitive: " + c + " < " + b + " < " + o.label);
    }
  }
  return p;
}

inline std::vector<PairLabel> defect_zero_pairs(const SpringerTable& t, int ell) {
  std::vector<PairLabel> out;
  for (const auto& r : t.rows)
    if (defect(t.degree.at(r.character), t.group_order, ell) == 0) out.push_back(r.pair());
  return out;
}

/// Pairs grouped by the block of their Springer character; outer index is the block number.
inline std::vector<std::vector<PairLabel>> block_pair_partition(const SpringerTable& t, const CharacterTable& w,
                                                                const BlockPartition& b) {
  if (b.block_of.size() != w.irr_count()) throw data_error("block partition does not match the character table");
  std::vector<std::vector<PairLabel>> out(b.blocks.size());
  for (std::size_t bi = 0; bi < b.blocks.size(); ++bi)
    for (auto chi : b.blocks[bi]) {
      auto row = t.find_character(label_string(w.irr_labels[chi]));
      if (!row) throw data_error("character " + label_string(w.irr_labels[chi]) + " has no Springer pair");
      out[bi].push_back(t.rows[*row].pair());
    }
  return out;
}

// ---------------------------------------------------------------------------
// Reference lists of the two block computations

struct ReferenceCase {
  std::string name;
  int ell = 0;
  std::vector<PairLabel> defect_zero;
  std::vector<std::vector<PairLabel>> blocks;              // B_1, B_2, ...
  std::vector<std::pair<PairLabel, int>> idempotent_rows;  // pair, i for e_i
};

inline const ReferenceCase& reference_e8_l7() {
  static const ReferenceCase c = {
      "E8-l7",
      7,
      {{"E7(a5)", "triv"},   {"A4+A3", "triv"},      {"D5(a1)", "triv"},     {"D4(a1)+A1", "21"},   {"2A2+A1", "triv"},
       {"E7(a5)", "21"},     {"D5", "triv"},         {"D5(a1)", "11"},       {"D4(a1)+A1", "111"},  {"2A2", "triv"},
       {"E7(a5)", "111"},    {"E6(a3)", "triv"},     {"2A3", "triv"},        {"A3+2A1", "triv"},    {"A3", "triv"},
       {"E6(a3)+A1", "triv"}, {"D4+A2", "triv"},     {"D4(a1)+A2", "triv"},  {"2A2+2A1", "triv"},   {"A2+2A1", "triv"},
       {"E6(a3)+A1", "11"},  {"D4+A2", "11"},        {"D4(a1)+A2", "11"},    {"D4", "triv"},        {"A2+A1", "triv"},
       {"D6(a2)", "triv"},   {"A4+A2+A1", "triv"},   {"D4+A1", "triv"},      {"D4(a1)", "triv"},    {"A2", "triv"},
       {"D6(a2)", "11"},     {"A4+A2", "triv"},      {"A3+A2+A1", "triv"},   {"D4(a1)", "21"},      {"A2", "11"},
       {"D5(a1)+A2", "triv"}, {"A4+2A1", "triv"},    {"A4", "triv"},         {"D4(a1)", "111"},     {"3A1", "triv"},
       {"A5+A1", "triv"},    {"A4+2A1", "11"},       {"D4(a1)+A1", "triv"},  {"A3+A1", "triv"},     {"2A1", "triv"}},
      {{{"0", "triv"}, {"2A2", "11"}, {"A4+A1", "triv"}, {"D5(a1)+A1", "triv"}},
       {{"4A1", "triv"}, {"A3+A2", "11"}, {"A5", "triv"}},
       {{"A1", "triv"}, {"A2+A1", "11"}, {"A4", "11"}, {"E6(a3)", "11"}},
       {{"A2+3A1", "triv"}, {"A3+A2", "triv"}, {"A4+A1", "11"}}},
      {{{"0", "triv"}, 1},
       {{"A1", "triv"}, 3},
       {{"2A2", "11"}, 1},
       {{"A2+A1", "11"}, 3},
       {{"A3+A2", "11"}, 2},
       {{"A3+A2", "triv"}, 4},
       {{"4A1", "triv"}, 2},
       {{"A2+3A1", "triv"}, 4},
       {{"A4+A1", "triv"}, 1},
       {{"A4", "11"}, 3},
       {{"A4+A1", "11"}, 4},
       {{"A5", "triv"}, 2},
       {{"D5(a1)+A1", "triv"}, 1},
       {{"E6(a3)", "11"}, 3}},
  };
  return c;
}

inline const ReferenceCase& reference_b4_l3() {
  static const ReferenceCase c = {
      "B4-l3",
      3,
      {{"51111", "triv"}, {"51111", "eps"}, {"333", "triv"}, {"33111", "eps"}, {"32211", "triv"}, {"2211111", "triv"}},
      {{{"111111111", "triv"}, {"22221", "triv"}},
       {{"3111111", "triv"}, {"33111", "triv"}},
       {{"32211", "eps"}, {"522", "triv"}},
       {{"3111111", "eps"}}},
      {{{"111111111", "triv"}, 1},
       {{"22221", "triv"}, 1},
       {{"3111111", "triv"}, 2},
       {{"33111", "triv"}, 2},
       {{"32211", "eps"}, 3},
       {{"522", "triv"}, 3},
       {{"3111111", "eps"}, 4}},
  };
  return c;
}

// ---------------------------------------------------------------------------
// Reports

struct ReportRow {
  std::string check;
  std::string subject;
  bool pass = true;
  bool informational = false;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<ReportRow> rows;

  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.informational || r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.informational && !r.pass; }));
  }
};

/// Data directory: $MODSPRINGER_DATA_DIR if set, otherwise the bundled location.
inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("MODSPRINGER_DATA_DIR"); env && *env) return env;
  return MODSPRINGER_DATA_DIR;
}

inline std::ifstream open_data_file(const std::filesystem::path& dir, const std::string& name) {
  auto path = dir / name;
  std::ifstream in(path);
  if (!in) throw data_error("missing data file " + path.string());
  return in;
}

namespace detail {

inline std::string join_pairs(const std::vector<PairLabel>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + pair_string(ps[i]);
  return s.empty() ? "none" : s;
}

inline std::vector<PairLabel> set_minus(const std::set<PairLabel>& a, const std::set<PairLabel>& b) {
  std::vector<PairLabel> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ReportRow set_equality_row(const std::string& check, const std::string& subject,
                                  const std::set<PairLabel>& computed, const std::set<PairLabel>& expected) {
  auto extra = set_minus(computed, expected);
  auto missing = set_minus(expected, computed);
  ReportRow r{check, subject, extra.empty() && missing.empty(), false, {}};
  r.detail = std::to_string(computed.size()) + " computed, " + std::to_string(expected.size()) + " listed";
  if (!r.pass) r.detail += "; unexpected " + join_pairs(extra) + "; missing " + join_pairs(missing);
  return r;
}

// Shared part of both reports. `on_x` is the pair set the block lists refer to.
inline void block_checks(Report& rep, const ReferenceCase& ref, const SpringerTable& t, const CharacterTable& w,
                         const BlockPartition& b, const std::set<PairLabel>& on_x) {
  auto block_of_pair = [&](const PairLabel& p) -> std::optional<std::size_t> {
    auto row = t.find(p);
    if (!row) return std::nullopt;
    return b.block_of[w.irr_index(t.rows[*row].character)];
  };

  // listed defect-0 pairs
  for (const auto& p : ref.defect_zero) {
    auto row = t.find(p);
    ReportRow r{"defect-0", pair_string(p), false, false, {}};
    if (!row) {
      r.detail = "pair not in the Springer table";
    } else {
      const auto& chi = t.rows[*row].character;
      int d = defect(t.degree.at(chi), t.group_order, ref.ell);
      r.pass = d == 0;
      r.detail = chi + " of degree " + t.degree.at(chi).str() + ", defect " + std::to_string(d);
    }
    rep.rows.push_back(r);
  }

  std::set<PairLabel> nonzero_on_x, listed_blocks;
  for (const auto& p : on_x)
    if (b.defects[w.irr_index(t.rows[*t.find(p)].character)] > 0) nonzero_on_x.insert(p);
  for (const auto& blk : ref.blocks) listed_blocks.insert(blk.begin(), blk.end());
  rep.rows.push_back(set_equality_row("positive-defect pairs", "X", nonzero_on_x, listed_blocks));

  // listed blocks against computed blocks, matched as sets; numbering by first appearance
  std::vector<std::optional<std::size_t>> matched(ref.blocks.size());
  for (std::size_t i = 0; i < ref.blocks.size(); ++i) {
    const auto& blk = ref.blocks[i];
    ReportRow r{"block", "B" + std::to_string(i + 1), false, false, {}};
    auto first = block_of_pair(blk.front());
    if (!first) {
      r.detail = pair_string(blk.front()) + " not in the Springer table";
      rep.rows.push_back(r);
      continue;
    }
    std::set<PairLabel> computed;
    for (const auto& p : nonzero_on_x)
      if (block_of_pair(p) == first) computed.insert(p);
    auto eq = set_equality_row("block", r.subject, computed, std::set<PairLabel>(blk.begin(), blk.end()));
    r.pass = eq.pass;
    r.detail = "computed block " + std::to_string(*first + 1) + " of " + std::to_string(b.blocks.size()) + ": " + eq.detail;
    if (r.pass) matched[i] = first;
    rep.rows.push_back(r);
  }
  std::set<std::size_t> distinct;
  for (const auto& m : matched)
    if (m) distinct.insert(*m);
  rep.rows.push_back({"distinct blocks", "B1..B" + std::to_string(ref.blocks.size()),
                      distinct.size() == ref.blocks.size(), false,
                      std::to_string(distinct.size()) + " distinct computed blocks"});

  // idempotent rows
  std::map<PairLabel, int> uses;
  for (const auto& [p, e] : ref.idempotent_rows) {
    ++uses[p];
    ReportRow r{"idempotent", pair_string(p) + " e" + std::to_string(e), false, false, {}};
    auto blk = block_of_pair(p);
    const auto& target = matched.at(static_cast<std::size_t>(e - 1));
    if (!blk) r.detail = "pair not in the Springer table";
    else if (!target) r.detail = "block B" + std::to_string(e) + " was not matched";
    else {
      r.pass = *blk == *target;
      r.detail = "pair in computed block " + std::to_string(*blk + 1) + ", B" + std::to_string(e) + " is computed block " +
                 std::to_string(*target + 1);
    }
    rep.rows.push_back(r);
  }

  // every listed pair appears exactly once among the idempotent rows and the defect-0 list
  std::map<PairLabel, int> listed;
  for (const auto& p : ref.defect_zero) ++listed[p];
  for (const auto& [p, n] : uses) listed[p] += n;
  std::vector<PairLabel> bad;
  for (const auto& p : listed_blocks)
    if (listed[p] != 1) bad.push_back(p);
  for (const auto& [p, n] : listed)
    if (n != 1 && std::find(bad.begin(), bad.end(), p) == bad.end()) bad.push_back(p);
  rep.rows.push_back({"coverage", "listed pairs", bad.empty(), false,
                      bad.empty() ? "each listed pair appears exactly once" : "repeated or missing: " + join_pairs(bad)});
}

inline Report report_e8(const std::filesystem::path& dir) {
  const auto& ref = reference_e8_l7();
  Report rep{ref.name, {}};
  auto wf = open_data_file(dir, "weyl_e8.tsv");
  auto w = read_character_table(wf);
  auto sf = open_data_file(dir, "springer_e8.tsv");
  auto t = load_springer_table(sf, w);
  auto of = open_data_file(dir, "orbits_e8.tsv");
  auto poset = load_orbit_meta(of);
  rep.rows.push_back({"data", "W(E8) and Springer table", true, false,
                      std::to_string(w.irr_count()) + " characters, degree squares sum to " + t.group_order.str()});

  const std::string top = "E8(a7)";
  auto x = poset.strictly_below(top);
  std::set<PairLabel> on_x;
  for (const auto& r : t.rows)
    if (x.count(r.orbit)) on_x.insert(r.pair());
  for (const auto& r : t.rows)
    if (!poset.find(r.orbit)) throw data_error("Springer table orbit " + r.orbit + " missing from the orbit data");

  auto b = l_blocks(w, ref.ell);
  std::size_t d0_on_x = 0;
  for (const auto& p : on_x)
    if (b.defects[w.irr_index(t.rows[*t.find(p)].character)] == 0) ++d0_on_x;
  rep.rows.push_back({"pairs on X", "closure of " + top + " minus itself", true, true,
                      std::to_string(on_x.size()) + " pairs, " + std::to_string(d0_on_x) + " of defect 0"});
  for (const auto& p : ref.defect_zero)
    if (!x.count(p.first))
      rep.rows.push_back({"closure", pair_string(p), true, true,
                          "orbit " + p.first + " is not below " + top + " in the bundled closure data"});

  block_checks(rep, ref, t, w, b, on_x);
  return rep;
}

inline Report report_b4(const std::filesystem::path& dir) {
  const auto& ref = reference_b4_l3();
  Report rep{ref.name, {}};
  auto w = build_character_table(WeylDescriptor::hyperoctahedral(4));
  auto sf = open_data_file(dir, "springer_b4.tsv");
  auto t = load_springer_table(sf, w);
  auto b = l_blocks(w, ref.ell);

  std::size_t d0 = 0;
  for (int d : b.defects) d0 += d == 0;
  rep.rows.push_back({"defect-0 characters", "W(B4)", d0 == 8, false, std::to_string(d0) + " of defect 0"});

  // X: orbits of SO(9) strictly below 531; X' drops the open orbit 441
  const NilpotentOrbit top{parse_partition("531")};
  const Partition open_orbit = parse_partition("441");
  std::set<PairLabel> on_x, on_x_prime;
  for (const auto& r : t.rows) {
    NilpotentOrbit o{parse_partition(r.orbit)};
    if (o == top || !closure_leq(o, top)) continue;
    on_x.insert(r.pair());
    if (o.partition != open_orbit) on_x_prime.insert(r.pair());
  }
  rep.rows.push_back({"pairs on X", "closure of 531 minus itself", on_x.size() == 14, false,
                      std::to_string(on_x.size()) + " pairs"});
  rep.rows.push_back({"pairs on X'", "X minus 441", on_x_prime.size() == 13, false,
                      std::to_string(on_x_prime.size()) + " pairs"});

  std::set<PairLabel> d0_on_x_prime;
  for (const auto& p : on_x_prime)
    if (b.defects[w.irr_index(t.rows[*t.find(p)].character)] == 0) d0_on_x_prime.insert(p);
  rep.rows.push_back(detail::set_equality_row("defect-0 pairs", "X'", d0_on_x_prime,
                                              std::set<PairLabel>(ref.defect_zero.begin(), ref.defect_zero.end())));
  for (const auto& p : detail::set_minus(on_x, on_x_prime))
    rep.rows.push_back({"outside X'", pair_string(p), true, true, "open orbit of X, treated outside the block argument"});

  detail::block_checks(rep, ref, t, w, b, on_x_prime);
  return rep;
}

}  // namespace detail

/// Reproduces the E8 (ell = 7) or B4 (ell = 3) block computation from bundled data.
inline Report reproduce_report(const std::string& which, const std::filesystem::path& data_dir = default_data_dir()) {
  if (which == "E8-l7") return detail::report_e8(data_dir);
  if (which == "B4-l3") return detail::report_b4(data_dir);
  throw std::invalid_argument("unknown report '" + which + "' (expected E8-l7 or B4-l3)");
}

}  // namespace modspringer

#endif  // MODSPRINGER_SPRINGERDATA_HPP
