#ifndef MODSPRINGER_WEYLREP_HPP
#define MODSPRINGER_WEYLREP_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "modspringer/partitions.hpp"

namespace modspringer {

struct unsupported_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite Weyl group descriptor: S_n, (Z/2)^n x S_n, a named exceptional group, or a product.
struct WeylDescriptor {
  enum class Kind { symmetric, hyperoctahedral, exceptional, product };
  Kind kind = Kind::symmetric;
  int n = 0;
  std::string type;  // exceptional only: G2, F4, E6, E7, E8
  std::vector<WeylDescriptor> factors;

  static WeylDescriptor symmetric(int n) { return {Kind::symmetric, check_rank(n), {}, {}}; }
  static WeylDescriptor hyperoctahedral(int n) { return {Kind::hyperoctahedral, check_rank(n), {}, {}}; }
  static WeylDescriptor exceptional(const std::string& type) {
    static const std::vector<std::string> known = {"G2", "F4", "E6", "E7", "E8"};
    if (std::find(known.begin(), known.end(), type) == known.end())
      throw std::invalid_argument("unknown exceptional Weyl group " + type);
    return {Kind::exceptional, 0, type, {}};
  }
  static WeylDescriptor product(std::vector<WeylDescriptor> fs) {
    return {Kind::product, 0, {}, std::move(fs)};
  }

  bool operator==(const WeylDescriptor&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::symmetric:
        return "S" + std::to_string(n);
      case Kind::hyperoctahedral:
        return "W(B" + std::to_string(n) + ")";
      case Kind::exceptional:
        return "W(" + type + ")";
      case Kind::product: {
        if (factors.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].str();
        return s;
      }
    }
    return {};
  }

 private:
  static int check_rank(int n) {
    if (n < 0) throw std::invalid_argument("negative Weyl group rank");
    return n;
  }
};

inline Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Fundamental degrees of the exceptional Weyl groups.
inline const std::vector<int>& exceptional_degrees(const std::string& type) {
  static const std::map<std::string, std::vector<int>> table = {
      {"G2", {2, 6}},
      {"F4", {2, 6, 8, 12}},
      {"E6", {2, 5, 6, 8, 9, 12}},
      {"E7", {2, 6, 8, 10, 12, 14, 18}},
      {"E8", {2, 8, 12, 14, 18, 20, 24, 30}},
  };
  auto it = table.find(type);
  if (it == table.end()) throw std::invalid_argument("unknown exceptional type " + type);
  return it->second;
}

inline Integer weyl_order(const WeylDescriptor& g) {
  using K = WeylDescriptor::Kind;
  switch (g.kind) {
    case K::symmetric:
      return factorial(g.n);
    case K::hyperoctahedral:
      return (Integer(1) << g.n) * factorial(g.n);
    case K::exceptional: {
      Integer r = 1;
      for (int d : exceptional_degrees(g.type)) r *= d;
      return r;
    }
    case K::product: {
      Integer r = 1;
      for (const auto& f : g.factors) r *= weyl_order(f);
      return r;
    }
  }
  return 1;
}

/// Conjugacy class of (Z/2) wr S_n: cycles whose sign product is +1, and those with -1.
struct SignedCycleType {
  Partition positive_part;
  Partition negative_part;

  int size() const { return positive_part.size() + negative_part.size(); }
  bool operator==(const SignedCycleType&) const = default;
  auto operator<=>(const SignedCycleType&) const = default;
  std::string str() const { return "(" + positive_part.str() + "," + negative_part.str() + ")"; }
};

using IrrLabel = std::variant<Partition, Bipartition, std::string>;
using ClassLabel = std::variant<Partition, SignedCycleType, std::string>;

inline std::string label_string(const IrrLabel& l) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
          return v;
        else
          return v.str();
      },
      l);
}

inline std::string label_string(const ClassLabel& l) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
          return v;
        else
          return v.str();
      },
      l);
}

namespace detail {

// Beta-set of a partition with exactly `length` beads.
inline std::vector<int> beta_set(const Partition& p, std::size_t length) {
  std::vector<int> b(length);
  for (std::size_t i = 0; i < length; ++i) b[i] = p[i] + static_cast<int>(length - 1 - i);
  return b;  // strictly decreasing
}

// All ways to remove an r-rim hook: (resulting beta set, (-1)^height).
inline std::vector<std::pair<std::vector<int>, int>> remove_hooks(const std::vector<int>& beta, int r) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    out.emplace_back(std::move(next), between % 2 ? -1 : 1);
  }
  return out;
}

// Murnaghan-Nakayama over a bipartition; negative cycles removed from the second
// component pick up an extra sign. Cycles are consumed in the given order.
class SignedMN {
 public:
  SignedMN(std::vector<std::pair<int, bool>> cycles) : cycles_(std::move(cycles)) {}

  Integer value(const std::vector<int>& a, const std::vector<int>& b, std::size_t idx = 0) {
    if (idx == cycles_.size()) return 1;
    auto key = std::make_tuple(a, b, idx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto [r, negative] = cycles_[idx];
    Integer total = 0;
    for (auto& [na, s] : remove_hooks(a, r)) total += s * value(na, b, idx + 1);
    for (auto& [nb, s] : remove_hooks(b, r)) total += (negative ? -s : s) * value(a, nb, idx + 1);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<std::pair<int, bool>> cycles_;
  std::map<std::tuple<std::vector<int>, std::vector<int>, std::size_t>, Integer> memo_;
};

inline std::vector<std::pair<int, bool>> cycle_list(const Partition& pos, const Partition& neg) {
  std::vector<std::pair<int, bool>> c;
  for (int x : pos.parts()) c.emplace_back(x, false);
  for (int x : neg.parts()) c.emplace_back(x, true);
  // longest first keeps the recursion shallow
  std::stable_sort(c.begin(), c.end(), [](auto& x, auto& y) { return x.first > y.first; });
  return c;
}

// Centralizer order z for a cycle type with the given per-length weight (1 for S_n, 2 for signed).
inline Integer centralizer_order(const Partition& p, int weight) {
  Integer z = 1;
  for (auto [len, mult] : p.multiplicities()) {
    for (int k = 0; k < mult; ++k) z *= Integer(weight) * len;
    z *= factorial(mult);
  }
  return z;
}

inline int valuation(Integer x, int ell) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

inline void require_prime(int ell) {
  if (ell < 2) throw std::invalid_argument("expected a prime, got " + std::to_string(ell));
  for (int d = 2; d * d <= ell; ++d)
    if (ell % d == 0) throw std::invalid_argument("expected a prime, got " + std::to_string(ell));
}

}  // namespace detail

inline Integer symmetric_character_value(const Partition& lambda, const Partition& alpha) {
  if (lambda.size() != alpha.size())
    throw size_mismatch_error("symmetric_character_value: |lambda| != |alpha|");
  detail::SignedMN mn(detail::cycle_list(alpha, {}));
  std::size_t len = lambda.length();
  return mn.value(detail::beta_set(lambda, len), {});
}

/// Value of the hyperoctahedral irreducible (a, b) on the class of signed cycle type c.
inline Integer hyperoctahedral_character_value(const Bipartition& chi, const SignedCycleType& c) {
  if (chi.size() != c.size()) throw size_mismatch_error("hyperoctahedral_character_value: sizes differ");
  detail::SignedMN mn(detail::cycle_list(c.positive_part, c.negative_part));
  return mn.value(detail::beta_set(chi.first, chi.first.length()),
                  detail::beta_set(chi.second, chi.second.length()));
}

/// Exact character table; values are indexed [irr][class].
struct CharacterTable {
  WeylDescriptor group;
  std::vector<IrrLabel> irr_labels;
  std::vector<ClassLabel> class_labels;
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Integer>> values;
  std::size_t identity_class = 0;

  std::size_t irr_count() const { return irr_labels.size(); }
  std::size_t class_count() const { return class_labels.size(); }
  const Integer& degree(std::size_t chi) const { return values.at(chi).at(identity_class); }
  Integer order() const { return weyl_order(group); }

  std::optional<std::size_t> find_irr(const std::string& label) const {
    for (std::size_t i = 0; i < irr_labels.size(); ++i)
      if (label_string(irr_labels[i]) == label) return i;
    return std::nullopt;
  }

  std::size_t irr_index(const std::string& label) const {
    if (auto i = find_irr(label)) return *i;
    throw std::out_of_range("no irreducible labelled " + label + " in " + group.str());
  }

  std::optional<std::size_t> find_class(const std::string& label) const {
    for (std::size_t i = 0; i < class_labels.size(); ++i)
      if (label_string(class_labels[i]) == label) return i;
    return std::nullopt;
  }

  // Sum over classes of |C| chi(C) psi(C); Weyl group characters are rational.
  Integer pairing(const std::vector<Integer>& chi, const std::vector<Integer>& psi) const {
    Integer s = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) s += class_sizes[c] * chi[c] * psi[c];
    return s;
  }

  /// Throws data_error describing the first violated invariant.
  void validate() const {
    const std::size_t k = class_labels.size();
    if (class_sizes.size() != k) throw data_error("class size count differs from class count");
    if (irr_labels.size() != k) throw data_error("table is not square: " + std::to_string(irr_labels.size()) +
                                                 " irreducibles, " + std::to_string(k) + " classes");
    if (values.size() != k) throw data_error("value matrix has wrong row count");
    for (const auto& row : values)
      if (row.size() != k) throw data_error("value matrix has a ragged row");
    if (identity_class >= k || class_sizes[identity_class] != 1) throw data_error("identity class is not a singleton");
    Integer total = 0;
    for (const auto& s : class_sizes) {
      if (s <= 0) throw data_error("nonpositive class size");
      total += s;
    }
    const Integer order = weyl_order(group);
    if (total != order) throw data_error("class sizes sum to " + total.str() + ", expected " + order.str());
    for (std::size_t i = 0; i < k; ++i) {
      if (degree(i) < 1) throw data_error("nonpositive degree for " + label_string(irr_labels[i]));
      for (std::size_t j = i; j < k; ++j) {
        Integer p = pairing(values[i], values[j]);
        Integer expect = i == j ? order : Integer(0);
        if (p != expect)
          throw data_error("row orthogonality fails for " + label_string(irr_labels[i]) + ", " +
                           label_string(irr_labels[j]));
      }
    }
    // column orthogonality: sum_chi chi(C) chi(D) = delta_CD |W| / |C|
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = c; d < k; ++d) {
        Integer s = 0;
        for (std::size_t i = 0; i < k; ++i) s += values[i][c] * values[i][d];
        Integer expect = c == d ? Integer(order / class_sizes[c]) : Integer(0);
        if (s != expect || (c == d && order % class_sizes[c] != 0))
          throw data_error("column orthogonality fails for classes " + label_string(class_labels[c]) + ", " +
                           label_string(class_labels[d]));
      }
  }
};

/// Symmetric or hyperoctahedral table, built from Murnaghan-Nakayama.
inline CharacterTable build_character_table(const WeylDescriptor& g) {
  using K = WeylDescriptor::Kind;
  CharacterTable t;
  t.group = g;
  if (g.kind == K::symmetric) {
    auto parts = enumerate_partitions(g.n);
    const Integer order = weyl_order(g);
    for (const auto& p : parts) {
      t.irr_labels.emplace_back(p);
      t.class_labels.emplace_back(p);
      t.class_sizes.push_back(order / detail::centralizer_order(p, 1));
    }
    for (const auto& lambda : parts) {
      std::vector<Integer> row;
      for (const auto& alpha : parts) row.push_back(symmetric_character_value(lambda, alpha));
      t.values.push_back(std::move(row));
    }
    t.identity_class = 0;  // (1^n) sorts first
    return t;
  }
  if (g.kind == K::hyperoctahedral) {
    auto bips = enumerate_bipartitions(g.n);
    const Integer order = weyl_order(g);
    std::vector<SignedCycleType> classes;
    for (const auto& b : bips) classes.push_back({b.first, b.second});
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = classes[c];
      t.class_labels.emplace_back(cls);
      Integer z = detail::centralizer_order(cls.positive_part, 2) * detail::centralizer_order(cls.negative_part, 2);
      t.class_sizes.push_back(order / z);
      if (cls.negative_part.empty() && cls.positive_part.parts() == std::vector<int>(g.n, 1)) t.identity_class = c;
    }
    for (const auto& b : bips) {
      t.irr_labels.emplace_back(b);
      std::vector<Integer> row;
      for (const auto& cls : classes) row.push_back(hyperoctahedral_character_value(b, cls));
      t.values.push_back(std::move(row));
    }
    return t;
  }
  throw unsupported_error("build_character_table: only symmetric and hyperoctahedral groups are built; " +
                          g.str() + " must be ingested");
}

/// v_ell(|W|) - v_ell(degree).
inline int defect(const Integer& degree, const Integer& group_order, int ell) {
  detail::require_prime(ell);
  if (degree < 1 || group_order < degree) throw std::invalid_argument("defect: need 1 <= degree <= |W|");
  int d = detail::valuation(group_order, ell) - detail::valuation(degree, ell);
  if (d < 0) throw std::invalid_argument("defect: ell-valuation of the degree exceeds that of |W|");
  return d;
}

struct BlockPartition {
  int prime = 0;
  std::vector<std::vector<std::size_t>> blocks;  // irr indices; blocks ordered by least member
  std::vector<int> defects;                       // per irr index
  std::vector<std::size_t> block_of;              // per irr index

  bool same_block(std::size_t a, std::size_t b) const { return block_of.at(a) == block_of.at(b); }
};

/// ell-blocks via congruence of the integral central characters |C| chi(C) / chi(1).
inline BlockPartition l_blocks(const CharacterTable& t, int ell) {
  detail::require_prime(ell);
  const std::size_t k = t.irr_count();
  const Integer order = t.order();
  BlockPartition bp;
  bp.prime = ell;
  bp.block_of.assign(k, 0);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& deg = t.degree(i);
    std::vector<int> residues;
    residues.reserve(t.class_count());
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      Integer num = t.class_sizes[c] * t.values[i][c];
      if (num % deg != 0)
        throw data_error("non-integral central character for " + label_string(t.irr_labels[i]) + " on class " +
                         label_string(t.class_labels[c]));
      Integer w = (num / deg) % ell;
      if (w < 0) w += ell;
      residues.push_back(w.convert_to<int>());
    }
    int d = defect(deg, order, ell);
    bp.defects.push_back(d);
    // defect-zero characters are alone in their block; key them apart explicitly
    if (d == 0) residues.push_back(-1 - static_cast<int>(i));
    auto [it, inserted] = index.emplace(residues, bp.blocks.size());
    if (inserted) bp.blocks.emplace_back();
    bp.blocks[it->second].push_back(i);
    bp.block_of[i] = it->second;
  }
  return bp;
}

/// Product over i of the number of ell-regular bipartitions of m_i.
inline Integer modular_irr_count_wreath(const std::vector<int>& m, int ell) {
  detail::require_prime(ell);
  if (ell == 2) throw std::invalid_argument("modular_irr_count_wreath: ell = 2 is not supported (never rather good here)");
  Integer r = 1;
  for (int mi : m) {
    if (mi < 0) throw std::invalid_argument("negative multiplicity");
    r *= bipartition_count(mi, ell);
  }
  return r;
}

/// Multiplicities of each irreducible of `amb` in the induced character, via Frobenius reciprocity.
inline std::vector<std::pair<IrrLabel, Integer>> induce_character(const CharacterTable& sub, const CharacterTable& amb,
                                                                  const std::vector<std::size_t>& fusion,
                                                                  std::size_t chi) {
  if (fusion.size() != sub.class_count())
    throw data_error("fusion map covers " + std::to_string(fusion.size()) + " of " +
                     std::to_string(sub.class_count()) + " classes");
  for (auto f : fusion)
    if (f >= amb.class_count()) throw data_error("fusion map points outside the ambient class list");
  const Integer sub_order = sub.order();
  std::vector<std::pair<IrrLabel, Integer>> out;
  for (std::size_t psi = 0; psi < amb.irr_count(); ++psi) {
    Integer s = 0;
    for (std::size_t c = 0; c < sub.class_count(); ++c)
      s += sub.class_sizes[c] * sub.values[chi][c] * amb.values[psi][fusion[c]];
    if (s % sub_order != 0)
      throw data_error("non-integral induction multiplicity for " + label_string(amb.irr_labels[psi]));
    Integer m = s / sub_order;
    if (m < 0) throw data_error("negative induction multiplicity for " + label_string(amb.irr_labels[psi]));
    if (m > 0) out.emplace_back(amb.irr_labels[psi], m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TSV ingestion

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      f.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}

inline Integer parse_integer(const std::string& s, std::size_t line, std::size_t column) {
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1);
  if (!ok)
    throw data_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected integer, got '" +
                     s + "'");
  return Integer(s);
}

inline WeylDescriptor parse_weyl_name(const std::string& name) {
  if (name.size() > 3 && name.rfind("W(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(2, name.size() - 3);
    if (inner.size() > 1 && inner[0] == 'B') return WeylDescriptor::hyperoctahedral(std::stoi(inner.substr(1)));
    return WeylDescriptor::exceptional(inner);
  }
  if (name.size() > 1 && name[0] == 'S') return WeylDescriptor::symmetric(std::stoi(name.substr(1)));
  throw data_error("unknown group name '" + name + "'");
}

}  // namespace detail

/// Reads the `#group / #classes / #sizes / rows` format; labels are kept as opaque strings.
inline CharacterTable read_character_table(std::istream& in) {
  CharacterTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_group = false, have_classes = false, have_sizes = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = detail::split_tabs(line);
    if (f[0] == "#group") {
      if (f.size() < 2) throw data_error("line " + std::to_string(lineno) + ": #group needs a name");
      t.group = detail::parse_weyl_name(f[1]);
      have_group = true;
    } else if (f[0] == "#classes") {
      for (std::size_t i = 1; i < f.size(); ++i) t.class_labels.emplace_back(f[i]);
      have_classes = true;
    } else if (f[0] == "#sizes") {
      for (std::size_t i = 1; i < f.size(); ++i) t.class_sizes.push_back(detail::parse_integer(f[i], lineno, i + 1));
      have_sizes = true;
    } else if (f[0].rfind('#', 0) == 0) {
      continue;
    } else {
      if (!have_classes) throw data_error("line " + std::to_string(lineno) + ": character row before #classes");
      if (f.size() != t.class_labels.size() + 1)
        throw data_error("line " + std::to_string(lineno) + ": expected " + std::to_string(t.class_labels.size()) +
                         " values, got " + std::to_string(f.size() - 1));
      t.irr_labels.emplace_back(f[0]);
      std::vector<Integer> row;
      for (std::size_t i = 1; i < f.size(); ++i) row.push_back(detail::parse_integer(f[i], lineno, i + 1));
      t.values.push_back(std::move(row));
    }
  }
  if (!have_group || !have_classes || !have_sizes) throw data_error("character table is missing a header row");
  // identity: a singleton class on which every character is positive and maximal
  bool found = false;
  for (std::size_t c = 0; c < t.class_sizes.size() && !found; ++c) {
    if (t.class_sizes[c] != 1) continue;
    bool ok = true;
    for (const auto& row : t.values)
      for (const auto& v : row)
        if (row[c] < 1 || abs(v) > row[c]) ok = false;
    if (ok) {
      t.identity_class = c;
      found = true;
    }
  }
  if (!found) throw data_error("no identity class found");
  t.validate();
  return t;
}

inline void write_character_table(std::ostream& out, const CharacterTable& t) {
  out << "#group\t" << t.group.str() << "\t" << weyl_order(t.group) << "\n#classes";
  for (const auto& c : t.class_labels) out << '\t' << label_string(c);
  out << "\n#sizes";
  for (const auto& s : t.class_sizes) out << '\t' << s;
  out << '\n';
  for (std::size_t i = 0; i < t.irr_count(); ++i) {
    out << label_string(t.irr_labels[i]);
    for (const auto& v : t.values[i]) out << '\t' << v;
    out << '\n';
  }
}

/// `<sub-class>\t<amb-class>` rows, resolved to ambient class indices in the subgroup's class order.
inline std::vector<std::size_t> read_fusion(std::istream& in, const CharacterTable& sub, const CharacterTable& amb) {
  std::vector<std::optional<std::size_t>> map(sub.class_count());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = detail::split_tabs(line);
    if (f.size() != 2) throw data_error("fusion line " + std::to_string(lineno) + ": expected two columns");
    auto s = sub.find_class(f[0]);
    auto a = amb.find_class(f[1]);
    if (!s || !a) throw data_error("fusion line " + std::to_string(lineno) + ": unknown class label");
    map[*s] = *a;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map[i]) throw data_error("fusion map is incomplete: no image for class " + label_string(sub.class_labels[i]));
    out.push_back(*map[i]);
  }
  return out;
}

}  // namespace modspringer

#endif  // MODSPRINGER_WEYLREP_HPP
