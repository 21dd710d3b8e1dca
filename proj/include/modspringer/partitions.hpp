#ifndef MODSPRINGER_PARTITIONS_HPP
#define MODSPRINGER_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modspringer {

using Integer = boost::multiprecision::cpp_int;

struct size_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parity_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing sequence of positive integers. Always stored canonically.
class Partition {
 public:
  Partition() = default;

  // Accepts parts in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_) size_ += p;
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Zero beyond the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  // value -> multiplicity, ascending by value
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  // "(3,2,1)"; the empty partition prints as "()".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  // "531" when every part is a single digit, otherwise the comma form.
  std::string compact() const {
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; })) return str();
    std::string s;
    for (int p : parts_) s += static_cast<char>('0' + p);
    return s;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Accepts "(3,2,1)", "3,2,1", "()", and the digit-string form "321".
inline Partition parse_partition(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') t += c;
  std::vector<int> parts;
  if (t.empty()) return Partition{};
  if (t.find(',') == std::string::npos) {
    for (char c : t) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad partition: " + text);
      parts.push_back(c - '0');
    }
    return Partition(parts);
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition: " + text);
    parts.push_back(std::stoi(item));
  }
  return Partition(parts);
}

struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }
  bool operator==(const Bipartition&) const = default;
  auto operator<=>(const Bipartition&) const = default;

  std::string str() const { return "(" + first.str() + "," + second.str() + ")"; }
};

inline Bipartition parse_bipartition(const std::string& text) {
  // "((2,1),(1))": split at the comma separating the two inner groups
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 1)
      return {parse_partition(text.substr(1, i - 1)),
              parse_partition(text.substr(i + 1, text.size() - i - 2))};
  }
  throw std::invalid_argument("bad bipartition: " + text);
}

/// Lie type of a classical orbit family; A carries no parity constraint.
enum class Family { A, B, C, D };

inline char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

struct PartitionConstraint {
  enum class Kind { unconstrained, powers_of, l_regular, orbit_valid };
  Kind kind = Kind::unconstrained;
  int ell = 0;
  Family family = Family::A;

  static PartitionConstraint none() { return {}; }
  static PartitionConstraint powers(int ell) { return {Kind::powers_of, check_prime(ell), Family::A}; }
  static PartitionConstraint regular(int ell) { return {Kind::l_regular, check_prime(ell), Family::A}; }
  static PartitionConstraint orbit(Family f) { return {Kind::orbit_valid, 0, f}; }

 private:
  static int check_prime(int ell) {
    if (ell < 2) throw std::invalid_argument("constraint prime must be >= 2");
    for (int d = 2; d * d <= ell; ++d)
      if (ell % d == 0) throw std::invalid_argument("constraint modulus must be prime");
    return ell;
  }
};

inline Partition transpose(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(cols);
}

inline bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw size_mismatch_error("dominance_leq: sizes " + std::to_string(p.size()) + " and " +
                              std::to_string(q.size()));
  int sp = 0, sq = 0;
  for (std::size_t i = 0; i < std::max(p.length(), q.length()); ++i) {
    sp += p[i];
    sq += q[i];
    if (sp > sq) return false;
  }
  return true;
}

namespace detail {

inline void check_parity(int size, Family f) {
  if (f == Family::B && size % 2 != 1)
    throw parity_error("type B partitions have odd size, got " + std::to_string(size));
  if ((f == Family::C || f == Family::D) && size % 2 != 0)
    throw parity_error(std::string("type ") + family_letter(f) + " partitions have even size, got " +
                       std::to_string(size));
}

// Parts of this parity must occur with even multiplicity.
inline int restricted_parity(Family f) { return f == Family::C ? 1 : 0; }

}  // namespace detail

inline bool is_valid_orbit_partition(const Partition& p, Family f) {
  detail::check_parity(p.size(), f);
  if (f == Family::A) return true;
  int bad = detail::restricted_parity(f);
  for (auto [value, mult] : p.multiplicities())
    if (value % 2 == bad && mult % 2 != 0) return false;
  return true;
}

/// Largest family-valid partition dominated by p.
inline Partition collapse(const Partition& p, Family f) {
  detail::check_parity(p.size(), f);
  if (f == Family::A) return p;
  int bad = detail::restricted_parity(f);
  std::vector<int> v = p.parts();
  for (;;) {
    // largest value of restricted parity with odd multiplicity
    std::optional<int> target;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (v[i] % 2 == bad && (j - i) % 2 == 1) {
        target = static_cast<int>(j - 1);
        break;
      }
      i = j;
    }
    if (!target) break;
    std::size_t last = static_cast<std::size_t>(*target);
    int q = v[last];
    v[last] = q - 1;
    std::size_t k = last + 1;
    while (k < v.size() && v[k] >= q - 1) ++k;
    if (k == v.size()) v.push_back(0);
    v[k] += 1;
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  return Partition(v);
}

inline Partition add_padded(const Partition& p, const Partition& q) {
  std::vector<int> r(std::max(p.length(), q.length()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i] + q[i];
  return Partition(r);
}

namespace detail {

inline bool is_power_of(int value, int ell) {
  while (value % ell == 0) value /= ell;
  return value == 1;
}

inline bool satisfies(const Partition& p, const PartitionConstraint& c) {
  using K = PartitionConstraint::Kind;
  switch (c.kind) {
    case K::unconstrained:
      return true;
    case K::powers_of:
      return std::all_of(p.parts().begin(), p.parts().end(),
                         [&](int x) { return is_power_of(x, c.ell); });
    case K::l_regular:
      for (auto [value, mult] : p.multiplicities())
        if (mult >= c.ell) return false;
      return true;
    case K::orbit_valid:
      return is_valid_orbit_partition(p, c.family);
  }
  return false;
}

inline void generate(int remaining, int max_part, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    generate(remaining - part, part, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of n satisfying c, in ascending lexicographic order of part sequences.
inline std::vector<Partition> enumerate_partitions(int n, const PartitionConstraint& c = {}) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  using K = PartitionConstraint::Kind;
  if (c.kind == K::orbit_valid) {
    if (c.family == Family::B && n % 2 == 0) return {};
    if ((c.family == Family::C || c.family == Family::D) && n % 2 == 1) return {};
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::generate(n, n, cur, [&](const std::vector<int>& v) {
    Partition p(v);
    if (detail::satisfies(p, c)) out.push_back(std::move(p));
  });
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<Bipartition> enumerate_bipartitions(int n, std::optional<int> ell_regular = {}) {
  if (n < 0) throw std::invalid_argument("enumerate_bipartitions: negative size");
  PartitionConstraint c = ell_regular ? PartitionConstraint::regular(*ell_regular) : PartitionConstraint{};
  std::vector<std::vector<Partition>> by_size;
  for (int j = 0; j <= n; ++j) by_size.push_back(enumerate_partitions(j, c));
  std::vector<Bipartition> out;
  for (int j = 0; j <= n; ++j)
    for (const auto& a : by_size[j])
      for (const auto& b : by_size[n - j]) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of partitions of n.
inline Integer partition_count(int n) {
  std::vector<Integer> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

/// Number of partitions of n in which no part repeats ell or more times.
inline Integer regular_partition_count(int n, int ell) {
  std::vector<Integer> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    std::vector<Integer> next(n + 1, 0);
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k < ell && k * part <= m; ++k) next[m] += p[m - k * part];
    p = std::move(next);
  }
  return p[n];
}

/// Number of bipartitions of n, optionally restricted to ell-regular components.
inline Integer bipartition_count(int n, std::optional<int> ell_regular = {}) {
  Integer total = 0;
  for (int j = 0; j <= n; ++j) {
    if (ell_regular)
      total += regular_partition_count(j, *ell_regular) * regular_partition_count(n - j, *ell_regular);
    else
      total += partition_count(j) * partition_count(n - j);
  }
  return total;
}

/// Standard Young tableaux of shape p, by the hook-length formula.
inline Integer standard_count(const Partition& p) {
  Partition t = transpose(p);
  Integer num = 1, den = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j)
      den *= (p[i] - j - 1) + (t[j] - static_cast<int>(i) - 1) + 1;
  return num / den;
}

}  // namespace modspringer

#endif  // MODSPRINGER_PARTITIONS_HPP
