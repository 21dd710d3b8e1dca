#ifndef MODSPRINGER_ORBITS_HPP
#define MODSPRINGER_ORBITS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modspringer/partitions.hpp"
#include "modspringer/weylrep.hpp"

namespace modspringer {

enum class RootType { A, B, C, D, G2, F4, E6, E7, E8 };
enum class Isogeny { simply_connected, adjoint, GL, SO, Spin, Sp };

inline std::string root_type_name(RootType t) {
  static const char* names[] = {"A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8"};
  return names[static_cast<int>(t)];
}

inline bool is_classical(RootType t) { return t == RootType::A || t == RootType::B || t == RootType::C || t == RootType::D; }

struct Factor {
  RootType type = RootType::A;
  int rank = 0;
  Isogeny isogeny = Isogeny::simply_connected;

  bool operator==(const Factor&) const = default;
};

/// Cyclic invariants of the center of the simply connected group of this type.
inline std::vector<int> center_moduli(RootType t, int rank) {
  switch (t) {
    case RootType::A:
      return rank >= 1 ? std::vector<int>{rank + 1} : std::vector<int>{};
    case RootType::B:
    case RootType::C:
      return {2};
    case RootType::D:
      if (rank <= 1) return {};  // SO(2) is a torus
      return rank % 2 ? std::vector<int>{4} : std::vector<int>{2, 2};
    case RootType::E6:
      return {3};
    case RootType::E7:
      return {2};
    default:
      return {};
  }
}

/// Bad primes, with the low-rank coincidences B1 = C1 = A1, D2 = A1xA1, D3 = A3 applied.
inline std::vector<int> bad_primes(RootType t, int rank) {
  switch (t) {
    case RootType::A:
      return {};
    case RootType::B:
    case RootType::C:
      return rank <= 1 ? std::vector<int>{} : std::vector<int>{2};
    case RootType::D:
      return rank <= 3 ? std::vector<int>{} : std::vector<int>{2};
    case RootType::E8:
      return {2, 3, 5};
    default:
      return {2, 3};
  }
}

/// Connected reductive group: product of almost-simple factors, a central torus, and a
/// finite central kernel. Kernel generators are flat residue vectors over the
/// concatenated center_moduli of all factors, in factor order.
struct GroupForm {
  std::vector<Factor> factors;
  int central_torus_rank = 0;
  std::vector<std::vector<int>> kernel;

  bool operator==(const GroupForm&) const = default;

  std::vector<int> moduli() const {
    std::vector<int> m;
    for (const auto& f : factors) {
      auto fm = center_moduli(f.type, f.rank);
      m.insert(m.end(), fm.begin(), fm.end());
    }
    return m;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " x ";
      const auto& f = factors[i];
      auto cls = root_type_name(f.type) + std::to_string(f.rank);
      switch (f.isogeny) {
        case Isogeny::GL: s += "GL(" + std::to_string(f.rank + 1) + ")"; break;
        case Isogeny::SO: s += "SO(" + std::to_string(f.type == RootType::B ? 2 * f.rank + 1 : 2 * f.rank) + ")"; break;
        case Isogeny::Spin: s += "Spin(" + std::to_string(f.type == RootType::B ? 2 * f.rank + 1 : 2 * f.rank) + ")"; break;
        case Isogeny::Sp: s += "Sp(" + std::to_string(2 * f.rank) + ")"; break;
        case Isogeny::adjoint: s += cls + "_ad"; break;
        case Isogeny::simply_connected: s += cls + "_sc"; break;
      }
    }
    if (factors.empty()) s = "1";
    if (!kernel.empty()) {
      s += " / <";
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        s += i ? ";" : "";
        for (std::size_t j = 0; j < kernel[i].size(); ++j) s += (j ? "," : "") + std::to_string(kernel[i][j]);
      }
      s += ">";
    }
    return s;
  }

  static GroupForm single(RootType t, int rank, Isogeny iso) {
    check_isogeny(t, iso);
    if (rank < 0 || (t != RootType::A && rank < 1)) throw std::invalid_argument("invalid rank for " + root_type_name(t));
    GroupForm g;
    g.factors.push_back({t, rank, iso});
    if (iso == Isogeny::GL) g.central_torus_rank = 1;
    return g;
  }

  static GroupForm gl(int n) { return single(RootType::A, check_positive(n) - 1, Isogeny::GL); }
  static GroupForm sl(int n) { return single(RootType::A, check_positive(n) - 1, Isogeny::simply_connected); }
  static GroupForm pgl(int n) { return single(RootType::A, check_positive(n) - 1, Isogeny::adjoint); }
  static GroupForm sp(int m) {
    if (m < 2 || m % 2) throw std::invalid_argument("Sp(m) needs even m >= 2");
    return single(RootType::C, m / 2, Isogeny::Sp);
  }
  static GroupForm so(int m) { return orthogonal(m, Isogeny::SO); }
  static GroupForm spin(int m) { return orthogonal(m, Isogeny::Spin); }
  static GroupForm simply_connected(RootType t, int rank) { return single(t, rank, Isogeny::simply_connected); }
  static GroupForm adjoint(RootType t, int rank) { return single(t, rank, Isogeny::adjoint); }

  static GroupForm product(const std::vector<GroupForm>& parts) {
    GroupForm g;
    std::size_t width = 0;
    for (const auto& p : parts) width += p.moduli().size();
    std::size_t offset = 0;
    for (const auto& p : parts) {
      g.factors.insert(g.factors.end(), p.factors.begin(), p.factors.end());
      g.central_torus_rank += p.central_torus_rank;
      for (const auto& k : p.kernel) {
        std::vector<int> v(width, 0);
        std::copy(k.begin(), k.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
        g.kernel.push_back(v);
      }
      offset += p.moduli().size();
    }
    return g;
  }

 private:
  static int check_positive(int n) {
    if (n < 1) throw std::invalid_argument("group size must be positive");
    return n;
  }
  static GroupForm orthogonal(int m, Isogeny iso) {
    if (m < 2) throw std::invalid_argument("orthogonal groups need m >= 2");
    return m % 2 ? single(RootType::B, (m - 1) / 2, iso) : single(RootType::D, m / 2, iso);
  }
  static void check_isogeny(RootType t, Isogeny iso) {
    bool ok = true;
    if (iso == Isogeny::GL) ok = t == RootType::A;
    if (iso == Isogeny::Sp) ok = t == RootType::C;
    if (iso == Isogeny::SO || iso == Isogeny::Spin) ok = t == RootType::B || t == RootType::D;
    if (!ok) throw std::invalid_argument("isogeny inconsistent with type " + root_type_name(t));
  }
};

namespace detail {

// Kernel elements forced by each factor's isogeny label, in flat coordinates.
inline std::vector<std::vector<int>> implied_kernel(const GroupForm& g) {
  const std::size_t width = g.moduli().size();
  std::vector<std::vector<int>> gens;
  std::size_t offset = 0;
  for (const auto& f : g.factors) {
    auto m = center_moduli(f.type, f.rank);
    auto unit = [&](std::size_t j, int r) {
      std::vector<int> v(width, 0);
      v[offset + j] = r;
      gens.push_back(v);
    };
    bool whole = f.isogeny == Isogeny::GL || f.isogeny == Isogeny::adjoint ||
                 (f.isogeny == Isogeny::SO && f.type == RootType::B);
    if (whole) {
      for (std::size_t j = 0; j < m.size(); ++j) unit(j, 1);
    } else if (f.isogeny == Isogeny::SO && f.type == RootType::D && !m.empty()) {
      // Spin(2r) -> SO(2r): residue 2 in Z/4 (r odd), the diagonal element of Z/2 x Z/2 (r even)
      if (m.size() == 1) {
        unit(0, 2);
      } else {
        std::vector<int> v(width, 0);
        v[offset] = v[offset + 1] = 1;
        gens.push_back(v);
      }
    }
    offset += m.size();
  }
  return gens;
}

// Subgroup of prod Z/m_i generated by gens, as a sorted element list.
inline std::vector<std::vector<int>> generated_subgroup(const std::vector<int>& moduli,
                                                        const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen{std::vector<int>(moduli.size(), 0)};
  std::vector<std::vector<int>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<int> y(moduli.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = (x[i] + g[i]) % moduli[i];
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline int element_order(const std::vector<int>& x, const std::vector<int>& moduli) {
  int o = 1;
  for (std::size_t i = 0; i < x.size(); ++i) o = std::lcm(o, moduli[i] / std::gcd(x[i], moduli[i]));
  return o;
}

inline void check_kernel(const GroupForm& g) {
  auto m = g.moduli();
  for (const auto& k : g.kernel) {
    if (k.size() != m.size()) throw std::invalid_argument("kernel generator has wrong length");
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] < 0 || k[i] >= m[i]) throw std::invalid_argument("kernel residue out of range");
  }
}

}  // namespace detail

/// The finite central subgroup K with G = (G_sc x torus) / K, restricted to the semisimple centers.
inline std::vector<std::vector<int>> kernel_subgroup(const GroupForm& g) {
  detail::check_kernel(g);
  auto gens = detail::implied_kernel(g);
  gens.insert(gens.end(), g.kernel.begin(), g.kernel.end());
  return detail::generated_subgroup(g.moduli(), gens);
}

/// |Z(G)/Z(G)°|.
inline long long center_component_order(const GroupForm& g) {
  long long total = 1;
  for (int m : g.moduli()) total *= m;
  return total / static_cast<long long>(kernel_subgroup(g).size());
}

inline bool rather_good(const GroupForm& g, int ell) {
  detail::require_prime(ell);
  for (const auto& f : g.factors) {
    auto bad = bad_primes(f.type, f.rank);
    if (std::find(bad.begin(), bad.end(), ell) != bad.end()) return false;
  }
  return center_component_order(g) % ell != 0;
}

/// Every factor simply connected, the kernel given by a canonical generator list.
inline GroupForm with_explicit_kernel(const GroupForm& g, const std::vector<std::vector<int>>& subgroup) {
  GroupForm out;
  for (auto f : g.factors) {
    f.isogeny = Isogeny::simply_connected;
    out.factors.push_back(f);
  }
  const auto m = g.moduli();
  // greedy: walk elements in lexicographic order, keep those outside the current span
  std::vector<std::vector<int>> gens;
  auto span = detail::generated_subgroup(m, gens);
  for (const auto& x : subgroup) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = detail::generated_subgroup(m, gens);
  }
  out.kernel = gens;
  return out;
}

/// Semisimple form of g: the same group as a quotient of the simply connected cover.
inline GroupForm normalize(const GroupForm& g) {
  if (g.central_torus_rank != 0) throw std::invalid_argument("normalize: group has a central torus");
  return with_explicit_kernel(g, kernel_subgroup(g));
}

/// G' = G~/K with K = K0, its 2'-part, or its {2,3}'-part, where G/Z(G)° = G~/K0.
inline GroupForm cogood_reduce(const GroupForm& g) {
  auto k0 = kernel_subgroup(g);  // GL factors contribute their whole center: this is G/Z(G)°
  bool exceptional = false, bcd = false;
  for (const auto& f : g.factors) {
    if (!is_classical(f.type)) exceptional = true;
    else if (f.type != RootType::A && !bad_primes(f.type, f.rank).empty()) bcd = true;
  }
  std::vector<int> removed;
  if (exceptional) removed = {2, 3};
  else if (bcd) removed = {2};
  const auto m = g.moduli();
  std::vector<std::vector<int>> k;
  for (const auto& x : k0) {
    int o = detail::element_order(x, m);
    if (std::none_of(removed.begin(), removed.end(), [&](int p) { return o % p == 0; })) k.push_back(x);
  }
  return with_explicit_kernel(g, k);
}

// ---------------------------------------------------------------------------
// Classical orbits

struct ClassicalType {
  Family family;
  int size;  // size of the partitions labelling orbits
  Isogeny isogeny;
  int rank;
};

inline ClassicalType classical_type(const GroupForm& g) {
  if (g.factors.size() != 1) throw unsupported_error("expected a single almost-simple factor, got " + g.str());
  const auto& f = g.factors[0];
  switch (f.type) {
    case RootType::A: return {Family::A, f.rank + 1, f.isogeny, f.rank};
    case RootType::B: return {Family::B, 2 * f.rank + 1, f.isogeny, f.rank};
    case RootType::C: return {Family::C, 2 * f.rank, f.isogeny, f.rank};
    case RootType::D: return {Family::D, 2 * f.rank, f.isogeny, f.rank};
    default:
      throw unsupported_error("orbits of exceptional groups are ingested data, not computed: " + g.str());
  }
}

enum class VeryEvenTag { none, I, II };

struct NilpotentOrbit {
  Partition partition;
  VeryEvenTag tag = VeryEvenTag::none;

  bool operator==(const NilpotentOrbit&) const = default;
  auto operator<=>(const NilpotentOrbit&) const = default;

  std::string str() const {
    std::string s = partition.compact();
    if (tag == VeryEvenTag::I) s += "I";
    if (tag == VeryEvenTag::II) s += "II";
    return s;
  }
};

inline bool is_very_even(const Partition& p) {
  if (p.empty()) return false;
  for (auto [v, m] : p.multiplicities())
    if (v % 2 || m % 2) return false;
  return true;
}

inline std::vector<NilpotentOrbit> enumerate_orbits(const GroupForm& g) {
  auto ct = classical_type(g);
  std::vector<NilpotentOrbit> out;
  auto c = ct.family == Family::A ? PartitionConstraint::none() : PartitionConstraint::orbit(ct.family);
  for (auto& p : enumerate_partitions(ct.size, c)) {
    if (ct.family == Family::D && is_very_even(p)) {
      out.push_back({p, VeryEvenTag::I});
      out.push_back({p, VeryEvenTag::II});
    } else {
      out.push_back({p, VeryEvenTag::none});
    }
  }
  return out;
}

/// Closure order: dominance, with distinct tags on the same very even partition incomparable.
inline bool closure_leq(const NilpotentOrbit& a, const NilpotentOrbit& b) {
  if (!dominance_leq(a.partition, b.partition)) return false;
  if (a.partition == b.partition && a.tag != VeryEvenTag::none && b.tag != VeryEvenTag::none) return a.tag == b.tag;
  return true;
}

inline bool is_distinguished(const GroupForm& g, const NilpotentOrbit& o) {
  auto ct = classical_type(g);
  const auto& p = o.partition;
  auto distinct = p.multiplicities().size() == p.length();
  switch (ct.family) {
    case Family::A:
      return p.length() <= 1;
    case Family::C:
      return distinct && std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
    default:
      return distinct && std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 1; });
  }
}

struct ComponentGroup {
  enum class Kind { trivial, elementary_abelian_2, cyclic };
  Kind kind = Kind::trivial;
  int parameter = 0;  // rank for elementary abelian, order for cyclic

  static ComponentGroup trivial() { return {}; }
  static ComponentGroup elementary(int r) { return r == 0 ? trivial() : ComponentGroup{Kind::elementary_abelian_2, r}; }
  static ComponentGroup cyclic(int d) { return d == 1 ? trivial() : ComponentGroup{Kind::cyclic, d}; }

  long long order() const {
    switch (kind) {
      case Kind::trivial: return 1;
      case Kind::elementary_abelian_2: return 1LL << parameter;
      case Kind::cyclic: return parameter;
    }
    return 1;
  }

  bool operator==(const ComponentGroup&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::trivial: return "1";
      case Kind::elementary_abelian_2: return "(Z/2)^" + std::to_string(parameter);
      case Kind::cyclic: return "Z/" + std::to_string(parameter);
    }
    return {};
  }
};

inline ComponentGroup component_group(const GroupForm& g, const NilpotentOrbit& o) {
  auto ct = classical_type(g);
  const auto& p = o.partition;
  if (p.size() != ct.size) throw size_mismatch_error("orbit does not belong to " + g.str());
  auto mult = p.multiplicities();
  switch (ct.family) {
    case Family::A:
      if (ct.isogeny == Isogeny::GL || ct.isogeny == Isogeny::adjoint) return ComponentGroup::trivial();
      {
        int d = ct.size;
        for (int x : p.parts()) d = std::gcd(d, x);
        return ComponentGroup::cyclic(d);
      }
    case Family::C: {
      if (ct.isogeny != Isogeny::Sp && ct.isogeny != Isogeny::simply_connected)
        throw unsupported_error("component groups for non-simply-connected type C are not implemented");
      int even = 0;
      for (auto [v, m] : mult) even += v % 2 == 0;
      return ComponentGroup::elementary(even);
    }
    default: {
      if (ct.isogeny == Isogeny::Spin || ct.isogeny == Isogeny::simply_connected)
        throw unsupported_error("component groups for Spin groups are not implemented");
      if (ct.family == Family::D && ct.isogeny == Isogeny::adjoint)
        throw unsupported_error("component groups for adjoint type D are not implemented");
      int odd = 0;
      for (auto [v, m] : mult) odd += v % 2 == 1;
      return ComponentGroup::elementary(std::max(0, odd - 1));
    }
  }
}

/// Character of an abelian component group: bits for (Z/2)^r, one residue for Z/d.
struct LocalSystem {
  ComponentGroup group;
  std::vector<int> coords;

  bool is_trivial() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
  }
  bool operator==(const LocalSystem&) const = default;

  std::string str() const {
    if (is_trivial()) return "triv";
    std::string s;
    if (group.kind == ComponentGroup::Kind::cyclic) return std::to_string(coords.at(0));
    for (int c : coords) s += static_cast<char>('0' + c);
    return s;
  }
};

inline std::vector<LocalSystem> characters(const ComponentGroup& a) {
  std::vector<LocalSystem> out;
  switch (a.kind) {
    case ComponentGroup::Kind::trivial:
      out.push_back({a, {}});
      break;
    case ComponentGroup::Kind::cyclic:
      for (int r = 0; r < a.parameter; ++r) out.push_back({a, {r}});
      break;
    case ComponentGroup::Kind::elementary_abelian_2:
      for (int mask = 0; mask < (1 << a.parameter); ++mask) {
        std::vector<int> bits(a.parameter);
        for (int i = 0; i < a.parameter; ++i) bits[i] = (mask >> (a.parameter - 1 - i)) & 1;
        out.push_back({a, bits});
      }
      break;
  }
  return out;
}

struct Pair {
  NilpotentOrbit orbit;
  LocalSystem local_system;

  bool operator==(const Pair&) const = default;
  std::string str() const { return "(" + orbit.str() + "," + local_system.str() + ")"; }
};

inline std::vector<Pair> enumerate_pairs(const GroupForm& g) {
  std::vector<Pair> out;
  for (const auto& o : enumerate_orbits(g))
    for (auto& e : characters(component_group(g, o))) out.push_back({o, std::move(e)});
  return out;
}

}  // namespace modspringer

#endif  // MODSPRINGER_ORBITS_HPP
