#ifndef MODSPRINGER_CUSPIDAL_HPP
#define MODSPRINGER_CUSPIDAL_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modspringer/levi.hpp"
#include "modspringer/orbits.hpp"
#include "modspringer/partitions.hpp"
#include "modspringer/weylrep.hpp"

namespace modspringer {

struct not_rather_good_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations of the same object disagree.
struct inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Character of Z(G)/Z(G)°. Spin's nontrivial label is opaque: which of the nontrivial
/// characters occurs is not determined here.
struct CentralCharacter {
  enum class Kind { trivial, residue, opaque_nontrivial };
  Kind kind = Kind::trivial;
  int residue = 0;
  int modulus = 1;

  static CentralCharacter trivial() { return {}; }
  static CentralCharacter of_residue(int r, int n) {
    r = ((r % n) + n) % n;
    return r == 0 ? trivial() : CentralCharacter{Kind::residue, r, n};
  }
  static CentralCharacter spin_nontrivial() { return {Kind::opaque_nontrivial, 0, 1}; }

  bool is_trivial() const { return kind == Kind::trivial; }

  /// Order of the character; 0 when unknown (opaque).
  int order() const {
    switch (kind) {
      case Kind::trivial: return 1;
      case Kind::residue: return modulus / std::gcd(residue, modulus);
      case Kind::opaque_nontrivial: return 0;
    }
    return 0;
  }

  bool operator==(const CentralCharacter&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::trivial: return "triv";
      case Kind::residue: return std::to_string(residue) + "/" + std::to_string(modulus);
      case Kind::opaque_nontrivial: return "nontriv";
    }
    return {};
  }
};

/// Which family of cuspidal supports a datum belongs to, with its index (k, j, or the order d of χ).
enum class SupportFamily { symplectic, orthogonal_square, spin_triangular, type_a };

struct CuspidalDatum {
  LeviClass levi;
  LeviOrbitData orbit_data;
  CentralCharacter central_char;
  int char_tag = 0;  // 0 or the prime ell
  SupportFamily support = SupportFamily::symplectic;
  int index = 0;
  Partition nu;  // GL block sizes in units of the family's basic block (d for SL, 1 otherwise)

  bool operator==(const CuspidalDatum&) const = default;

  std::string str() const {
    return "L=" + levi.str() + " O=" + orbit_data.str() + " chi=" + central_char.str() +
           " l=" + std::to_string(char_tag);
  }
};

namespace detail {

inline int triangular(int k) { return k * (k + 1) / 2; }

inline Partition sp_cuspidal_orbit(int k) {
  std::vector<int> v;
  for (int i = k; i >= 1; --i) v.push_back(2 * i);
  return Partition(v);
}

inline Partition square_cuspidal_orbit(int k) {
  std::vector<int> v;
  for (int i = k; i >= 1; --i) v.push_back(2 * i - 1);
  return Partition(v);
}

inline Partition triangular_cuspidal_orbit(int j) {
  std::vector<int> v;
  for (int x = 2 * j - 1; x > 0; x -= 4) v.push_back(x);
  return Partition(v);
}

inline CentralCharacter sp_character(int k) { return CentralCharacter::of_residue(triangular(k) % 2, 2); }

inline bool is_spin(const ClassicalType& ct) {
  return ct.isogeny == Isogeny::Spin || (ct.isogeny == Isogeny::simply_connected && ct.family != Family::C &&
                                          ct.family != Family::A);
}

inline bool is_sp(const ClassicalType& ct) {
  return ct.family == Family::C && (ct.isogeny == Isogeny::Sp || ct.isogeny == Isogeny::simply_connected);
}

inline bool is_orthogonal(const ClassicalType& ct) {
  return (ct.family == Family::B || ct.family == Family::D) && (ct.isogeny == Isogeny::SO || is_spin(ct));
}

inline bool is_sl(const ClassicalType& ct) { return ct.family == Family::A && ct.isogeny == Isogeny::simply_connected; }
inline bool is_gl(const ClassicalType& ct) { return ct.family == Family::A && ct.isogeny == Isogeny::GL; }

/// Partitions of n whose parts are 1 or powers of ell; ell = 0 allows only ones.
inline std::vector<Partition> block_partitions(int n, int ell) {
  if (ell == 0) return {Partition(std::vector<int>(n, 1))};
  return enumerate_partitions(n, PartitionConstraint::powers(ell));
}

}  // namespace detail

/// 0-cuspidal pairs of G itself (empty if none).
inline std::vector<std::pair<NilpotentOrbit, CentralCharacter>> zero_cuspidal_pair(const GroupForm& g) {
  auto ct = classical_type(g);
  std::vector<std::pair<NilpotentOrbit, CentralCharacter>> out;
  if (detail::is_sp(ct)) {
    for (int k = 1; detail::triangular(k) <= ct.rank; ++k)
      if (detail::triangular(k) == ct.rank) out.push_back({{detail::sp_cuspidal_orbit(k)}, detail::sp_character(k)});
  } else if (detail::is_orthogonal(ct)) {
    for (int k = 1; k * k <= ct.size; ++k)
      if (k * k == ct.size) out.push_back({{detail::square_cuspidal_orbit(k)}, CentralCharacter::trivial()});
    if (detail::is_spin(ct))
      for (int j = 2; detail::triangular(j) <= ct.size; ++j)
        if (detail::triangular(j) == ct.size)
          out.push_back({{detail::triangular_cuspidal_orbit(j)}, CentralCharacter::spin_nontrivial()});
  } else if (detail::is_gl(ct)) {
    if (ct.size == 1) out.push_back({{Partition{1}}, CentralCharacter::trivial()});
  } else if (detail::is_sl(ct)) {
    for (int r = 0; r < ct.size; ++r)
      if (std::gcd(r, ct.size) == 1) out.push_back({{Partition{ct.size}}, CentralCharacter::of_residue(r, ct.size)});
  } else {
    throw unsupported_error("cuspidal pairs are implemented for Sp, SO, Spin, GL and SL only: " + g.str());
  }
  return out;
}

inline CentralCharacter central_character_of(const CuspidalDatum& d) {
  switch (d.support) {
    case SupportFamily::symplectic: return detail::sp_character(d.index);
    case SupportFamily::orthogonal_square: return CentralCharacter::trivial();
    case SupportFamily::spin_triangular: return CentralCharacter::spin_nontrivial();
    case SupportFamily::type_a: return d.central_char;
  }
  return {};
}

/// All ell-cuspidal data (ell = 0 for characteristic zero).
inline std::vector<CuspidalDatum> enumerate_cuspidal_data(const GroupForm& g, int ell) {
  auto ct = classical_type(g);
  if (ell != 0 && !rather_good(g, ell))
    throw not_rather_good_error(std::to_string(ell) + " is not rather good for " + g.str());
  std::vector<CuspidalDatum> out;

  // GL blocks carry regular orbits; the residual carries the family's cuspidal orbit
  auto add = [&](SupportFamily fam, int index, int residual_rank, const Partition& residual_orbit, const Partition& nu,
                 int unit, CentralCharacter chi) {
    std::vector<int> blocks;
    for (int x : nu.parts()) blocks.push_back(unit * x);
    CuspidalDatum d;
    d.levi = make_levi(g, blocks, residual_rank);
    for (int b : d.levi.gl_blocks) d.orbit_data.gl_orbits.push_back(Partition{b});
    d.orbit_data.residual_orbit = {residual_orbit, VeryEvenTag::none};
    d.char_tag = ell;
    d.support = fam;
    d.index = index;
    d.nu = nu;
    d.central_char = chi;
    d.central_char = central_character_of(d);
    out.push_back(std::move(d));
  };

  if (detail::is_sp(ct)) {
    for (int k = 0; detail::triangular(k) <= ct.rank; ++k) {
      const int t = detail::triangular(k);
      for (auto& nu : detail::block_partitions(ct.rank - t, ell))
        add(SupportFamily::symplectic, k, t, detail::sp_cuspidal_orbit(k), nu, 1, {});
    }
  } else if (detail::is_orthogonal(ct)) {
    auto residual = [&](int size) { return ct.family == Family::B ? (size - 1) / 2 : size / 2; };
    for (int k = 0; k * k <= ct.size; ++k) {
      if ((k * k - ct.size) % 2) continue;
      const int r = residual(k * k);
      for (auto& nu : detail::block_partitions(ct.rank - r, ell))
        add(SupportFamily::orthogonal_square, k, r, detail::square_cuspidal_orbit(k), nu, 1, {});
    }
    if (detail::is_spin(ct)) {
      for (int j = 2; detail::triangular(j) <= ct.size; ++j) {
        const int t = detail::triangular(j);
        if ((t - ct.size) % 2) continue;
        const int r = residual(t);
        for (auto& nu : detail::block_partitions(ct.rank - r, ell))
          add(SupportFamily::spin_triangular, j, r, detail::triangular_cuspidal_orbit(j), nu, 1, {});
      }
    }
  } else if (detail::is_gl(ct)) {
    for (auto& nu : detail::block_partitions(ct.size, ell))
      add(SupportFamily::type_a, 1, 0, Partition{}, nu, 1, CentralCharacter::trivial());
  } else if (detail::is_sl(ct)) {
    const int n = ct.size;
    for (int r = 0; r < n; ++r) {
      const int d = n / std::gcd(r, n);  // order of the character r/n
      for (auto& nu : detail::block_partitions(n / d, ell))
        add(SupportFamily::type_a, d, 0, Partition{}, nu, d, CentralCharacter::of_residue(r, n));
    }
  } else {
    throw unsupported_error("cuspidal data are implemented for Sp, SO, Spin, GL and SL only: " + g.str());
  }
  return out;
}

namespace detail {

// The orbit part of the order: split L's blocks among M's GL blocks and M's residual so that
// M's orbit lies in the closure of the orbit induced from L, block by block.
inline bool orbit_condition(const CuspidalDatum& d1, const CuspidalDatum& d2) {
  const auto& l = d1.levi;
  const auto& m = d2.levi;
  const Family f = l.family();
  if (l.residual_rank > m.residual_rank) return false;

  struct Item {
    int size;
    Partition orbit;
    bool operator==(const Item&) const = default;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < l.gl_blocks.size(); ++i) items.push_back({l.gl_blocks[i], d1.orbit_data.gl_orbits[i]});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.size != b.size ? a.size > b.size : a.orbit > b.orbit;
  });

  const std::size_t slots = m.gl_blocks.size() + (f == Family::A ? 0 : 1);
  std::vector<int> cap(m.gl_blocks.begin(), m.gl_blocks.end());
  if (f != Family::A) cap.push_back(m.residual_rank - l.residual_rank);
  std::vector<std::vector<Partition>> content(slots);
  std::vector<std::size_t> slot_of(items.size(), 0);

  auto check = [&]() {
    for (std::size_t j = 0; j < m.gl_blocks.size(); ++j)
      if (!dominance_leq(d2.orbit_data.gl_orbits[j], induce_partition(Family::A, Partition{}, content[j])))
        return false;
    if (f == Family::A) return true;
    auto induced = induce_partition(f, d1.orbit_data.residual_orbit.partition, content.back());
    return dominance_leq(d2.orbit_data.residual_orbit.partition, induced);
  };

  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == items.size()) return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; }) && check();
    // identical items are assigned to non-decreasing slots
    std::size_t start = (i > 0 && items[i] == items[i - 1]) ? slot_of[i - 1] : 0;
    for (std::size_t j = start; j < slots; ++j) {
      if (cap[j] < items[i].size) continue;
      cap[j] -= items[i].size;
      content[j].push_back(items[i].orbit);
      slot_of[i] = j;
      bool ok = place(i + 1);
      content[j].pop_back();
      cap[j] += items[i].size;
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

// The order without the characteristic check; used to compare ell-data with 0-data.
inline bool order_leq_any(const CuspidalDatum& d1, const CuspidalDatum& d2) {
  if (!(d1.levi.ambient == d2.levi.ambient)) throw std::invalid_argument("order_leq: data of different groups");
  return central_character_of(d1) == central_character_of(d2) && embeds(d1.levi, d2.levi) &&
         orbit_condition(d1, d2);
}

}  // namespace detail

inline bool order_leq(const CuspidalDatum& d1, const CuspidalDatum& d2) {
  if (d1.char_tag != d2.char_tag) throw std::invalid_argument("order_leq: data of different characteristics");
  return detail::order_leq_any(d1, d2);
}

/// The unique maximal 0-cuspidal datum below d; computed twice (order maximum, family projection).
inline CuspidalDatum zero_series_of(const CuspidalDatum& d) {
  const auto& g = d.levi.ambient;
  auto zero = enumerate_cuspidal_data(g, 0);

  std::vector<const CuspidalDatum*> below;
  for (const auto& z : zero)
    if (detail::order_leq_any(z, d)) below.push_back(&z);
  const CuspidalDatum* maximum = nullptr;
  for (const auto* c : below)
    if (std::all_of(below.begin(), below.end(), [&](const CuspidalDatum* o) { return detail::order_leq_any(*o, *c); })) {
      if (maximum) throw inconsistency_error("zero_series_of: two maximal 0-cuspidal data below " + d.str());
      maximum = c;
    }
  if (!maximum) throw inconsistency_error("zero_series_of: no maximal 0-cuspidal datum below " + d.str());

  const CuspidalDatum* projected = nullptr;
  for (const auto& z : zero)
    if (z.support == d.support && z.index == d.index && central_character_of(z) == central_character_of(d)) {
      if (projected) throw inconsistency_error("zero_series_of: ambiguous projection of " + d.str());
      projected = &z;
    }
  if (!projected || !(*projected == *maximum))
    throw inconsistency_error("zero_series_of: order maximum " + maximum->str() + " differs from the projection of " +
                              d.str());
  return *maximum;
}

inline std::vector<std::pair<CuspidalDatum, std::vector<CuspidalDatum>>> partition_into_zero_series(const GroupForm& g,
                                                                                                    int ell) {
  std::vector<std::pair<CuspidalDatum, std::vector<CuspidalDatum>>> out;
  for (auto& z : enumerate_cuspidal_data(g, 0)) out.push_back({z, {}});
  for (auto& d : enumerate_cuspidal_data(g, ell)) {
    auto z = zero_series_of(d);
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == z; });
    it->second.push_back(d);
  }
  return out;
}

/// Number of pairs in the series of d: |Irr k[N_G(M)/M]|.
inline Integer series_size(const GroupForm& g, const CuspidalDatum& d) {
  auto w = relative_weyl(g, d.levi);  // rejects type D with trivial residual
  std::map<int, int> mult;
  for (int b : d.levi.gl_blocks) ++mult[b];
  Integer total = 1;
  const bool type_a = d.levi.family() == Family::A;
  for (auto [size, m] : mult) {
    if (type_a) total *= d.char_tag == 0 ? partition_count(m) : regular_partition_count(m, d.char_tag);
    else total *= d.char_tag == 0 ? bipartition_count(m) : bipartition_count(m, d.char_tag);
  }
  return total;
}

struct CountingReport {
  Integer lhs;
  Integer rhs;
  bool equal = false;
};

/// Sum over nu in Part(n, ell) of prod_i |ell-regular bipartitions of m_i(nu)| against |Bipart(n)|.
inline CountingReport verify_counting_identity(int n, int ell) {
  detail::require_prime(ell);
  if (ell == 2) throw std::invalid_argument("verify_counting_identity: ell must be odd");
  if (n < 0) throw std::invalid_argument("verify_counting_identity: negative n");
  CountingReport r;
  r.lhs = 0;
  for (auto& nu : enumerate_partitions(n, PartitionConstraint::powers(ell))) {
    std::vector<int> m;
    for (auto [v, c] : nu.multiplicities()) m.push_back(c);
    r.lhs += modular_irr_count_wreath(m, ell);
  }
  r.rhs = bipartition_count(n);
  r.equal = r.lhs == r.rhs;
  return r;
}

/// ell divides no relative Weyl group order among the ell-cuspidal data with central character chi.
inline bool lusztig_hypothesis(const GroupForm& g, const CentralCharacter& chi, int ell) {
  for (const auto& d : enumerate_cuspidal_data(g, ell))
    if (central_character_of(d) == chi && weyl_order(relative_weyl(g, d.levi)) % ell == 0) return false;
  return true;
}

}  // namespace modspringer

#endif  // MODSPRINGER_CUSPIDAL_HPP
