#ifndef MODSPRINGER_LEVI_HPP
#define MODSPRINGER_LEVI_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "modspringer/orbits.hpp"
#include "modspringer/partitions.hpp"
#include "modspringer/weylrep.hpp"

namespace modspringer {

/// GL(b_1) x ... x GL(b_s) x (residual classical group of rank r), up to conjugacy.
struct LeviClass {
  std::vector<int> gl_blocks;  // descending
  int residual_rank = 0;
  GroupForm ambient;

  bool operator==(const LeviClass&) const = default;

  Family family() const { return classical_type(ambient).family; }

  /// Size of the partitions labelling residual orbits: Sp(2r), SO(2r+1), SO(2r).
  int residual_size() const {
    switch (family()) {
      case Family::A: return 0;
      case Family::B: return 2 * residual_rank + 1;
      default: return 2 * residual_rank;
    }
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < gl_blocks.size(); ++i) s += (i ? "," : "") + std::to_string(gl_blocks[i]);
    s += "}";
    if (family() != Family::A) s += ";" + std::to_string(residual_rank);
    return s;
  }
};

inline LeviClass make_levi(const GroupForm& g, std::vector<int> blocks, int residual_rank) {
  auto ct = classical_type(g);
  std::sort(blocks.rbegin(), blocks.rend());
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("GL block sizes must be positive");
    total += b;
  }
  if (ct.family == Family::A) {
    if (residual_rank != 0 || total != ct.size) throw std::invalid_argument("type A Levi blocks must sum to n");
  } else {
    if (residual_rank < 0 || total + residual_rank != ct.rank) throw std::invalid_argument("Levi rank equation fails");
    if (ct.family == Family::D && residual_rank == 1)
      throw std::invalid_argument("type D residual rank 1 is a GL(1) block");
  }
  return {std::move(blocks), residual_rank, g};
}

inline std::vector<LeviClass> enumerate_levi_classes(const GroupForm& g) {
  auto ct = classical_type(g);
  std::vector<LeviClass> out;
  auto descending = [](int n) {
    auto ps = enumerate_partitions(n);
    std::reverse(ps.begin(), ps.end());
    return ps;
  };
  if (ct.family == Family::A) {
    for (auto& p : descending(ct.size)) out.push_back({p.parts(), 0, g});
    return out;
  }
  for (int r = ct.rank; r >= 0; --r) {
    if (ct.family == Family::D && r == 1) continue;
    for (auto& p : descending(ct.rank - r)) out.push_back({p.parts(), r, g});
  }
  return out;
}

/// Some conjugate of L lies in M.
inline bool embeds(const LeviClass& l, const LeviClass& m) {
  if (!(l.ambient == m.ambient)) throw std::invalid_argument("embeds: Levi classes of different groups");
  if (l.residual_rank > m.residual_rank) return false;
  // assign each block of L to a block of M or to M's residual; capacities must be met exactly
  std::vector<int> cap = m.gl_blocks;
  cap.push_back(m.residual_rank - l.residual_rank);
  const std::size_t residual_slot = cap.size() - 1;
  const bool type_a = l.family() == Family::A;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == l.gl_blocks.size())
      return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; });
    const int b = l.gl_blocks[i];
    for (std::size_t j = 0; j < cap.size(); ++j) {
      if (cap[j] < b || (type_a && j == residual_slot)) continue;
      // equal remaining capacities are interchangeable
      bool dup = false;
      for (std::size_t q = 0; q < j && !dup; ++q) dup = q != residual_slot && j != residual_slot && cap[q] == cap[j];
      if (dup) continue;
      cap[j] -= b;
      bool ok = place(i + 1);
      cap[j] += b;
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

/// Orbit of L: a partition per GL block (aligned with gl_blocks) and a residual orbit.
struct LeviOrbitData {
  std::vector<Partition> gl_orbits;
  NilpotentOrbit residual_orbit;

  bool operator==(const LeviOrbitData&) const = default;

  std::string str() const {
    std::string s;
    for (const auto& p : gl_orbits) s += p.compact() + " x ";
    return s + residual_orbit.str();
  }
};

inline LeviOrbitData zero_orbit_data(const LeviClass& l) {
  LeviOrbitData d;
  for (int b : l.gl_blocks) d.gl_orbits.push_back(Partition(std::vector<int>(b, 1)));
  d.residual_orbit.partition = Partition(std::vector<int>(l.residual_size(), 1));
  return d;
}

inline void check_orbit_data(const LeviClass& l, const LeviOrbitData& d) {
  if (d.gl_orbits.size() != l.gl_blocks.size()) throw std::invalid_argument("orbit data does not match the GL blocks");
  for (std::size_t i = 0; i < d.gl_orbits.size(); ++i)
    if (d.gl_orbits[i].size() != l.gl_blocks[i]) throw std::invalid_argument("GL orbit has the wrong size");
  const auto& r = d.residual_orbit.partition;
  if (l.family() == Family::A) {
    if (!r.empty()) throw std::invalid_argument("type A Levis have no residual orbit");
    return;
  }
  if (r.size() != l.residual_size() || !is_valid_orbit_partition(r, l.family()))
    throw std::invalid_argument("invalid residual orbit " + r.str());
}

/// Row sum of the residual partition with each GL orbit doubled (type A: not doubled), then collapse.
inline Partition induce_partition(Family f, const Partition& residual, const std::vector<Partition>& gl_orbits) {
  Partition sum = residual;
  for (const auto& p : gl_orbits) {
    if (f == Family::A) {
      sum = add_padded(sum, p);
    } else {
      std::vector<int> doubled;
      for (int x : p.parts()) doubled.push_back(2 * x);
      sum = add_padded(sum, Partition(doubled));
    }
  }
  return f == Family::A ? sum : collapse(sum, f);
}

inline NilpotentOrbit induce_orbit(const LeviClass& l, const LeviOrbitData& d) {
  check_orbit_data(l, d);
  const Family f = l.family();
  NilpotentOrbit o{induce_partition(f, d.residual_orbit.partition, d.gl_orbits), VeryEvenTag::none};
  // the tag of an induced very even orbit depends on the Levi class; only the residual's tag is propagated
  if (f == Family::D && is_very_even(o.partition))
    o.tag = d.residual_orbit.tag == VeryEvenTag::none ? VeryEvenTag::I : d.residual_orbit.tag;
  return o;
}

/// N_G(M)/M for a Levi carrying a cuspidal pair: one wreath (or symmetric) factor per distinct block size.
inline WeylDescriptor relative_weyl(const GroupForm& g, const LeviClass& m) {
  if (!(m.ambient == g)) throw std::invalid_argument("relative_weyl: Levi of a different group");
  const Family f = m.family();
  if (f == Family::D && m.residual_rank == 0)
    throw unsupported_error("relative_weyl: type D Levi without residual factor");
  std::map<int, int, std::greater<>> mult;
  for (int b : m.gl_blocks) ++mult[b];
  std::vector<WeylDescriptor> fs;
  for (auto [size, count] : mult)
    fs.push_back(f == Family::A ? WeylDescriptor::symmetric(count) : WeylDescriptor::hyperoctahedral(count));
  if (fs.empty()) return f == Family::A ? WeylDescriptor::symmetric(0) : WeylDescriptor::hyperoctahedral(0);
  if (fs.size() == 1) return fs.front();
  return WeylDescriptor::product(std::move(fs));
}

}  // namespace modspringer

#endif  // MODSPRINGER_LEVI_HPP
