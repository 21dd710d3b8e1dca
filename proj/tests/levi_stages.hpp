// Induction in stages, computed factor by factor for comparison with direct induction.
#ifndef MODSPRINGER_TESTS_LEVI_STAGES_HPP
#define MODSPRINGER_TESTS_LEVI_STAGES_HPP

#include <functional>
#include <vector>

#include "modspringer/levi.hpp"

namespace stages {

using namespace modspringer;

// Every orbit of L: a partition per GL block times a residual orbit.
inline std::vector<LeviOrbitData> all_orbit_data(const LeviClass& l) {
  std::vector<std::vector<Partition>> choices;
  for (int b : l.gl_blocks) choices.push_back(enumerate_partitions(b));
  std::vector<Partition> residuals;
  if (l.family() == Family::A) residuals.push_back(Partition{});
  else residuals = enumerate_partitions(l.residual_size(), PartitionConstraint::orbit(l.family()));
  std::vector<LeviOrbitData> out;
  std::vector<Partition> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      for (const auto& r : residuals) out.push_back({cur, {r, VeryEvenTag::none}});
      return;
    }
    for (const auto& p : choices[i]) {
      cur.push_back(p);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// One way of placing L's GL blocks into M: slot[i] indexes M's GL blocks, or equals M's block count for the residual.
inline std::vector<std::vector<std::size_t>> placements(const LeviClass& l, const LeviClass& m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(l.gl_blocks.size());
  std::vector<int> cap = m.gl_blocks;
  cap.push_back(m.residual_rank - l.residual_rank);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slot.size()) {
      if (std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; })) out.push_back(slot);
      return;
    }
    for (std::size_t j = 0; j < cap.size(); ++j) {
      if (cap[j] < l.gl_blocks[i]) continue;
      cap[j] -= l.gl_blocks[i];
      slot[i] = j;
      rec(i + 1);
      cap[j] += l.gl_blocks[i];
    }
  };
  if (m.residual_rank >= l.residual_rank) rec(0);
  return out;
}

// Ind_L^M computed factor by factor: type A row sums on M's GL blocks, classical induction on M's residual.
inline LeviOrbitData induce_into(const LeviClass& l, const LeviOrbitData& d, const LeviClass& m,
                                 const std::vector<std::size_t>& slot) {
  LeviOrbitData out;
  for (std::size_t j = 0; j < m.gl_blocks.size(); ++j) {
    std::vector<Partition> contents;
    for (std::size_t i = 0; i < slot.size(); ++i)
      if (slot[i] == j) contents.push_back(d.gl_orbits[i]);
    out.gl_orbits.push_back(induce_partition(Family::A, Partition{}, contents));
  }
  std::vector<Partition> contents;
  for (std::size_t i = 0; i < slot.size(); ++i)
    if (slot[i] == m.gl_blocks.size()) contents.push_back(d.gl_orbits[i]);
  out.residual_orbit = {induce_partition(l.family(), d.residual_orbit.partition, contents), VeryEvenTag::none};
  return out;
}

// True when Ind_M^G Ind_L^M equals Ind_L^G for every orbit of L and every placement of L in M.
inline bool stages_agree(const GroupForm& g, std::string* failure = nullptr) {
  auto ls = enumerate_levi_classes(g);
  for (const auto& l : ls)
    for (const auto& m : ls)
      for (const auto& slot : placements(l, m))
        for (const auto& d : all_orbit_data(l))
          if (!(induce_orbit(m, induce_into(l, d, m, slot)).partition == induce_orbit(l, d).partition)) {
            if (failure) *failure = l.str() + " in " + m.str() + " orbit " + d.str();
            return false;
          }
  return true;
}

}  // namespace stages

#endif
