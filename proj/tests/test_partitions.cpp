#include <doctest.h>

#include "modspringer/partitions.hpp"
#include "oracles.hpp"

using namespace modspringer;

TEST_CASE("partition normal form and accessors") {
  Partition p{1, 3, 3, 0};
  CHECK(p.parts() == std::vector<int>{3, 3, 1});
  CHECK(p.size() == 7);
  CHECK(p.length() == 3);
  CHECK(p[5] == 0);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.compact() == "331");
  CHECK(Partition{12, 1}.compact() == "(12,1)");
  CHECK(parse_partition("531") == Partition{5, 3, 1});
  CHECK(parse_partition("(10,2)") == Partition{10, 2});
  CHECK(parse_partition("()").empty());
  CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("5a1"), std::invalid_argument);
  CHECK(parse_bipartition("((2,1),(1))") == Bipartition{{2, 1}, {1}});
  CHECK(parse_bipartition("((),(3))") == Bipartition{{}, {3}});
}

TEST_CASE("transpose is an involution and matches the column count") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto t = transpose(p);
      REQUIRE(transpose(t) == p);
      CHECK(t.size() == p.size());
      CHECK(t[0] == static_cast<int>(p.length()));
    }
}

TEST_CASE("dominance is a partial order reversed by transpose") {
  for (int n = 0; n <= 9; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        const bool ab = dominance_leq(a, b);
        CHECK(ab == oracle::dominated(a.parts(), b.parts()));
        if (ab && dominance_leq(b, a)) CHECK(a == b);
        CHECK(ab == dominance_leq(transpose(b), transpose(a)));
        if (!ab) continue;
        for (const auto& c : ps)
          if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), size_mismatch_error);
}

TEST_CASE("enumeration order and counts") {
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{1, 1, 1, 1});
  CHECK(p4.back() == Partition{4});
  for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1] < p4[i]);
  const auto euler = oracle::partition_numbers(40);
  for (int n = 0; n <= 40; ++n) CHECK(partition_count(n) == euler[n]);
  for (int n = 0; n <= 12; ++n) CHECK(Integer(enumerate_partitions(n).size()) == euler[n]);
}

TEST_CASE("regular and bipartition counts agree with Glaisher generating functions") {
  for (int ell : {2, 3, 5, 7, 11}) {
    const auto glaisher = oracle::no_multiple_of_ell(30, ell);
    for (int n = 0; n <= 30; ++n) CHECK(regular_partition_count(n, ell) == glaisher[n]);
    for (int n = 0; n <= 10; ++n)
      CHECK(Integer(enumerate_partitions(n, PartitionConstraint::regular(ell)).size()) == glaisher[n]);
    for (int n = 0; n <= 20; ++n) CHECK(bipartition_count(n, ell) == oracle::bipartitions(n, ell));
  }
  for (int n = 0; n <= 25; ++n) CHECK(bipartition_count(n) == oracle::bipartitions(n));
  for (int n = 0; n <= 8; ++n) CHECK(Integer(enumerate_bipartitions(n).size()) == oracle::bipartitions(n));
  // small values fixed by hand
  CHECK(bipartition_count(2) == 5);
  CHECK(bipartition_count(3) == 10);
  CHECK(bipartition_count(2, 3) == 5);
}

TEST_CASE("powers constraint includes 1") {
  auto ps = enumerate_partitions(4, PartitionConstraint::powers(3));
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == Partition{1, 1, 1, 1});
  CHECK(ps[1] == Partition{3, 1});
  CHECK_THROWS_AS(PartitionConstraint::powers(4), std::invalid_argument);
}

TEST_CASE("orbit validity by family") {
  CHECK(is_valid_orbit_partition(Partition{2, 2}, Family::C));
  CHECK(is_valid_orbit_partition(Partition{2, 1, 1}, Family::C));
  CHECK_FALSE(is_valid_orbit_partition(Partition{3, 1}, Family::C));
  CHECK_FALSE(is_valid_orbit_partition(Partition{3, 2, 1}, Family::C));
  CHECK(is_valid_orbit_partition(Partition{5, 3, 1}, Family::B));
  CHECK_FALSE(is_valid_orbit_partition(Partition{4, 3, 2}, Family::B));
  CHECK(is_valid_orbit_partition(Partition{4, 4}, Family::D));
  CHECK_THROWS_AS(is_valid_orbit_partition(Partition{2, 2}, Family::B), parity_error);
  CHECK(enumerate_partitions(4, PartitionConstraint::orbit(Family::C)).size() == 4);
}

TEST_CASE("collapse matches the brute-force dominance maximum (small sizes)") {
  for (int n = 1; n <= 10; ++n) {
    auto universe = oracle::all_partitions(n);
    for (Family f : {Family::B, Family::C, Family::D}) {
      const char letter = family_letter(f);
      if ((f == Family::B) != (n % 2 == 1)) continue;
      for (const auto& p : universe) {
        auto expect = oracle::brute_collapse(p, letter, universe);
        REQUIRE(expect.has_value());
        CHECK(collapse(Partition(p), f).parts() == *expect);
      }
    }
  }
  CHECK(collapse(Partition{6, 2}, Family::C) == Partition{6, 2});
  CHECK(collapse(Partition{3, 3, 2}, Family::C) == Partition{3, 3, 2});
  CHECK(collapse(Partition{5, 3}, Family::C) == Partition{4, 4});
  CHECK(collapse(Partition{4, 2, 2, 1}, Family::B) == Partition{3, 3, 1, 1, 1});
}

TEST_CASE("standard tableaux count equals the hook formula") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) CHECK(standard_count(p) == oracle::hook_degree(p.parts()));
}
