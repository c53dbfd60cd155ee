#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/errors.hpp"
#include "wreath/oracle.hpp"
#include "wreath/subgroup_tower.hpp"

using namespace wreath;

TEST_CASE("membership examples") {
  const TreeAut a = parse_aut(3, 2, "((0 1),e,e)(0 1)");
  CHECK(is_member(a, Family::E));
  CHECK_FALSE(is_member(a, Family::U));
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_member(TreeAut::identity(3, n), Family::E));
    CHECK(is_member(TreeAut::identity(3, n), Family::U));
  }
  const TreeAut t = TreeAut::embed(Perm::parse(3, "(0 1)"), 2);
  CHECK_FALSE(is_member(t, Family::E));
  CHECK_FALSE(is_member(t, Family::U));
  CHECK(is_member(t, Family::W));
}

TEST_CASE("membership agrees with the leaf-map predicates") {
  std::mt19937_64 rng(12);
  for (auto [d, n] : {std::pair{3, 3}, {4, 3}, {5, 2}, {3, 4}})
    for (int trial = 0; trial < 300; ++trial) {
      TreeAut a = random_member(d, n, Family::W, rng);
      if (trial % 3 == 1) a = random_member(d, n, Family::E, rng);
      if (trial % 3 == 2) a = random_member(d, n, Family::U, rng);
      const auto m = oracle::from_portrait(a);
      REQUIRE(is_member(a, Family::E) == oracle::in_e(m));
      REQUIRE(is_member(a, Family::U) == oracle::in_u(m));
    }
}

TEST_CASE("order formulas") {
  CHECK(order_of_family(3, 2, Family::W) == 1296);
  CHECK(order_of_family(3, 2, Family::E) == 648);
  CHECK(order_of_family(3, 2, Family::U) == 81);
  CHECK(order_of_family(3, 3, Family::U) == 1594323);
  CHECK(order_of_family(4, 1, Family::E) == 24);
  // |E_n| = |W_n| / 2^((d^(n-1)-1)/(d-1)): one sign condition per vertex of depth <= n-2
  for (int d = 3; d <= 6; ++d)
    for (int n = 2; n <= 5; ++n) {
      const BigInt conditions = (BigInt(oracle::ipow(d, n - 1)) - 1) / (d - 1);
      CHECK(order_of_family(d, n, Family::E) * (BigInt(1) << static_cast<unsigned>(conditions)) ==
            order_of_family(d, n, Family::W));
    }
}

TEST_CASE("generators lie in the family and generate small cases") {
  CHECK(closure(generators_of(3, 1, Family::U)).size() == 3);
  for (auto [d, n] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}})
    for (Family f : {Family::E, Family::U, Family::W}) {
      const auto gens = generators_of(d, n, f);
      for (const auto& g : gens) CHECK(is_member(g, f));
      const BigInt order = order_of_family(d, n, f);
      if (order <= 200000) CHECK(BigInt(closure(gens).size()) == order);
    }
}

TEST_CASE("random members and restriction") {
  std::mt19937_64 rng(8);
  for (Family f : {Family::E, Family::U})
    for (int trial = 0; trial < 200; ++trial) {
      const TreeAut a = random_member(3, 4, f, rng);
      CHECK(is_member(a, f));
      CHECK(is_member(restrict(a, 2), f));
    }
  CHECK(parse_family("e") == Family::E);
  CHECK(parse_family("W") == Family::W);
  CHECK_THROWS_AS(parse_family("X"), Error);
  CHECK_THROWS_AS(check_tower_degree(2), Error);
}
