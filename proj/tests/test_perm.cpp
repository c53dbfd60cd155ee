#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "wreath/errors.hpp"
#include "wreath/perm.hpp"
#include "wreath/subgroup_tower.hpp"

using namespace wreath;

TEST_CASE("identity and cycle construction") {
  CHECK(Perm::identity(3).images() == std::vector<int>{0, 1, 2});
  CHECK(Perm::identity(5).images() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(Perm::from_cycles(3, {{0, 1}}).images() == std::vector<int>{1, 0, 2});
  CHECK(Perm::from_cycles(3, {{0, 1, 2}}).images() == std::vector<int>{1, 2, 0});
  CHECK(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).images() == std::vector<int>{1, 0, 3, 4, 2});
}

TEST_CASE("composition is right to left") {
  const Perm p = Perm::parse(3, "(0 1)"), q = Perm::parse(3, "(1 2)");
  CHECK((p * q).images() == std::vector<int>{1, 2, 0});
  CHECK((p * q) == Perm::parse(3, "(0 1 2)"));
}

TEST_CASE("inverse, sign and printing") {
  CHECK(inverse(Perm::parse(3, "(0 1 2)")) == Perm::parse(3, "(0 2 1)"));
  CHECK(inverse(Perm::identity(4)).is_identity());
  CHECK(Perm::parse(3, "(0 1)").sign() == -1);
  CHECK(Perm::parse(3, "(0 1 2)").sign() == 1);
  CHECK(Perm::identity(3).to_string() == "id");
  CHECK(Perm::parse(5, "(3 4)(0 2 1)").to_string() == "(0 2 1)(3 4)");
  CHECK(Perm::parse(4, "id").is_identity());
}

TEST_CASE("random permutations against pointwise composition") {
  std::mt19937_64 rng(7);
  for (int d = 2; d <= kMaxDegree; ++d)
    for (int trial = 0; trial < 50; ++trial) {
      const Perm p = random_perm(d, rng), q = random_perm(d, rng);
      const Perm pq = p * q;
      for (int i = 0; i < d; ++i) REQUIRE(pq(i) == p(q(i)));
      CHECK((p * inverse(p)).is_identity());
      CHECK(p.sign() == oracle::parity_sign(p.images()));
      CHECK(Perm::parse(d, p.to_string()) == p);
    }
}

TEST_CASE("perm errors") {
  CHECK_THROWS_AS(Perm::identity(1), Error);
  CHECK_THROWS_AS(Perm::identity(kMaxDegree + 1), Error);
  CHECK_THROWS_AS(Perm::parse(3, "(0 3)"), Error);
  CHECK_THROWS_AS(Perm::parse(3, "(0 1 0)"), Error);
  CHECK_THROWS_AS(Perm::parse(3, "(0 1"), Error);
  CHECK_THROWS_AS(Perm::identity(3) * Perm::identity(4), Error);
  try {
    Perm::from_cycles(3, {{0, 1}, {1, 2}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RepeatedEntry);
  }
}

TEST_CASE("hash separates S_4") {
  std::unordered_set<Perm> seen;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) seen.insert(random_perm(4, rng));
  CHECK(seen.size() == 24);
}
