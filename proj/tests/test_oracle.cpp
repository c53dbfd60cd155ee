#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/belyi.hpp"
#include "wreath/errors.hpp"
#include "wreath/oracle.hpp"

using namespace wreath;

TEST_CASE("ranks") {
  for (int d = 2; d <= 6; ++d) {
    const std::uint64_t count = oracle::factorial(d);
    std::set<std::vector<int>> seen;
    for (std::uint64_t r = 0; r < count; ++r) {
      const Perm p = perm_unrank(d, r);
      CHECK(perm_rank(p) == r);
      seen.insert(p.images());
    }
    CHECK(seen.size() == count);
  }
}

TEST_CASE("codec round trip") {
  std::mt19937_64 rng(13);
  for (auto [d, n] : {std::pair{3, 3}, {10, 2}, {16, 1}, {2, 6}}) {
    const PortraitCodec codec(d, n);
    for (int trial = 0; trial < 100; ++trial) {
      const TreeAut a = random_member(d, n, Family::W, rng);
      const std::string key = codec.encode(a);
      CHECK(key.size() == codec.key_size());
      CHECK(codec.decode(key) == a);
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_level(3, 1).size() == 6);
  CHECK(enumerate_level(3, 2).size() == 1296);
  try {
    enumerate_level(3, 3);
    FAIL("expected guard error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
}

TEST_CASE("closures") {
  const auto s3 = closure_of_perms({Perm::parse(3, "(0 1)"), Perm::parse(3, "(0 1 2)")});
  CHECK(s3.size() == 6);
  const auto m = monodromy_triple(parse_type("5:3,3,5"));
  CHECK(closure_of_perms({m.sigma0, m.sigma1}).size() == 60);
  CHECK(closure(generators_of(3, 2, Family::U)).size() == 81);
  // closure is independent of generator order and idempotent
  auto gens = generators_of(3, 2, Family::E);
  const ElementSet a = closure(gens);
  std::reverse(gens.begin(), gens.end());
  CHECK(closure(gens) == a);
  CHECK(closure(a.elements()) == a);
  CHECK_THROWS_AS(closure(generators_of(3, 3, Family::U), 1000), Error);
}

TEST_CASE("brute-force normalizer") {
  const auto u1 = closure(generators_of(3, 1, Family::U));
  CHECK(bruteforce_normalizer(u1, generators_of(3, 1, Family::U), enumerate_level(3, 1)).size() == 6);
  const auto gens = generators_of(3, 2, Family::U);
  const auto u2 = closure(gens);
  const auto n = bruteforce_normalizer(u2, gens, enumerate_level(3, 2));
  CHECK(n.size() == 324);
  // the normalizer is a group containing U_2
  CHECK(closure(n.elements()) == n);
  for (const auto& k : u2.keys()) CHECK(std::binary_search(n.keys().begin(), n.keys().end(), k));
}

TEST_CASE("transitivity") {
  CHECK(is_transitive({Perm::parse(5, "(0 1 2 3 4)")}));
  CHECK_FALSE(is_transitive({Perm::parse(3, "(0 1)")}));
  const auto m = monodromy_triple(parse_type("3:2,2,3"));
  CHECK(is_transitive({m.sigma0, m.sigma1}));
}
