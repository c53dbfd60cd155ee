#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wreath/belyi.hpp"
#include "wreath/errors.hpp"

using namespace wreath;

namespace {

ErrorKind kind_of(const char* type) {
  try {
    parse_type(type);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << type);
  return ErrorKind::Precondition;
}

} // namespace

TEST_CASE("type validation") {
  CHECK(parse_type("3:2,2,3") == CombinatorialType{3, 2, 2, 3});
  CHECK(kind_of("4:3,3,3") == ErrorKind::ExceptionalType);
  CHECK(kind_of("6:4,4,5") == ErrorKind::ExceptionalType);
  CHECK(kind_of("5:2,2,4") == ErrorKind::SumViolation);
  CHECK(kind_of("3:1,3,3") == ErrorKind::BoundsViolation);
  CHECK(kind_of("3:2,2") == ErrorKind::Syntax);
}

TEST_CASE("enumerated types satisfy the degree sum") {
  std::size_t total = 0;
  for (int d = 3; d <= 9; ++d)
    for (const auto& t : enumerate_types(d)) {
      ++total;
      CHECK(t.e1 + t.e2 + t.e3 == 2 * d + 1);
      CHECK_FALSE(is_exceptional(t));
    }
  CHECK(total > 0);
  CHECK(enumerate_types(4, true).size() == enumerate_types(4).size() + 1);
}

TEST_CASE("canonical triples") {
  const auto m = monodromy_triple(parse_type("3:2,2,3"));
  CHECK(m.sigma0 == Perm::parse(3, "(0 1)"));
  CHECK(m.sigma1 == Perm::parse(3, "(1 2)"));
  CHECK(m.sigma_inf == Perm::parse(3, "(0 2 1)"));
  for (int d = 3; d <= 7; ++d)
    for (const auto& t : enumerate_types(d)) {
      const auto tr = monodromy_triple(t);
      CHECK(satisfies_triple_invariants(t, tr));
      CHECK((tr.sigma0 * tr.sigma1 * tr.sigma_inf).is_identity());
    }
}

TEST_CASE("classification") {
  CHECK(level1_group(parse_type("4:2,3,4")) == Level1Group::Symmetric);
  CHECK(level1_group(parse_type("5:3,3,5")) == Level1Group::Alternating);
  CHECK(level1_group(parse_type("7:3,5,7")) == Level1Group::Alternating);
  CHECK(geometric_family(parse_type("3:2,2,3")) == Family::E);
  CHECK(geometric_family(parse_type("5:3,3,5")) == Family::U);
}

TEST_CASE("rationals and the arithmetic quotient") {
  CHECK(parse_rational("-6/4") == Rational{-3, 2});
  CHECK(to_string(parse_rational("8")) == "8");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("10000000000000/3"), Error);
  const auto t = parse_type("5:3,3,5");
  CHECK(arithmetic_quotient(t, parse_rational("4")).order == 1);
  const auto two = arithmetic_quotient(t, parse_rational("2"));
  CHECK(two.order == 2);
  CHECK(two.field_label == "Q(sqrt(2))");
  CHECK(arithmetic_quotient(t, parse_rational("-9")).field_label == "Q(sqrt(-1))");
  CHECK(arithmetic_quotient(t, parse_rational("8/3")).squarefree == 6);
  CHECK(arithmetic_quotient(t, parse_rational("2")).discriminant_exponents == std::pair{4, 4});
  CHECK(arithmetic_quotient(parse_type("4:2,3,4"), parse_rational("2")).discriminant_exponents ==
        std::pair{4, 2});
  CHECK_THROWS_AS(arithmetic_quotient(t, parse_rational("0")), Error);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    long long p = static_cast<long long>(rng() % 2000000) - 1000000;
    long long q = static_cast<long long>(rng() % 1000000) + 1;
    if (trial % 2 == 0) {
      p = (p % 1000) * (p % 1000);
      q = q % 1000 + 1;
      q *= q;
    }
    if (p == 0) continue;
    const auto r = arithmetic_quotient(t, make_rational(p, q));
    CHECK((r.order == 1) == oracle::rational_is_square(p, q));
    // s * p' * q' is a square for reduced p'/q'
    const Rational u = make_rational(p, q);
    const BigInt prod = r.squarefree * u.num * u.den;
    CHECK(prod > 0);
    const BigInt root = boost::multiprecision::sqrt(prod);
    CHECK(root * root == prod);
  }
}
