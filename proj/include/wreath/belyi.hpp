#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreath/perm.hpp"
#include "wreath/subgroup_tower.hpp"

namespace wreath {

// (d; e1, e2, e3) with 2 <= e1 <= e2 <= e3 <= d and e1 + e2 + e3 = 2d + 1.
struct CombinatorialType {
  int d = 3;
  int e1 = 2;
  int e2 = 2;
  int e3 = 3;

  bool all_odd() const { return e1 % 2 == 1 && e2 % 2 == 1 && e3 % 2 == 1; }

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

bool is_exceptional(const CombinatorialType& t);
// Throws BoundsViolation, SumViolation or ExceptionalType.
CombinatorialType validate_type(int d, int e1, int e2, int e3);
// `d:e1,e2,e3`
CombinatorialType parse_type(std::string_view text);
std::string to_string(const CombinatorialType& t);

// Every abstract type of degree d; exceptional ones only when asked for.
std::vector<CombinatorialType> enumerate_types(int d, bool include_exceptional = false);

struct MonodromyTriple {
  Perm sigma0;
  Perm sigma1;
  Perm sigma_inf;
};

bool is_single_cycle(const Perm& p, int length);
// Cycle types, product relation and transitivity.
bool satisfies_triple_invariants(const CombinatorialType& t, const MonodromyTriple& m);

inline constexpr int kDefaultTripleSearchBound = 9;

// sigma0 = (0 1 ... e1-1); sigma1 is the lexicographically least single
// e2-cycle (by image sequence) for which (sigma0 sigma1)^-1 is a single
// e3-cycle and <sigma0, sigma1> is transitive.
MonodromyTriple monodromy_triple(const CombinatorialType& t,
                                 int search_bound = kDefaultTripleSearchBound);

enum class Level1Group { Symmetric, Alternating };
std::string_view to_string(Level1Group g);

Level1Group level1_group(const CombinatorialType& t);
Family geometric_family(const CombinatorialType& t);

// Exact rational p/q with q > 0 and gcd(p, q) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline constexpr std::int64_t kRationalLimit = 1'000'000'000'000;  // |p|, |q| <= 10^12

Rational make_rational(std::int64_t num, std::int64_t den);
// `p/q` or `p`, optional leading '-'.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Squarefree integer s with u = s * (rational square).
BigInt squarefree_part(const Rational& u);

struct QuotientResult {
  int order = 1;                       // 1 iff u is a square in Q
  std::string field_label;             // "Q" or "Q(sqrt(s))"
  BigInt squarefree = 1;
  std::pair<int, int> discriminant_exponents;  // exponents of (1-t) and t
};

QuotientResult arithmetic_quotient(const CombinatorialType& t, const Rational& u);

} // namespace wreath
