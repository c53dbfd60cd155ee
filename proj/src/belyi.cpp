#include "wreath/belyi.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wreath/errors.hpp"
#include "wreath/oracle.hpp"

namespace wreath {

bool is_exceptional(const CombinatorialType& t) {
  return t == CombinatorialType{4, 3, 3, 3} || t == CombinatorialType{6, 4, 4, 5};
}

CombinatorialType validate_type(int d, int e1, int e2, int e3) {
  const CombinatorialType t{d, e1, e2, e3};
  if (!(2 <= e1 && e1 <= e2 && e2 <= e3 && e3 <= d))
    throw Error(ErrorKind::BoundsViolation,
                to_string(t) + " violates 2 <= e1 <= e2 <= e3 <= d");
  if (e1 + e2 + e3 != 2 * d + 1)
    throw Error(ErrorKind::SumViolation, to_string(t) + ": e1 + e2 + e3 = " +
                                             std::to_string(e1 + e2 + e3) + " != " +
                                             std::to_string(2 * d + 1));
  if (is_exceptional(t))
    throw Error(ErrorKind::ExceptionalType, to_string(t) + " is an excluded exceptional type");
  return t;
}

CombinatorialType parse_type(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  const char* separators = ":,,";
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, "expected integer in d:e1,e2,e3");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1000) throw SyntaxError(pos, "integer too large");
    }
    values.push_back(v);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (values.size() == 4) break;
    if (pos >= text.size() || text[pos] != separators[values.size() - 1])
      throw SyntaxError(pos, std::string("expected '") + separators[values.size() - 1] + "'");
    ++pos;
  }
  if (pos != text.size()) throw SyntaxError(pos, "trailing input");
  return validate_type(values[0], values[1], values[2], values[3]);
}

std::string to_string(const CombinatorialType& t) {
  return std::to_string(t.d) + ":" + std::to_string(t.e1) + "," + std::to_string(t.e2) + "," +
         std::to_string(t.e3);
}

std::vector<CombinatorialType> enumerate_types(int d, bool include_exceptional) {
  std::vector<CombinatorialType> out;
  for (int e1 = 2; e1 <= d; ++e1)
    for (int e2 = e1; e2 <= d; ++e2) {
      const int e3 = 2 * d + 1 - e1 - e2;
      if (e3 < e2 || e3 > d) continue;
      const CombinatorialType t{d, e1, e2, e3};
      if (include_exceptional || !is_exceptional(t)) out.push_back(t);
    }
  return out;
}

bool is_single_cycle(const Perm& p, int length) {
  const auto cs = p.cycles();
  if (length == 1) return cs.empty();
  return cs.size() == 1 && static_cast<int>(cs[0].size()) == length;
}

bool satisfies_triple_invariants(const CombinatorialType& t, const MonodromyTriple& m) {
  if (m.sigma0.degree() != t.d || m.sigma1.degree() != t.d || m.sigma_inf.degree() != t.d)
    return false;
  return is_single_cycle(m.sigma0, t.e1) && is_single_cycle(m.sigma1, t.e2) &&
         is_single_cycle(m.sigma_inf, t.e3) &&
         compose(m.sigma0, compose(m.sigma1, m.sigma_inf)).is_identity() &&
         is_transitive({m.sigma0, m.sigma1});
}

namespace {

// All single cycles of the given length on {0, ..., d-1}.
std::vector<Perm> single_cycles(int d, int length) {
  std::vector<Perm> out;
  std::vector<int> support(static_cast<std::size_t>(length));
  // choose the support, then every cyclic order starting at its least element
  std::vector<bool> mask(static_cast<std::size_t>(d), false);
  std::fill(mask.begin(), mask.begin() + length, true);
  do {
    std::size_t k = 0;
    for (int i = 0; i < d; ++i)
      if (mask[static_cast<std::size_t>(i)]) support[k++] = i;
    std::vector<int> rest(support.begin() + 1, support.end());
    do {
      std::vector<int> cycle{support[0]};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.push_back(Perm::from_cycles(d, {cycle}));
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

} // namespace

MonodromyTriple monodromy_triple(const CombinatorialType& t, int search_bound) {
  validate_type(t.d, t.e1, t.e2, t.e3);
  if (t.d > search_bound)
    throw Error(ErrorKind::SearchBoundExceeded, "degree " + std::to_string(t.d) +
                                                    " exceeds triple search bound " +
                                                    std::to_string(search_bound));
  std::vector<int> first(static_cast<std::size_t>(t.e1));
  std::iota(first.begin(), first.end(), 0);
  const Perm sigma0 = Perm::from_cycles(t.d, {first});
  auto candidates = single_cycles(t.d, t.e2);
  std::sort(candidates.begin(), candidates.end(),
            [](const Perm& a, const Perm& b) { return a.block().v < b.block().v; });
  for (const Perm& sigma1 : candidates) {
    const Perm sigma_inf = inverse(compose(sigma0, sigma1));
    if (!is_single_cycle(sigma_inf, t.e3)) continue;
    if (!is_transitive({sigma0, sigma1})) continue;
    return {sigma0, sigma1, sigma_inf};
  }
  throw Error(ErrorKind::NoTriple, "no single-cycle triple of type " + to_string(t));
}

std::string_view to_string(Level1Group g) {
  return g == Level1Group::Symmetric ? "symmetric" : "alternating";
}

Level1Group level1_group(const CombinatorialType& t) {
  return t.all_odd() ? Level1Group::Alternating : Level1Group::Symmetric;
}

Family geometric_family(const CombinatorialType& t) { return t.all_odd() ? Family::U : Family::E; }

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidParameter, "zero denominator");
  if (num > kRationalLimit || num < -kRationalLimit || den > kRationalLimit || den < -kRationalLimit)
    throw Error(ErrorKind::OutOfRange, "rational components must be at most 10^12 in magnitude");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto parse_int = [&](bool allow_sign) -> std::int64_t {
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, "expected integer");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > kRationalLimit)
        throw Error(ErrorKind::OutOfRange, "rational components must be at most 10^12 in magnitude");
    }
    return negative ? -v : v;
  };
  const std::int64_t num = parse_int(true);
  std::int64_t den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') throw SyntaxError(pos, "expected '/'");
    ++pos;
    den = parse_int(false);
  }
  if (pos != text.size()) throw SyntaxError(pos, "trailing input");
  return make_rational(num, den);
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

std::int64_t squarefree_of_positive(std::int64_t n) {
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * n;
}

} // namespace

BigInt squarefree_part(const Rational& u) {
  if (u.num == 0) throw Error(ErrorKind::ZeroRational, "u must be nonzero");
  // p/q = p q / q^2, and sf(p q) = sf(p) sf(q) / gcd(sf(p), sf(q))^2
  const std::int64_t a = squarefree_of_positive(u.num < 0 ? -u.num : u.num);
  const std::int64_t b = squarefree_of_positive(u.den);
  const std::int64_t g = std::gcd(a, b);
  const BigInt s = BigInt(a / g) * BigInt(b / g);
  return u.num < 0 ? BigInt(-s) : s;
}

QuotientResult arithmetic_quotient(const CombinatorialType& t, const Rational& u) {
  validate_type(t.d, t.e1, t.e2, t.e3);
  const Rational r = make_rational(u.num, u.den);
  const BigInt s = squarefree_part(r);
  QuotientResult out;
  out.squarefree = s;
  out.order = s == 1 ? 1 : 2;
  out.field_label = s == 1 ? "Q" : "Q(sqrt(" + s.str() + "))";
  out.discriminant_exponents = {2 * (t.e2 - 1), 2 * (t.e1 - 1)};
  return out;
}

} // namespace wreath
