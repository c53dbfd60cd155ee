#include "wreath/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

void check_degree(int degree) {
  if (degree < 2)
    throw Error(ErrorKind::DegreeTooSmall, "degree " + std::to_string(degree) + " < 2");
  if (degree > kMaxDegree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(degree) + " > " + std::to_string(kMaxDegree));
}

Perm Perm::identity(int degree) {
  check_degree(degree);
  return Perm(degree, simd::identity_block());
}

Perm Perm::from_images(std::span<const int> images) {
  const int d = static_cast<int>(images.size());
  check_degree(d);
  simd::Block b = simd::identity_block();
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int i = 0; i < d; ++i) {
    const int x = images[static_cast<std::size_t>(i)];
    if (x < 0 || x >= d)
      throw Error(ErrorKind::OutOfRange, "image " + std::to_string(x) + " not in [0, " +
                                             std::to_string(d) + ")");
    if (seen[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::RepeatedEntry, "image " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x)] = true;
    b.v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
  return Perm(d, b);
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  check_degree(degree);
  simd::Block b = simd::identity_block();
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 0 || x >= degree)
        throw Error(ErrorKind::OutOfRange, "cycle entry " + std::to_string(x) + " not in [0, " +
                                               std::to_string(degree) + ")");
      if (used[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::RepeatedEntry, "cycle entry " + std::to_string(x) + " repeated");
      used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      b.v[static_cast<std::size_t>(cycle[k])] =
          static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
  }
  return Perm(degree, b);
}

Perm Perm::parse(int degree, std::string_view text) {
  check_degree(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw SyntaxError(pos, "trailing input after 'id'");
    return identity(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') throw SyntaxError(pos, "expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw SyntaxError(pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw SyntaxError(pos, "expected integer");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw SyntaxError(pos, "integer too large");
        ++pos;
      }
      cycle.push_back(value);
    }
    if (cycle.size() < 2) throw SyntaxError(pos - 1, "cycle needs at least two points");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (cycles.empty()) throw SyntaxError(pos, "empty permutation (use 'id')");
  return from_cycles(degree, cycles);
}

std::vector<int> Perm::images() const {
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i);
  return out;
}

bool Perm::is_identity() const noexcept {
  for (int i = 0; i < degree_; ++i)
    if (images_.v[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Perm::sign() const {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = (*this)(j)) seen |= 1u << j;
  }
  return ((degree_ - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen & (1u << i)) continue;
    std::vector<int> cycle;
    for (int j = i; !(seen & (1u << j)); j = (*this)(j)) {
      seen |= 1u << j;
      cycle.push_back(j);
    }
    if (cycle.size() >= 2) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of degree " +
                                               std::to_string(p.degree()) + " and " +
                                               std::to_string(q.degree()));
  simd::Block out;
  simd::active().compose(&out, &p.block(), &q.block(), 1);
  return Perm::from_block(p.degree(), out);
}

Perm inverse(const Perm& p) {
  simd::Block out = simd::identity_block();
  for (int i = 0; i < p.degree(); ++i)
    out.v[static_cast<std::size_t>(p(i))] = static_cast<std::uint8_t>(i);
  return Perm::from_block(p.degree(), out);
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

} // namespace wreath

std::size_t std::hash<wreath::Perm>::operator()(const wreath::Perm& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.degree());
  for (int i = 0; i < p.degree(); ++i) h = h * 31 + static_cast<std::size_t>(p(i));
  return h;
}
