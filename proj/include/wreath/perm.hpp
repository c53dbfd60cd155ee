#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/simd/kernels.hpp"

namespace wreath {

inline constexpr int kMaxDegree = simd::kBlockWidth;

// A permutation of {0, ..., d-1}, 2 <= d <= 16.
//
// Composition is right-to-left: (p * q)(i) = p(q(i)).
class Perm {
public:
  Perm() : Perm(identity(2)) {}

  static Perm identity(int degree);

  // images[i] is the image of i; must be a bijection of {0, ..., size-1}.
  static Perm from_images(std::span<const int> images);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  // Cycle notation `(0 1 2)(3 4)` or `id`, 0-based.
  static Perm parse(int degree, std::string_view text);

  // Wraps a block produced by the kernels; the block must already be a valid
  // permutation that fixes every point >= degree.
  static Perm from_block(int degree, const simd::Block& block) { return Perm(degree, block); }

  int degree() const noexcept { return degree_; }
  int operator()(int i) const { return images_.v[static_cast<std::size_t>(i)]; }
  const simd::Block& block() const noexcept { return images_; }
  std::vector<int> images() const;

  bool is_identity() const noexcept;
  bool is_even() const { return sign() == 1; }
  // +1 or -1, from the cycle count.
  int sign() const;
  // Disjoint cycles of length >= 2, each starting at its least element,
  // sorted by least element.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_.v <=> b.images_.v;
  }

private:
  Perm(int degree, const simd::Block& images) : degree_(degree), images_(images) {}

  int degree_;
  simd::Block images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

std::ostream& operator<<(std::ostream& os, const Perm& p);

void check_degree(int degree);

} // namespace wreath

template <>
struct std::hash<wreath::Perm> {
  std::size_t operator()(const wreath::Perm& p) const noexcept;
};
