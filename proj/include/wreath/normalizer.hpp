#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreath/subgroup_tower.hpp"

namespace wreath {

// A coset of G_n in the normalizer tower, recorded as the exponents
// (k_1, k_2, ...) of w_1, w_2, ... . Family E at level n carries n-1 bits,
// family U carries n bits.
struct CosetVector {
  Family family = Family::U;
  int degree = 3;
  int level = 1;
  std::vector<std::uint8_t> bits;

  friend bool operator==(const CosetVector&, const CosetVector&) = default;
};

std::size_t coset_vector_length(Family family, int level);
CosetVector zero_vector(Family family, int degree, int level);
// Bits of `index` with k_1 as the most significant bit.
CosetVector vector_from_index(Family family, int degree, int level, std::uint64_t index);
CosetVector operator^(const CosetVector& a, const CosetVector& b);

// `E:3:4:101` (family:degree:level:bits, k_1 first).
std::string to_string(const CosetVector& v);
CosetVector parse_coset_vector(std::string_view text);

// w_1 is the root transposition (0 1); w_i = (w_{i-1}, ..., w_{i-1}).
// Returns w_i restricted to T_n (the identity when i > n).
TreeAut w_generator(int i, int degree, int level);

// prod_i w_i^{bits[i]} restricted to T_n.
TreeAut phi_representative(const CosetVector& v);

// Decides whether a lies in G_n * <w_1, w_2, ...> and if so returns its
// coset vector; std::nullopt means "not in the tower", which is not an error.
std::optional<CosetVector> coset_decompose(const TreeAut& a, Family family);

bool in_normalizer_tower(const TreeAut& a, Family family);

struct ComponentReport {
  bool in_tower = false;
  // (1) every child lies in the tower one level down
  bool children_in_tower = true;
  // (2) every x_i x_j^-1 lies in G_{n-1}
  bool quotients_in_group = true;
  std::vector<int> failing_children;
  std::vector<std::pair<int, int>> failing_pairs;

  bool passed() const { return children_in_tower && quotients_in_group; }
};

// Needs level >= 2. Tower membership of `a` itself is reported, not required.
ComponentReport component_checks(const TreeAut& a, Family family);

struct ShiftResult {
  CosetVector vector;       // decomposition of a
  CosetVector child_vector; // decomposition of child 0 of w_1^{-k_1} a
  bool passed = false;      // child_vector == vector with k_1 dropped
};

// Needs a in the tower and level >= 2 (U) or >= 3 (E).
ShiftResult shift_details(const TreeAut& a, Family family);
bool shift_check(const TreeAut& a, Family family);

// (k_1, ..., k_m) -> (k_2, ..., k_m, k_m): the shift with constant extension.
std::vector<std::uint8_t> shift_bits(const std::vector<std::uint8_t>& bits);

} // namespace wreath
