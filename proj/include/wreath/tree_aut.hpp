#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/perm.hpp"

namespace wreath {

// Number of internal vertices of the d-ary tree of depth n: (d^n - 1)/(d - 1).
std::size_t node_count(int degree, int level);
// Level-order index of the first vertex at the given depth.
std::size_t depth_offset(int degree, int depth);

// A vertex of T_n: a word over {0, ..., d-1} of length at most n.
struct VertexWord {
  int degree = 2;
  std::vector<int> letters;

  friend bool operator==(const VertexWord&, const VertexWord&) = default;
};

VertexWord parse_word(int degree, std::string_view text);
std::string to_string(const VertexWord& w);

// An automorphism of the d-ary rooted tree truncated at depth n, stored as a
// dense portrait: one label per internal vertex in level order.
//
// Writing a = (x_0, ..., x_{d-1}) tau, the action on words is
//
//     a(i v) = tau(i) x_{tau(i)}(v),
//
// i.e. the label of a vertex is stored at the vertex's image. The product
// a * b acts as b first, then a. With these conventions
//
//     (x)(y)       = (x_0 y_0, ..., x_{d-1} y_{d-1})
//     tau (x)      = (x_{tau^-1(0)}, ..., x_{tau^-1(d-1)}) tau
//     (x) tau      = (x) * tau
//
// hold as identities; see tests/test_tree_aut.cpp.
class TreeAut {
public:
  TreeAut() : TreeAut(identity(2, 0)) {}

  static TreeAut identity(int degree, int level);
  // tau at the root, identity below.
  static TreeAut embed(const Perm& tau, int level);
  // (children[0], ..., children[d-1]) tau; every child has level n-1.
  static TreeAut assemble(std::span<const TreeAut> children, const Perm& tau);
  // Portrait from level-order labels; labels.size() must be node_count(d, n).
  static TreeAut from_labels(int degree, int level, std::vector<simd::Block> labels);
  // No validation; for kernels that produce labels known to be valid.
  static TreeAut from_labels_unchecked(int degree, int level, std::vector<simd::Block> labels) {
    return TreeAut(degree, level, std::move(labels));
  }

  int degree() const noexcept { return degree_; }
  int level() const noexcept { return level_; }

  // Root label; identity at level 0.
  Perm root() const;
  TreeAut child(int i) const;
  Perm label(std::size_t node) const { return Perm::from_block(degree_, labels_[node]); }
  std::span<const simd::Block> labels() const noexcept { return labels_; }
  bool is_identity() const;

  friend bool operator==(const TreeAut&, const TreeAut&) = default;

private:
  TreeAut(int degree, int level, std::vector<simd::Block> labels)
      : degree_(degree), level_(level), labels_(std::move(labels)) {}

  int degree_;
  int level_;
  std::vector<simd::Block> labels_;
};

TreeAut compose(const TreeAut& a, const TreeAut& b);
TreeAut inverse(const TreeAut& a);
TreeAut power(const TreeAut& a, long long exponent);
// Truncation to T_m (the projection pi_m).
TreeAut restrict(const TreeAut& a, int m);
VertexWord act_on_word(const TreeAut& a, const VertexWord& v);
// sign(root) * prod sign(child roots); depends only on restrict(a, 2).
int sgn2(const TreeAut& a);
// Least k in [1, bound] with a^k = 1.
std::optional<int> order_of(const TreeAut& a, int bound);

inline TreeAut operator*(const TreeAut& a, const TreeAut& b) { return compose(a, b); }

// Element literal codec:
//   aut   := "e" | perm | "(" aut ("," aut)* ")" [perm]
//   perm  := "id" | cycle+
//   cycle := "(" int (" " int)+ ")"
// Under-specified literals are padded with identity down to `level`.
TreeAut parse_aut(int degree, int level, std::string_view text);
std::string to_string(const TreeAut& a);
std::ostream& operator<<(std::ostream& os, const TreeAut& a);

void check_level(int level);

} // namespace wreath

template <>
struct std::hash<wreath::TreeAut> {
  std::size_t operator()(const wreath::TreeAut& a) const noexcept;
};
