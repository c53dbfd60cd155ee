#pragma once

// Brute-force ground truth. Nothing here uses the membership predicates or
// the coset decomposition; groups are built by saturation and compared as
// explicit sets.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wreath/tree_aut.hpp"

namespace wreath {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

// Lehmer-code rank of a permutation in [0, d!).
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(int degree, std::uint64_t rank);

// Canonical fixed-width key of a portrait: level-order label ranks, each in
// factorial base, packed little-endian into bytes.
class PortraitCodec {
public:
  PortraitCodec(int degree, int level);

  int degree() const noexcept { return degree_; }
  int level() const noexcept { return level_; }
  std::size_t key_size() const noexcept { return nodes_ * bytes_per_label_; }

  std::string encode(const TreeAut& a) const;
  TreeAut decode(const std::string& key) const;

private:
  int degree_;
  int level_;
  std::size_t nodes_;
  std::size_t bytes_per_label_;
  // rank -> label, shared between copies; empty for d > 9
  std::shared_ptr<const std::vector<simd::Block>> unrank_table_;
};

// A deduplicated set of automorphisms of one (degree, level), stored as
// sorted canonical keys.
class ElementSet {
public:
  ElementSet(int degree, int level, std::vector<std::string> keys);

  int degree() const noexcept { return codec_.degree(); }
  int level() const noexcept { return codec_.level(); }
  std::size_t size() const noexcept { return keys_.size(); }
  bool contains(const TreeAut& a) const;
  TreeAut element(std::size_t i) const { return codec_.decode(keys_[i]); }
  std::vector<TreeAut> elements() const;
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const PortraitCodec& codec() const noexcept { return codec_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.degree() == b.degree() && a.level() == b.level() && a.keys_ == b.keys_;
  }

private:
  PortraitCodec codec_;
  std::vector<std::string> keys_;
};

// All of W_n; throws GuardExceeded when (d!)^((d^n-1)/(d-1)) > guard.
ElementSet enumerate_level(int degree, int level, std::uint64_t guard = kDefaultGuard);

// Subgroup generated by `gens` (breadth-first saturation). Throws
// GuardExceeded as soon as more than `guard` elements are found.
ElementSet closure(const std::vector<TreeAut>& gens, std::uint64_t guard = kDefaultGuard);
ElementSet closure_of_perms(const std::vector<Perm>& gens, std::uint64_t guard = kDefaultGuard);

// {x in ambient : x g x^-1 in group for all g in gens}. `gens` must lie in
// `group`; since the group is finite this is its normalizer in `ambient`.
ElementSet bruteforce_normalizer(const ElementSet& group, const std::vector<TreeAut>& gens,
                                 const ElementSet& ambient);

// Per-sample verdicts of the same conjugation test.
std::vector<bool> bruteforce_normalizer_verdicts(const ElementSet& group,
                                                 const std::vector<TreeAut>& gens,
                                                 const std::vector<TreeAut>& samples);

bool conjugation_normalizes(const ElementSet& group, const std::vector<TreeAut>& gens,
                            const TreeAut& x);

// Orbit of 0 under <gens> is everything.
bool is_transitive(const std::vector<Perm>& gens);

} // namespace wreath
