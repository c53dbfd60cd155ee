#pragma once

// Batched node-label kernels.
//
// A node label is a permutation of at most 16 points stored as 16 image
// bytes; points at or beyond the degree map to themselves. With that layout
// composing two labels is one byte shuffle, which is what the vector
// backends exploit. The scalar backend is the reference every other backend
// is tested against.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wreath::simd {

inline constexpr int kBlockWidth = 16;

struct alignas(16) Block {
  std::array<std::uint8_t, kBlockWidth> v;

  friend bool operator==(const Block&, const Block&) = default;
};

Block identity_block();

enum class Backend { Scalar, Ssse3, Avx2, Neon };

std::string_view to_string(Backend backend);

struct Kernels {
  Backend backend;
  // out[k] = lhs[k] ∘ rhs[k]   (rhs acts first: out[k].v[i] = lhs[k].v[rhs[k].v[i]])
  void (*compose)(Block* out, const Block* lhs, const Block* rhs, std::size_t count);
  // out[k] = lhs[k] ∘ rhs[index[k]]
  void (*compose_gather)(Block* out, const Block* lhs, const Block* rhs,
                         const std::uint32_t* index, std::size_t count);
  // true iff every block is the identity
  bool (*all_identity)(const Block* blocks, std::size_t count);
};

// Kernels for the best backend this CPU supports (or the forced one).
const Kernels& active();

// Backends compiled in and supported by the running CPU, scalar first.
std::vector<Backend> available_backends();

const Kernels& kernels_for(Backend backend);

// Pin the active backend; intended for tests and benchmarks. Throws if the
// backend is not available.
void force_backend(Backend backend);
void reset_backend();

namespace detail {
const Kernels& scalar_kernels();
const Kernels& ssse3_kernels();
const Kernels& avx2_kernels();
const Kernels& neon_kernels();
} // namespace detail

} // namespace wreath::simd
