#include "wreath/simd/kernels.hpp"

namespace wreath::simd::detail {
namespace {

inline void compose_one(Block& out, const Block& lhs, const Block& rhs) {
  for (int i = 0; i < kBlockWidth; ++i) out.v[i] = lhs.v[rhs.v[i]];
}

void compose(Block* out, const Block* lhs, const Block* rhs, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) compose_one(out[k], lhs[k], rhs[k]);
}

void compose_gather(Block* out, const Block* lhs, const Block* rhs,
                    const std::uint32_t* index, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) compose_one(out[k], lhs[k], rhs[index[k]]);
}

bool all_identity(const Block* blocks, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    for (int i = 0; i < kBlockWidth; ++i)
      if (blocks[k].v[i] != i) return false;
  return true;
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Backend::Scalar, compose, compose_gather, all_identity};
  return k;
}

} // namespace wreath::simd::detail
