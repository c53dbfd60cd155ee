#include "wreath/simd/kernels.hpp"

#include <arm_neon.h>

namespace wreath::simd::detail {
namespace {

void compose(Block* out, const Block* lhs, const Block* rhs, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    vst1q_u8(out[k].v.data(), vqtbl1q_u8(vld1q_u8(lhs[k].v.data()), vld1q_u8(rhs[k].v.data())));
}

void compose_gather(Block* out, const Block* lhs, const Block* rhs,
                    const std::uint32_t* index, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    vst1q_u8(out[k].v.data(),
             vqtbl1q_u8(vld1q_u8(lhs[k].v.data()), vld1q_u8(rhs[index[k]].v.data())));
}

bool all_identity(const Block* blocks, std::size_t count) {
  static const std::uint8_t iota_bytes[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  const uint8x16_t iota = vld1q_u8(iota_bytes);
  uint8x16_t diff = vdupq_n_u8(0);
  for (std::size_t k = 0; k < count; ++k)
    diff = vorrq_u8(diff, veorq_u8(vld1q_u8(blocks[k].v.data()), iota));
  return vmaxvq_u8(diff) == 0;
}

} // namespace

const Kernels& neon_kernels() {
  static const Kernels k{Backend::Neon, compose, compose_gather, all_identity};
  return k;
}

} // namespace wreath::simd::detail
