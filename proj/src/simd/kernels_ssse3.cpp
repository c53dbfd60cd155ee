#include "wreath/simd/kernels.hpp"

#include <tmmintrin.h>

namespace wreath::simd::detail {
namespace {

inline __m128i load(const Block& b) {
  return _mm_load_si128(reinterpret_cast<const __m128i*>(b.v.data()));
}

inline void store(Block& b, __m128i x) {
  _mm_store_si128(reinterpret_cast<__m128i*>(b.v.data()), x);
}

void compose(Block* out, const Block* lhs, const Block* rhs, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    store(out[k], _mm_shuffle_epi8(load(lhs[k]), load(rhs[k])));
}

void compose_gather(Block* out, const Block* lhs, const Block* rhs,
                    const std::uint32_t* index, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k)
    store(out[k], _mm_shuffle_epi8(load(lhs[k]), load(rhs[index[k]])));
}

bool all_identity(const Block* blocks, std::size_t count) {
  const __m128i iota = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  __m128i diff = _mm_setzero_si128();
  for (std::size_t k = 0; k < count; ++k)
    diff = _mm_or_si128(diff, _mm_xor_si128(load(blocks[k]), iota));
  return _mm_movemask_epi8(_mm_cmpeq_epi8(diff, _mm_setzero_si128())) == 0xFFFF;
}

} // namespace

const Kernels& ssse3_kernels() {
  static const Kernels k{Backend::Ssse3, compose, compose_gather, all_identity};
  return k;
}

} // namespace wreath::simd::detail
