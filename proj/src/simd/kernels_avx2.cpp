#include "wreath/simd/kernels.hpp"

#include <immintrin.h>

// Two labels per 256-bit register; vpshufb shuffles within each 128-bit
// lane, which is exactly one label per lane.
namespace wreath::simd::detail {
namespace {

inline __m128i load1(const Block& b) {
  return _mm_load_si128(reinterpret_cast<const __m128i*>(b.v.data()));
}

inline __m256i load2(const Block& lo, const Block& hi) {
  return _mm256_inserti128_si256(_mm256_castsi128_si256(load1(lo)), load1(hi), 1);
}

inline void store2(Block* out, __m256i x) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out->v.data()), x);
}

void compose(Block* out, const Block* lhs, const Block* rhs, std::size_t count) {
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs[k].v.data()));
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs[k].v.data()));
    store2(out + k, _mm256_shuffle_epi8(l, r));
  }
  if (k < count)
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].v.data()),
                    _mm_shuffle_epi8(load1(lhs[k]), load1(rhs[k])));
}

void compose_gather(Block* out, const Block* lhs, const Block* rhs,
                    const std::uint32_t* index, std::size_t count) {
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs[k].v.data()));
    const __m256i r = load2(rhs[index[k]], rhs[index[k + 1]]);
    store2(out + k, _mm256_shuffle_epi8(l, r));
  }
  if (k < count)
    _mm_store_si128(reinterpret_cast<__m128i*>(out[k].v.data()),
                    _mm_shuffle_epi8(load1(lhs[k]), load1(rhs[index[k]])));
}

bool all_identity(const Block* blocks, std::size_t count) {
  const __m256i iota = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                        0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  __m256i diff = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(blocks[k].v.data()));
    diff = _mm256_or_si256(diff, _mm256_xor_si256(x, iota));
  }
  if (k < count)
    diff = _mm256_or_si256(
        diff, _mm256_inserti128_si256(_mm256_setzero_si256(),
                                      _mm_xor_si128(load1(blocks[k]), _mm256_castsi256_si128(iota)), 0));
  return _mm256_testz_si256(diff, diff) != 0;
}

} // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{Backend::Avx2, compose, compose_gather, all_identity};
  return k;
}

} // namespace wreath::simd::detail
