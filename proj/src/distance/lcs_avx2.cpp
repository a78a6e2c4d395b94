#include <immintrin.h>

#include <algorithm>

#include "proxyalign/simd/lcs_kernels.hpp"

namespace proxyalign::simd {

static_assert(kLanes == 8, "AVX2 kernel packs eight 32-bit lanes");

void lcs_batch_avx2(std::span<const std::uint32_t> query, std::span<const std::uint32_t> packed,
                    std::size_t width, std::span<std::uint32_t> row,
                    std::span<std::uint32_t, kLanes> out) {
  auto* cells = reinterpret_cast<__m256i*>(row.data());
  const auto* targets = reinterpret_cast<const __m256i*>(packed.data());
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi32(1);
  for (std::size_t k = 0; k <= width; ++k) _mm256_storeu_si256(cells + k, zero);

  for (const std::uint32_t q : query) {
    const __m256i symbol = _mm256_set1_epi32(static_cast<int>(q));
    __m256i diag = zero;
    __m256i left = zero;
    for (std::size_t k = 1; k <= width; ++k) {
      const __m256i up = _mm256_loadu_si256(cells + k);
      const __m256i match = _mm256_cmpeq_epi32(_mm256_loadu_si256(targets + (k - 1)), symbol);
      const __m256i value = _mm256_blendv_epi8(_mm256_max_epu32(up, left),
                                               _mm256_add_epi32(diag, one), match);
      diag = up;
      _mm256_storeu_si256(cells + k, value);
      left = value;
    }
  }
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data()), _mm256_loadu_si256(cells + width));
}

}  // namespace proxyalign::simd
