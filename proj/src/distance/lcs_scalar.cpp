#include <algorithm>
#include <vector>

#include "proxyalign/simd/lcs_kernels.hpp"

namespace proxyalign::simd {

void lcs_batch_scalar(std::span<const std::uint32_t> query, std::span<const std::uint32_t> packed,
                      std::size_t width, std::span<std::uint32_t> row,
                      std::span<std::uint32_t, kLanes> out) {
  std::fill_n(row.begin(), (width + 1) * kLanes, 0u);
  for (const std::uint32_t q : query) {
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      std::uint32_t diag = 0;
      std::uint32_t left = 0;
      for (std::size_t k = 1; k <= width; ++k) {
        const std::uint32_t up = row[k * kLanes + lane];
        const std::uint32_t value =
            packed[(k - 1) * kLanes + lane] == q ? diag + 1 : std::max(up, left);
        diag = up;
        row[k * kLanes + lane] = value;
        left = value;
      }
    }
  }
  for (std::size_t lane = 0; lane < kLanes; ++lane) out[lane] = row[width * kLanes + lane];
}

std::uint32_t lcs_pair_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace proxyalign::simd
