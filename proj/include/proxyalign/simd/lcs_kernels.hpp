#pragma once

// Batched LCS-length kernels. A batch packs up to kLanes target sequences
// interleaved by position (symbol of lane j at position p lives at
// packed[p * kLanes + j]); shorter lanes are padded with kPadSymbol, which
// never matches a query symbol and therefore leaves each LCS unchanged.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace proxyalign::simd {

inline constexpr std::size_t kLanes = 8;
inline constexpr std::uint32_t kPadSymbol = 0xFFFFFFFFu;

enum class Level { Scalar, Avx2 };

std::string_view level_name(Level level);

/// out[j] = LCS(query, lane j). `row` is scratch of at least
/// (width + 1) * kLanes entries; `packed` holds width * kLanes symbols.
using LcsBatchKernel = void (*)(std::span<const std::uint32_t> query,
                                std::span<const std::uint32_t> packed, std::size_t width,
                                std::span<std::uint32_t> row,
                                std::span<std::uint32_t, kLanes> out);

void lcs_batch_scalar(std::span<const std::uint32_t> query, std::span<const std::uint32_t> packed,
                      std::size_t width, std::span<std::uint32_t> row,
                      std::span<std::uint32_t, kLanes> out);

#if defined(PROXYALIGN_HAVE_AVX2_KERNEL)
void lcs_batch_avx2(std::span<const std::uint32_t> query, std::span<const std::uint32_t> packed,
                    std::size_t width, std::span<std::uint32_t> row,
                    std::span<std::uint32_t, kLanes> out);
#endif

/// Reference pairwise LCS length, two-row dynamic program.
std::uint32_t lcs_pair_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Highest level this binary was built with and the CPU supports.
Level detected_level();

/// Level used by the dispatching entry points. Defaults to detected_level(),
/// or to the PROXYALIGN_SIMD environment variable ("scalar" / "avx2") when set
/// and supported.
Level active_level();

/// Overrides the active level; requesting an unsupported level falls back to
/// Scalar. Returns the level actually installed.
Level set_active_level(Level level);

LcsBatchKernel kernel_for(Level level);

}  // namespace proxyalign::simd
