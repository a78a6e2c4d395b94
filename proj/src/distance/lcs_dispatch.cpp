#include <atomic>
#include <cstdlib>
#include <string>

#include "proxyalign/simd/lcs_kernels.hpp"

namespace proxyalign::simd {
namespace {

bool cpu_has_avx2() {
#if defined(PROXYALIGN_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Level initial_level() {
  const Level detected = detected_level();
  if (const char* env = std::getenv("PROXYALIGN_SIMD")) {
    const std::string requested(env);
    if (requested == "scalar") return Level::Scalar;
    if (requested == "avx2" && detected == Level::Avx2) return Level::Avx2;
  }
  return detected;
}

std::atomic<Level>& active() {
  static std::atomic<Level> level{initial_level()};
  return level;
}

}  // namespace

std::string_view level_name(Level level) {
  switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
  }
  return "unknown";
}

Level detected_level() {
  static const Level level = cpu_has_avx2() ? Level::Avx2 : Level::Scalar;
  return level;
}

Level active_level() { return active().load(std::memory_order_relaxed); }

Level set_active_level(Level level) {
  if (level == Level::Avx2 && detected_level() != Level::Avx2) level = Level::Scalar;
  active().store(level, std::memory_order_relaxed);
  return level;
}

LcsBatchKernel kernel_for(Level level) {
#if defined(PROXYALIGN_HAVE_AVX2_KERNEL)
  if (level == Level::Avx2 && detected_level() == Level::Avx2) return &lcs_batch_avx2;
#endif
  (void)level;
  return &lcs_batch_scalar;
}

}  // namespace proxyalign::simd
