#include <algorithm>
#include <cmath>

#include "proxyalign/error.hpp"
#include "proxyalign/harness.hpp"

namespace proxyalign::harness {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("pearson: length mismatch");
  if (xs.size() < 2) throw InvalidArgument("pearson: need at least two points");
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw InvalidArgument("pearson: undefined correlation (constant input)");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

PerformanceImprovement performance_improvement(std::chrono::microseconds exact,
                                               std::chrono::microseconds approx_with_generation,
                                               std::chrono::microseconds approx_without_generation) {
  if (exact.count() <= 0 || approx_with_generation.count() <= 0 ||
      approx_without_generation.count() <= 0) {
    throw InvalidArgument("performance improvement needs positive durations");
  }
  const auto e = static_cast<double>(exact.count());
  return {e / static_cast<double>(approx_with_generation.count()),
          e / static_cast<double>(approx_without_generation.count())};
}

}  // namespace proxyalign::harness
