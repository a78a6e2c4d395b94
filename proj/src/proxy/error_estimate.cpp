#include <algorithm>
#include <limits>

#include "proxyalign/error.hpp"
#include "proxyalign/proxy.hpp"

namespace proxyalign::proxy {

ErrorEstimate epsilon_max_error(const EventLog& log, std::span<const Trace> proxies) {
  if (proxies.empty()) throw InvalidArgument("epsilon_max_error: empty proxy-set");
  ErrorEstimate e;
  e.min_distance.reserve(log.variant_count());
  e.nearest.reserve(log.variant_count());
  for (const auto& v : log.variants()) {
    const auto nearest = distance::distance_to_set(v.trace, proxies);
    e.min_distance.push_back(static_cast<std::uint32_t>(nearest.distance));
    e.nearest.push_back(nearest.index);
    e.total += v.multiplicity * nearest.distance;
  }
  return e;
}

bool dominates(std::span<const Trace> omega, std::span<const Trace> other, const EventLog& log) {
  if (omega.empty() || other.empty()) throw InvalidArgument("dominates: empty proxy-set");
  if (omega.size() >= other.size()) return false;
  return epsilon_max_error(log, omega).total <= epsilon_max_error(log, other).total;
}

ProxySet brute_force_k_primal(const EventLog& log, std::size_t k, std::span<const Trace> universe) {
  const std::size_t u = universe.size();
  if (u > kMaxPrimalUniverse) {
    throw InvalidArgument("candidate universe of " + std::to_string(u) + " traces exceeds " +
                          std::to_string(kMaxPrimalUniverse));
  }
  if (k < 1 || k > u) throw InvalidArgument("k outside [1, |universe|]");

  // dist[v * u + c]: distance from variant v to candidate c.
  const std::size_t n = log.variant_count();
  std::vector<std::uint32_t> dist(n * u);
  for (std::size_t v = 0; v < n; ++v) {
    const auto row = distance::distances_to_many(log[v].trace, universe);
    std::copy(row.begin(), row.end(), dist.begin() + static_cast<std::ptrdiff_t>(v * u));
  }

  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  std::vector<std::size_t> best_combo;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (;;) {
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n && total < best; ++v) {
      std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
      for (auto c : combo) m = std::min(m, dist[v * u + c]);
      total += log[v].multiplicity * m;
    }
    if (total < best) {
      best = total;
      best_combo = combo;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == u - k + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  std::vector<Trace> members;
  for (auto c : best_combo) members.push_back(universe[c]);
  return ProxySet(std::move(members), {"k-primal", k, std::nullopt, 0});
}

}  // namespace proxyalign::proxy
