#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "proxyalign/error.hpp"
#include "proxyalign/proxy.hpp"

namespace proxyalign::proxy {
namespace {

constexpr std::uint64_t kFar = std::numeric_limits<std::uint32_t>::max();

void check_k(const EventLog& log, std::size_t k) {
  if (k < 1 || k > log.variant_count()) {
    throw InvalidArgument("proxy size k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(log.variant_count()) + "]");
  }
}

const distance::DistanceMatrix& matrix_for(const EventLog& log,
                                           const distance::DistanceMatrix* given,
                                           std::optional<distance::DistanceMatrix>& storage,
                                           std::size_t jobs) {
  if (given != nullptr) {
    if (given->size() != log.variant_count()) {
      throw InvalidArgument("distance matrix does not match the log's variants");
    }
    return *given;
  }
  const auto traces = log.variant_traces();
  storage = distance::distance_matrix(traces, jobs);
  return *storage;
}

ProxySet from_indices(const EventLog& log, std::span<const std::size_t> indices, std::string name,
                      std::uint64_t seed) {
  std::vector<Trace> members;
  for (auto i : indices) members.push_back(log[i].trace);
  return ProxySet(std::move(members), {std::move(name), indices.size(), std::nullopt, seed});
}

/// Nearest and second-nearest medoid distance for every object.
struct Assignment {
  std::vector<std::size_t> nearest;  ///< position in the medoid list
  std::vector<std::uint64_t> d1;
  std::vector<std::uint64_t> d2;
};

Assignment assign(const distance::DistanceMatrix& dm, std::span<const std::size_t> medoids) {
  const std::size_t n = dm.size();
  Assignment a{std::vector<std::size_t>(n, 0), std::vector<std::uint64_t>(n, kFar),
               std::vector<std::uint64_t>(n, kFar)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < medoids.size(); ++m) {
      const std::uint64_t d = dm(medoids[m], j);
      if (d < a.d1[j]) {
        a.d2[j] = a.d1[j];
        a.d1[j] = d;
        a.nearest[j] = m;
      } else if (d < a.d2[j]) {
        a.d2[j] = d;
      }
    }
  }
  return a;
}

}  // namespace

std::uint32_t kcenter_radius(const distance::DistanceMatrix& matrix,
                             std::span<const std::size_t> centers) {
  std::uint32_t radius = 0;
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (auto c : centers) best = std::min(best, matrix(c, j));
    radius = std::max(radius, best);
  }
  return radius;
}

std::uint64_t kmedoids_objective(const distance::DistanceMatrix& matrix,
                                 std::span<const std::uint64_t> weights,
                                 std::span<const std::size_t> medoids) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (auto m : medoids) best = std::min(best, matrix(m, j));
    total += weights[j] * best;
  }
  return total;
}

ProxySet cluster_kmedoids(const EventLog& log, std::size_t k, std::uint64_t seed,
                          const distance::DistanceMatrix* matrix, std::size_t jobs) {
  check_k(log, k);
  std::optional<distance::DistanceMatrix> storage;
  const auto& dm = matrix_for(log, matrix, storage, jobs);
  const std::size_t n = dm.size();
  std::vector<std::uint64_t> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = log[j].multiplicity;

  // BUILD: add the object that lowers the weighted objective most.
  std::vector<std::size_t> medoids;
  std::vector<char> is_medoid(n, 0);
  std::vector<std::uint64_t> current(n, kFar);
  while (medoids.size() < k) {
    std::optional<std::size_t> best;
    std::uint64_t best_total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_medoid[c]) continue;
      std::uint64_t total = 0;
      for (std::size_t j = 0; j < n; ++j) total += w[j] * std::min<std::uint64_t>(current[j], dm(c, j));
      if (!best || total < best_total) {
        best = c;
        best_total = total;
      }
    }
    medoids.push_back(*best);
    is_medoid[*best] = 1;
    for (std::size_t j = 0; j < n; ++j) current[j] = std::min<std::uint64_t>(current[j], dm(*best, j));
  }

  // SWAP: apply the best strictly improving (medoid, non-medoid) exchange.
  for (;;) {
    const Assignment a = assign(dm, medoids);
    std::int64_t best_delta = 0;
    std::size_t best_m = 0, best_o = 0;
    for (std::size_t m = 0; m < medoids.size(); ++m) {
      for (std::size_t o = 0; o < n; ++o) {
        if (is_medoid[o]) continue;
        std::int64_t delta = 0;
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint64_t via_new = dm(o, j);
          const std::uint64_t kept = a.nearest[j] == m ? a.d2[j] : a.d1[j];
          const std::uint64_t after = std::min(kept, via_new);
          delta += static_cast<std::int64_t>(w[j]) *
                   (static_cast<std::int64_t>(after) - static_cast<std::int64_t>(a.d1[j]));
        }
        if (delta < best_delta) {
          best_delta = delta;
          best_m = m;
          best_o = o;
        }
      }
    }
    if (best_delta >= 0) break;
    is_medoid[medoids[best_m]] = 0;
    is_medoid[best_o] = 1;
    medoids[best_m] = best_o;
  }
  return from_indices(log, medoids, "kmedoids", seed);
}

ProxySet cluster_kcenter(const EventLog& log, std::size_t k, std::uint64_t seed,
                         const distance::DistanceMatrix* matrix, std::size_t jobs) {
  check_k(log, k);
  std::optional<distance::DistanceMatrix> storage;
  const auto& dm = matrix_for(log, matrix, storage, jobs);
  const std::size_t n = dm.size();

  // Frequency rank: multiplicity descending, then canonical (= index) order.
  std::vector<std::size_t> rank_order(n);
  std::iota(rank_order.begin(), rank_order.end(), 0);
  std::stable_sort(rank_order.begin(), rank_order.end(), [&](std::size_t a, std::size_t b) {
    return log[a].multiplicity > log[b].multiplicity;
  });

  std::vector<std::size_t> centers{rank_order.front()};
  std::vector<std::uint32_t> nearest(n);
  for (std::size_t j = 0; j < n; ++j) nearest[j] = dm(centers[0], j);
  while (centers.size() < k) {
    std::size_t next = rank_order.front();
    std::int64_t best = -1;
    for (std::size_t j : rank_order) {
      if (static_cast<std::int64_t>(nearest[j]) > best) {
        best = nearest[j];
        next = j;
      }
    }
    centers.push_back(next);
    for (std::size_t j = 0; j < n; ++j) nearest[j] = std::min(nearest[j], dm(next, j));
  }
  return from_indices(log, centers, "kcenter", seed);
}

}  // namespace proxyalign::proxy
