#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxyalign/distance.hpp"
#include "proxyalign/event_log.hpp"
#include "proxyalign/rational.hpp"

namespace proxyalign::proxy {

enum class Strategy { Random, Frequency, KMedoids, KCenter };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

struct StrategyParams {
  Strategy strategy = Strategy::Frequency;
  Rational size_percent{10};
  std::uint64_t seed = 0;
};

/// k = max(1, round_half_up(size_percent / 100 * variants)), capped at the
/// variant count. size_percent must lie in (0, 100].
std::size_t proxy_size(const Rational& size_percent, std::size_t variants);

struct Provenance {
  std::string strategy;  ///< strategy name, or "external" for loaded sets
  std::size_t k = 0;
  std::optional<Rational> size_percent;
  std::uint64_t seed = 0;
};

/// A non-empty set of reference traces with their cached exact alignment
/// costs. Members are kept in canonical order and are distinct.
class ProxySet {
 public:
  explicit ProxySet(std::vector<Trace> members, Provenance provenance = {});

  std::span<const Trace> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Provenance& provenance() const { return provenance_; }

  bool contains(const Trace& t) const;
  std::optional<std::size_t> index_of(const Trace& t) const;

  void set_ref_cost(std::size_t member, std::size_t cost);
  std::optional<std::size_t> ref_cost(std::size_t member) const { return ref_costs_.at(member); }
  bool ref_costs_complete() const;
  /// Throws InvalidArgument naming the first member without a cost.
  void require_ref_costs() const;

 private:
  std::vector<Trace> members_;
  std::vector<std::optional<std::size_t>> ref_costs_;
  Provenance provenance_;
};

ProxySet sample_random(const EventLog& log, std::size_t k, std::uint64_t seed);
ProxySet sample_frequency(const EventLog& log, std::size_t k);

/// Frequency-weighted k-medoids (greedy BUILD then best-improvement SWAP until
/// no swap lowers the objective). Pass a precomputed matrix over
/// log.variant_traces() to avoid recomputing it.
ProxySet cluster_kmedoids(const EventLog& log, std::size_t k, std::uint64_t seed,
                          const distance::DistanceMatrix* matrix = nullptr, std::size_t jobs = 1);

/// Greedy farthest-first traversal seeded with the most frequent variant.
ProxySet cluster_kcenter(const EventLog& log, std::size_t k, std::uint64_t seed,
                         const distance::DistanceMatrix* matrix = nullptr, std::size_t jobs = 1);

ProxySet generate(const EventLog& log, const StrategyParams& params,
                  const distance::DistanceMatrix* matrix = nullptr, std::size_t jobs = 1);

/// Frequency-weighted sum of each variant's distance to its nearest proxy.
struct ErrorEstimate {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> min_distance;  ///< per variant, log order
  std::vector<std::size_t> nearest;         ///< index into the proxy members
};

ErrorEstimate epsilon_max_error(const EventLog& log, std::span<const Trace> proxies);
inline ErrorEstimate epsilon_max_error(const EventLog& log, const ProxySet& omega) {
  return epsilon_max_error(log, omega.members());
}

/// omega dominates other iff eps(omega) <= eps(other) and |omega| < |other|.
bool dominates(std::span<const Trace> omega, std::span<const Trace> other, const EventLog& log);

inline constexpr std::size_t kMaxPrimalUniverse = 15;

/// Exhaustive search over all k-subsets of `universe` for the one minimizing
/// eps; ties go to the lexicographically first index combination.
ProxySet brute_force_k_primal(const EventLog& log, std::size_t k, std::span<const Trace> universe);

/// Largest distance from a variant to its nearest chosen center.
std::uint32_t kcenter_radius(const distance::DistanceMatrix& matrix,
                             std::span<const std::size_t> centers);

/// Sum over variants of multiplicity times distance to the nearest medoid.
std::uint64_t kmedoids_objective(const distance::DistanceMatrix& matrix,
                                 std::span<const std::uint64_t> weights,
                                 std::span<const std::size_t> medoids);

}  // namespace proxyalign::proxy
