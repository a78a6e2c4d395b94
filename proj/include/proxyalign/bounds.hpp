#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "proxyalign/aligner.hpp"
#include "proxyalign/event_log.hpp"
#include "proxyalign/model.hpp"
#include "proxyalign/proxy.hpp"
#include "proxyalign/rational.hpp"

namespace proxyalign::bounds {

/// What the structural lower bound needs to know about a model.
struct ModelMeta {
  std::unordered_set<std::uint32_t> alphabet;  ///< activity ids
  std::size_t min_visible_length = 0;
  /// When false the count of activities outside the alphabet is left out of
  /// the structural term (unverified Petri alphabets in strict mode).
  bool use_alphabet_term = true;

  static ModelMeta from_model(const model::ProcessModel& model, bool strict = false);
};

/// Which term of the lower bound attains the maximum.
enum class LowerSource { Structural, Proxy, Both };
std::string_view lower_source_name(LowerSource s);
LowerSource parse_lower_source(std::string_view name);

struct LowerBound {
  std::size_t value = 0;
  LowerSource source = LowerSource::Both;
  std::size_t structural = 0;  ///< max(0, minLen - |trace|) + |trace outside alphabet|
  std::size_t proxy = 0;       ///< max(0, max over proxies of z - delta)
};

/// max(0, min visible model length - |trace|) + number of trace events whose
/// activity is outside the model alphabet.
std::size_t structural_lower_bound(const Trace& trace, const ModelMeta& meta);

/// min over proxies of (z(proxy) + delta(trace, proxy)). Requires every
/// reference cost.
std::size_t upper_bound(const Trace& trace, const proxy::ProxySet& omega);

/// max(structural term, max over proxies of (z(proxy) - delta(trace, proxy))),
/// the proxy term clamped at 0.
LowerBound lower_bound(const Trace& trace, const proxy::ProxySet& omega, const ModelMeta& meta);

enum class Estimator {
  Midpoint,              ///< w * upper + (1 - w) * lower, w = 1/2 by default
  HalfDistanceZeroCost,  ///< delta(trace, nearest) / 2; proxies must all cost 0
};
std::string_view estimator_name(Estimator e);
Estimator parse_estimator(std::string_view name);

struct BoundsResult {
  Trace trace;
  std::size_t lower = 0;
  std::size_t upper = 0;
  Rational estimate{0};
  Trace nearest_proxy;
  std::size_t proxy_distance = 0;
  LowerSource lower_source = LowerSource::Both;
};

/// Bounds and point estimate for one trace. `upper_weight` must lie in [0, 1].
BoundsResult approximate_cost(const Trace& trace, const proxy::ProxySet& omega,
                              const ModelMeta& meta, Estimator estimator = Estimator::Midpoint,
                              const Rational& upper_weight = Rational(1, 2));

struct VariantBounds {
  BoundsResult bounds;
  std::uint64_t multiplicity = 0;
};

struct Timings {
  std::chrono::microseconds proxy_generation{0};
  std::chrono::microseconds reference_alignment{0};
  std::chrono::microseconds bound_computation{0};
};

struct ApproxReport {
  std::vector<VariantBounds> per_variant;  ///< log variant order
  std::uint64_t epsilon_max = 0;
  Rational total_estimate{0};
  std::uint64_t total_lower = 0;
  std::uint64_t total_upper = 0;
  std::size_t aligner_invocations = 0;
  std::uint64_t total_traces = 0;
  std::string estimator = "midpoint";
  Rational upper_weight{1, 2};
  proxy::Provenance provenance;
  std::vector<Trace> proxies;
  std::vector<std::size_t> proxy_costs;
  std::optional<Timings> timings;
};

struct ApproxOptions {
  proxy::StrategyParams params;
  /// Use this proxy-set instead of generating one (reference costs are still
  /// computed by the aligner).
  std::optional<proxy::ProxySet> preset;
  Estimator estimator = Estimator::Midpoint;
  Rational upper_weight{1, 2};
  bool strict = false;
  std::size_t jobs = 1;
  align::AlignerOptions aligner;
};

/// Exactly aligns each proxy once, then bounds and estimates every variant.
ApproxReport approximate_log(const EventLog& log, const model::ProcessModel& model,
                             const ApproxOptions& options);

/// Same as above, also returning the proxy-set with its reference costs.
ApproxReport approximate_log(const EventLog& log, const model::ProcessModel& model,
                             const ApproxOptions& options, std::optional<proxy::ProxySet>& omega_out);

/// Aligns each proxy member exactly and stores the costs; returns the number
/// of aligner invocations.
std::size_t compute_reference_costs(proxy::ProxySet& omega, const model::ProcessModel& model,
                                    const align::AlignerOptions& options, std::size_t jobs);

}  // namespace proxyalign::bounds
