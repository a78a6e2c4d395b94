#include <chrono>

#include "proxyalign/bounds.hpp"
#include "proxyalign/parallel.hpp"

namespace proxyalign::bounds {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

}  // namespace

std::size_t compute_reference_costs(proxy::ProxySet& omega, const model::ProcessModel& model,
                                    const align::AlignerOptions& options, std::size_t jobs) {
  std::vector<std::size_t> costs(omega.size());
  parallel_for(omega.size(), jobs, [&](std::size_t i) {
    costs[i] = align::optimal_alignment(omega.members()[i], model, options).cost;
  });
  for (std::size_t i = 0; i < costs.size(); ++i) omega.set_ref_cost(i, costs[i]);
  return costs.size();
}

ApproxReport approximate_log(const EventLog& log, const model::ProcessModel& model,
                             const ApproxOptions& options) {
  std::optional<proxy::ProxySet> unused;
  return approximate_log(log, model, options, unused);
}

ApproxReport approximate_log(const EventLog& log, const model::ProcessModel& model,
                             const ApproxOptions& options, std::optional<proxy::ProxySet>& omega_out) {
  ApproxReport report;
  Timings timings;

  auto start = Clock::now();
  proxy::ProxySet omega = options.preset ? *options.preset
                                         : proxy::generate(log, options.params, nullptr, options.jobs);
  timings.proxy_generation = options.preset ? std::chrono::microseconds{0} : since(start);

  start = Clock::now();
  report.aligner_invocations = compute_reference_costs(omega, model, options.aligner, options.jobs);
  timings.reference_alignment = since(start);

  start = Clock::now();
  const ModelMeta meta = ModelMeta::from_model(model, options.strict);
  std::vector<BoundsResult> results(log.variant_count());
  parallel_for(log.variant_count(), options.jobs, [&](std::size_t i) {
    results[i] = approximate_cost(log[i].trace, omega, meta, options.estimator, options.upper_weight);
  });
  timings.bound_computation = since(start);

  report.per_variant.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::uint64_t mult = log[i].multiplicity;
    const auto& r = results[i];
    report.epsilon_max += mult * r.proxy_distance;
    report.total_lower += mult * r.lower;
    report.total_upper += mult * r.upper;
    report.total_estimate += r.estimate * static_cast<std::int64_t>(mult);
    report.per_variant.push_back({std::move(results[i]), mult});
  }
  report.total_traces = log.total_traces();
  report.estimator = std::string(estimator_name(options.estimator));
  report.upper_weight = options.upper_weight;
  report.provenance = omega.provenance();
  report.proxies.assign(omega.members().begin(), omega.members().end());
  for (std::size_t i = 0; i < omega.size(); ++i) report.proxy_costs.push_back(*omega.ref_cost(i));
  report.timings = timings;
  omega_out = std::move(omega);
  return report;
}

}  // namespace proxyalign::bounds
