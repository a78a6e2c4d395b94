#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxyalign/bounds.hpp"
#include "proxyalign/event_log.hpp"
#include "proxyalign/model.hpp"
#include "proxyalign/proxy.hpp"
#include "proxyalign/rational.hpp"

namespace proxyalign::harness {

/// Parameters of a synthetic (model, log) pair. Model traces are random
/// sequences over `alphabet_size` activities; log variants are model traces
/// with random deletions and insertions (inserted activities may come from
/// `foreign_activities` labels outside the model alphabet). Multiplicities
/// follow a Zipf law over a random ranking of the variants.
struct SyntheticSpec {
  std::size_t alphabet_size = 12;
  std::size_t foreign_activities = 3;
  std::size_t model_trace_count = 40;
  std::size_t model_trace_min_length = 4;
  std::size_t model_trace_max_length = 10;
  std::size_t log_variant_count = 200;
  std::size_t noise_insert_min = 0;
  std::size_t noise_insert_max = 2;
  std::size_t noise_delete_min = 0;
  std::size_t noise_delete_max = 2;
  std::uint64_t multiplicity_max = 50;
  double zipf_exponent = 1.0;
  /// Rank variants with fewer noise operations first before assigning Zipf
  /// multiplicities, so the most frequent variants are the most conforming.
  bool frequent_variants_conform = true;
  std::uint64_t seed = 1;

  void validate() const;
  static SyntheticSpec from_json(std::string_view json);
  std::string to_json() const;
};

struct SyntheticInstance {
  model::ProcessModel model;
  EventLog log;
};

/// Deterministic per spec. When the noise settings cannot produce
/// `log_variant_count` distinct variants the log holds as many as were found.
SyntheticInstance generate_synthetic(const SyntheticSpec& spec);

/// Sample Pearson correlation. Throws InvalidArgument on a length mismatch,
/// fewer than two points, or a constant input ("undefined correlation").
double pearson(std::span<const double> xs, std::span<const double> ys);

struct PerformanceImprovement {
  double with_generation = 0;     ///< t_exact / (generation + reference + bounds)
  double without_generation = 0;  ///< t_exact / (reference + bounds)
};

/// Durations must be positive.
PerformanceImprovement performance_improvement(std::chrono::microseconds exact,
                                               std::chrono::microseconds approx_with_generation,
                                               std::chrono::microseconds approx_without_generation);

struct ExperimentGrid {
  std::vector<proxy::Strategy> strategies{proxy::Strategy::Random, proxy::Strategy::Frequency,
                                          proxy::Strategy::KMedoids, proxy::Strategy::KCenter};
  std::vector<Rational> size_percents{Rational(5), Rational(10), Rational(20), Rational(30),
                                      Rational(50)};
  std::size_t repeats = 4;
  std::uint64_t master_seed = 1;

  /// {"strategies": [...], "sizes": [...], "repeats": n, "master_seed": s};
  /// missing keys keep their defaults.
  static ExperimentGrid from_json(std::string_view json);
};

/// Seed of repetition `repeat` under `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t repeat);

struct ExperimentRow {
  proxy::Strategy strategy = proxy::Strategy::Random;
  Rational size_percent{0};
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  std::size_t proxy_size = 0;
  std::uint64_t epsilon_max = 0;
  Rational realized_error{0};  ///< sum over variants of multiplicity * |estimate - z|
  std::chrono::microseconds exact_time{0};
  bounds::Timings timings;
  double pi_with = 0;
  double pi_without = 0;
  std::uint64_t lower_structural = 0;  ///< traces whose lower bound came from each term
  std::uint64_t lower_proxy = 0;
  std::uint64_t lower_both = 0;

  double structural_pct() const;
  double proxy_pct() const;
  double both_pct() const;
};

struct StrategyCorrelation {
  proxy::Strategy strategy = proxy::Strategy::Random;
  std::size_t cells = 0;
  std::optional<double> pearson;  ///< nullopt when undefined (constant input)
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;  ///< grid order: strategy, size, repeat
  std::vector<StrategyCorrelation> correlations;
  std::chrono::microseconds exact_time{0};
  std::vector<std::size_t> exact_costs;  ///< per log variant
};

struct ExperimentOptions {
  std::size_t jobs = 1;
  bounds::Estimator estimator = bounds::Estimator::Midpoint;
};

/// Runs every grid cell against one (model, log) pair. Exact costs are
/// computed once and reused as the oracle for every cell.
ExperimentResult run_experiment(const ExperimentGrid& grid, const model::ProcessModel& model,
                                const EventLog& log, const ExperimentOptions& options = {});

ExperimentResult run_experiment(const ExperimentGrid& grid, const SyntheticSpec& spec,
                                const ExperimentOptions& options = {});

/// Pearson(epsilon_max, realized_error) across the rows of each strategy.
std::vector<StrategyCorrelation> correlate(std::span<const ExperimentRow> rows);

void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings = true);
/// Plot-ready long format: strategy,size_percent,repeat,metric,value.
void write_long_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings = true);
void write_correlations_csv(std::ostream& out, std::span<const StrategyCorrelation> correlations);

}  // namespace proxyalign::harness
