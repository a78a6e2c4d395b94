#include <algorithm>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "proxyalign/aligner.hpp"
#include "proxyalign/error.hpp"
#include "proxyalign/harness.hpp"
#include "proxyalign/parallel.hpp"
#include "proxyalign/rng.hpp"

namespace proxyalign::harness {
namespace {

using std::chrono::microseconds;

microseconds at_least_one(microseconds d) { return std::max(d, microseconds{1}); }

double pct(std::uint64_t part, std::uint64_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

// Fixed six decimals so the three percentages of a row sum to 100 within
// rounding.
std::string pct_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double ExperimentRow::structural_pct() const {
  return pct(lower_structural, lower_structural + lower_proxy + lower_both);
}
double ExperimentRow::proxy_pct() const {
  return pct(lower_proxy, lower_structural + lower_proxy + lower_both);
}
double ExperimentRow::both_pct() const {
  return pct(lower_both, lower_structural + lower_proxy + lower_both);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t repeat) {
  return splitmix64(master_seed * 1'000'003ull + repeat);
}

ExperimentGrid ExperimentGrid::from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("grid: ") + e.what());
  }
  ExperimentGrid g;
  try {
    if (doc.contains("strategies")) {
      g.strategies.clear();
      for (const auto& s : doc["strategies"]) g.strategies.push_back(proxy::parse_strategy(s.get<std::string>()));
    }
    if (doc.contains("sizes")) {
      g.size_percents.clear();
      for (const auto& s : doc["sizes"]) {
        g.size_percents.push_back(s.is_string() ? parse_rational(s.get<std::string>()) : parse_rational(s.dump()));
      }
    }
    g.repeats = doc.value("repeats", g.repeats);
    g.master_seed = doc.value("master_seed", g.master_seed);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("grid: ") + e.what());
  }
  if (g.strategies.empty() || g.size_percents.empty() || g.repeats == 0) {
    throw InvalidArgument("grid needs at least one strategy, size and repeat");
  }
  return g;
}

std::vector<StrategyCorrelation> correlate(std::span<const ExperimentRow> rows) {
  std::vector<StrategyCorrelation> out;
  for (const auto& row : rows) {
    if (std::none_of(out.begin(), out.end(), [&](const auto& c) { return c.strategy == row.strategy; })) {
      out.push_back({row.strategy, 0, std::nullopt});
    }
  }
  for (auto& c : out) {
    std::vector<double> eps, realized;
    for (const auto& row : rows) {
      if (row.strategy != c.strategy) continue;
      eps.push_back(static_cast<double>(row.epsilon_max));
      realized.push_back(to_double(row.realized_error));
    }
    c.cells = eps.size();
    try {
      c.pearson = pearson(eps, realized);
    } catch (const InvalidArgument&) {
      c.pearson = std::nullopt;
    }
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentGrid& grid, const model::ProcessModel& model,
                                const EventLog& log, const ExperimentOptions& options) {
  ExperimentResult result;
  const auto start = std::chrono::steady_clock::now();
  result.exact_costs.resize(log.variant_count());
  parallel_for(log.variant_count(), options.jobs, [&](std::size_t i) {
    result.exact_costs[i] = align::optimal_alignment(log[i].trace, model).cost;
  });
  result.exact_time = at_least_one(std::chrono::duration_cast<microseconds>(
      std::chrono::steady_clock::now() - start));

  for (auto strategy : grid.strategies) {
    for (const auto& size : grid.size_percents) {
      for (std::size_t repeat = 0; repeat < grid.repeats; ++repeat) {
        bounds::ApproxOptions approx;
        approx.params = {strategy, size, derive_seed(grid.master_seed, repeat)};
        approx.estimator = options.estimator;
        approx.jobs = options.jobs;
        const auto report = bounds::approximate_log(log, model, approx);

        ExperimentRow row;
        row.strategy = strategy;
        row.size_percent = size;
        row.repeat = repeat;
        row.seed = approx.params.seed;
        row.proxy_size = report.proxies.size();
        row.epsilon_max = report.epsilon_max;
        for (std::size_t i = 0; i < report.per_variant.size(); ++i) {
          const auto& v = report.per_variant[i];
          const Rational diff = v.bounds.estimate - static_cast<std::int64_t>(result.exact_costs[i]);
          row.realized_error += (diff < 0 ? -diff : diff) * static_cast<std::int64_t>(v.multiplicity);
          switch (v.bounds.lower_source) {
            case bounds::LowerSource::Structural: row.lower_structural += v.multiplicity; break;
            case bounds::LowerSource::Proxy: row.lower_proxy += v.multiplicity; break;
            case bounds::LowerSource::Both: row.lower_both += v.multiplicity; break;
          }
        }
        row.exact_time = result.exact_time;
        row.timings = *report.timings;
        const auto without = at_least_one(row.timings.reference_alignment + row.timings.bound_computation);
        const auto with = at_least_one(without + row.timings.proxy_generation);
        const auto pi = performance_improvement(result.exact_time, with, without);
        row.pi_with = pi.with_generation;
        row.pi_without = pi.without_generation;
        result.rows.push_back(row);
      }
    }
  }
  result.correlations = correlate(result.rows);
  return result;
}

ExperimentResult run_experiment(const ExperimentGrid& grid, const SyntheticSpec& spec,
                                const ExperimentOptions& options) {
  const auto instance = generate_synthetic(spec);
  return run_experiment(grid, instance.model, instance.log, options);
}

void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings) {
  out << "strategy,size_percent,repeat,seed,proxy_size,epsilon_max,realized_error";
  if (timings) {
    out << ",exact_us,proxy_generation_us,reference_alignment_us,bound_computation_us,pi_with,pi_without";
  }
  out << ",lb_structural_pct,lb_proxy_pct,lb_both_pct\n";
  for (const auto& r : rows) {
    out << proxy::strategy_name(r.strategy) << ',' << to_decimal_string(r.size_percent) << ','
        << r.repeat << ',' << r.seed << ',' << r.proxy_size << ',' << r.epsilon_max << ','
        << to_decimal_string(r.realized_error);
    if (timings) {
      out << ',' << r.exact_time.count() << ',' << r.timings.proxy_generation.count() << ','
          << r.timings.reference_alignment.count() << ',' << r.timings.bound_computation.count()
          << ',' << r.pi_with << ',' << r.pi_without;
    }
    out << ',' << pct_text(r.structural_pct()) << ',' << pct_text(r.proxy_pct()) << ',' << pct_text(r.both_pct())
        << '\n';
  }
}

void write_long_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings) {
  out << "strategy,size_percent,repeat,metric,value\n";
  for (const auto& r : rows) {
    auto emit = [&](std::string_view metric, const auto& value) {
      out << proxy::strategy_name(r.strategy) << ',' << to_decimal_string(r.size_percent) << ','
          << r.repeat << ',' << metric << ',' << value << '\n';
    };
    emit("epsilon_max", r.epsilon_max);
    emit("realized_error", to_decimal_string(r.realized_error));
    if (timings) {
      emit("pi_with", r.pi_with);
      emit("pi_without", r.pi_without);
    }
    emit("lb_structural_pct", pct_text(r.structural_pct()));
    emit("lb_proxy_pct", pct_text(r.proxy_pct()));
    emit("lb_both_pct", pct_text(r.both_pct()));
  }
}

void write_correlations_csv(std::ostream& out, std::span<const StrategyCorrelation> correlations) {
  out << "strategy,cells,pearson_epsilon_realized\n";
  for (const auto& c : correlations) {
    out << proxy::strategy_name(c.strategy) << ',' << c.cells << ',';
    if (c.pearson) {
      out << *c.pearson;
    } else {
      out << "undefined";
    }
    out << '\n';
  }
}

}  // namespace proxyalign::harness
