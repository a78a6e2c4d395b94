#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "proxyalign/aligner.hpp"
#include "proxyalign/bounds.hpp"
#include "proxyalign/distance.hpp"
#include "proxyalign/error.hpp"
#include "proxyalign/harness.hpp"
#include "proxyalign/log_io.hpp"
#include "proxyalign/model.hpp"
#include "proxyalign/parallel.hpp"
#include "proxyalign/proxy.hpp"
#include "proxyalign/report_io.hpp"
#include "proxyalign/simd/lcs_kernels.hpp"

namespace pa = proxyalign;
namespace fs = std::filesystem;

namespace {

struct InputFlags {
  std::string log;
  std::string model;
  std::string final_marking;
  std::string silent_label = "tau";
  std::size_t state_bound = pa::model::kDefaultStateBound;
  std::string case_column = "case";
  std::string activity_column = "activity";
  std::string order_column = "timestamp";
  char delimiter = ',';
};

struct ProxyFlags {
  std::string strategy = "frequency";
  std::string size_percent = "10";
  std::uint64_t seed = 0;
  std::string proxy_in;
  std::string proxy_out;
  std::string dump_matrix;
};

struct Flags {
  InputFlags input;
  ProxyFlags proxy;
  std::size_t jobs = 0;
  bool heuristic = false;
  bool strict = false;
  bool no_timings = false;
  bool dump_moves = false;
  std::string estimator = "midpoint";
  std::string upper_weight = "1/2";
  std::string report = "json";
  std::string out;
  std::string spec;
  std::string grid;
  std::string long_out;
  std::string correlations_out;
  std::string log_out;
  std::string model_out;
};

std::string read_file(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pa::Error(pa::ErrorCode::Io, "cannot open " + std::string(what) + " '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_out(const std::string& path, std::string_view what) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pa::Error(pa::ErrorCode::Io, "cannot write " + std::string(what) + " '" + path + "'");
  return out;
}

/// Runs `body` against the named file, or standard output when the path is empty.
template <class F>
void with_output(const std::string& path, std::string_view what, F&& body) {
  if (path.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  auto out = open_out(path, what);
  body(out);
}

void add_log_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--log", f.log, "Event log (.xes, .csv, or variant text)")->required();
  cmd->add_option("--case-column", f.case_column, "CSV case id column")->capture_default_str();
  cmd->add_option("--activity-column", f.activity_column, "CSV activity column")->capture_default_str();
  cmd->add_option("--order-column", f.order_column, "CSV ordering column")->capture_default_str();
  cmd->add_option("--delimiter", f.delimiter, "CSV delimiter")->capture_default_str();
}

void add_model_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--model", f.model, "Process model (.pnml or explicit language text)")->required();
  cmd->add_option("--final-marking", f.final_marking,
                  "Final marking for PNML models: JSON file or inline {\"place\": tokens}");
  cmd->add_option("--silent-label", f.silent_label, "Transition name treated as silent")
      ->capture_default_str();
  cmd->add_option("--state-bound", f.state_bound, "Maximum distinct states per search")
      ->envname("PROXYALIGN_STATE_BOUND")
      ->capture_default_str();
}

void add_proxy_flags(CLI::App* cmd, ProxyFlags& f) {
  cmd->add_option("--strategy", f.strategy, "random|frequency|kmedoids|kcenter")
      ->check(CLI::IsMember({"random", "frequency", "kmedoids", "kcenter"}))
      ->capture_default_str();
  cmd->add_option("--size-percent", f.size_percent, "Proxy-set size as a percentage of variants")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for randomized strategies")
      ->envname("PROXYALIGN_SEED")
      ->capture_default_str();
  cmd->add_option("--proxy-in", f.proxy_in, "Load the proxy-set from a trace-per-line file");
  cmd->add_option("--proxy-out", f.proxy_out, "Write the proxy-set to a trace-per-line file");
  cmd->add_option("--dump-matrix", f.dump_matrix, "Write the variant distance matrix as CSV");
}

pa::EventLog load_log(const InputFlags& f) {
  pa::log_io::CsvColumns cols{f.case_column, f.activity_column, f.order_column, f.delimiter};
  return pa::log_io::load_event_log(f.log, cols);
}

pa::model::ProcessModel load_model(const InputFlags& f) {
  std::optional<std::string> marking;
  if (!f.final_marking.empty()) {
    marking = f.final_marking.front() == '{' ? f.final_marking : read_file(f.final_marking, "final marking");
  }
  auto model = pa::model::load_model(f.model, marking, {f.silent_label}, {f.state_bound});
  if (const auto& probe = model.liveness()) {
    if (!probe->complete) {
      std::cerr << "warning: liveness probe stopped at " << probe->states
                << " states; model alphabet is unverified\n";
    }
    for (auto t : probe->dead_transitions) {
      std::cerr << "warning: transition '" << model.net().transitions[t].id
                << "' never fires on a run reaching the final marking\n";
    }
  }
  return model;
}

void print_config(const Flags& f, std::string_view command) {
  std::cerr << "# command=" << command;
  if (!f.input.log.empty()) std::cerr << " log=" << f.input.log;
  if (!f.input.model.empty()) std::cerr << " model=" << f.input.model << " state_bound=" << f.input.state_bound;
  if (command == "approximate" || command == "proxy-gen") {
    if (f.proxy.proxy_in.empty()) {
      std::cerr << " strategy=" << f.proxy.strategy << " size_percent=" << f.proxy.size_percent
                << " seed=" << f.proxy.seed;
    } else {
      std::cerr << " proxy_in=" << f.proxy.proxy_in;
    }
  }
  if (command == "approximate") {
    std::cerr << " estimator=" << f.estimator << " upper_weight=" << f.upper_weight
              << " strict=" << (f.strict ? "true" : "false");
  }
  std::cerr << " jobs=" << pa::resolve_jobs(f.jobs)
            << " simd=" << pa::simd::level_name(pa::simd::active_level()) << '\n';
}

pa::proxy::StrategyParams strategy_params(const ProxyFlags& f) {
  return {pa::proxy::parse_strategy(f.strategy), pa::parse_rational(f.size_percent), f.seed};
}

std::optional<pa::proxy::ProxySet> load_proxy(const ProxyFlags& f) {
  if (f.proxy_in.empty()) return std::nullopt;
  std::istringstream in(read_file(f.proxy_in, "proxy-set"));
  auto traces = pa::model::parse_trace_lines(in);
  pa::proxy::Provenance prov{"external", 0, std::nullopt, 0};
  pa::proxy::ProxySet set(std::move(traces), prov);
  return set;
}

void save_proxy(const ProxyFlags& f, const pa::proxy::ProxySet& omega) {
  if (f.proxy_out.empty()) return;
  auto out = open_out(f.proxy_out, "proxy-set");
  pa::model::write_trace_lines(out, omega.members());
}

std::unique_ptr<pa::distance::DistanceMatrix> maybe_matrix(const ProxyFlags& f, const pa::EventLog& log,
                                                           std::size_t jobs) {
  if (f.dump_matrix.empty()) return nullptr;
  auto matrix = std::make_unique<pa::distance::DistanceMatrix>(
      pa::distance::distance_matrix(log.variant_traces(), jobs));
  auto out = open_out(f.dump_matrix, "distance matrix");
  matrix->write_csv(out);
  return matrix;
}

int run_exact(const Flags& f) {
  const auto log = load_log(f.input);
  const auto model = load_model(f.input);
  pa::align::AlignerOptions opts{f.input.state_bound, f.heuristic};
  std::vector<pa::align::AlignmentResult> results(log.variant_count());
  pa::parallel_for(log.variant_count(), f.jobs, [&](std::size_t i) {
    results[i] = pa::align::optimal_alignment(log[i].trace, model, opts);
  });
  with_output(f.out, "costs", [&](std::ostream& out) {
    out << "trace,multiplicity,cost";
    if (f.dump_moves) out << ",moves";
    out << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << '"' << pa::to_label_list(log[i].trace) << "\"," << log[i].multiplicity << ','
          << results[i].cost;
      if (f.dump_moves) out << ",\"" << pa::align::format_moves(results[i].alignment) << '"';
      out << '\n';
    }
  });
  return 0;
}

int run_approximate(const Flags& f) {
  const auto log = load_log(f.input);
  const auto model = load_model(f.input);
  pa::bounds::ApproxOptions opts;
  opts.params = strategy_params(f.proxy);
  opts.preset = load_proxy(f.proxy);
  opts.estimator = pa::bounds::parse_estimator(f.estimator);
  opts.upper_weight = pa::parse_rational(f.upper_weight);
  opts.strict = f.strict;
  opts.jobs = f.jobs;
  opts.aligner = {f.input.state_bound, f.heuristic};
  const auto format = pa::log_io::parse_report_format(f.report);
  maybe_matrix(f.proxy, log, f.jobs);

  std::optional<pa::proxy::ProxySet> omega;
  auto report = pa::bounds::approximate_log(log, model, opts, omega);
  if (f.no_timings) report.timings.reset();
  save_proxy(f.proxy, *omega);
  with_output(f.out, "report", [&](std::ostream& out) { pa::log_io::write_report(out, report, format); });
  return 0;
}

int run_proxy_gen(const Flags& f) {
  const auto log = load_log(f.input);
  const auto matrix = maybe_matrix(f.proxy, log, f.jobs);
  const auto omega = pa::proxy::generate(log, strategy_params(f.proxy), matrix.get(), f.jobs);
  const auto eps = pa::proxy::epsilon_max_error(log, omega);
  std::cerr << "# k=" << omega.size() << " epsilon_max=" << eps.total << '\n';
  if (f.proxy.proxy_out.empty()) {
    pa::model::write_trace_lines(std::cout, omega.members());
  } else {
    save_proxy(f.proxy, omega);
  }
  return 0;
}

pa::harness::SyntheticSpec load_spec(const std::string& path) {
  if (path.empty()) return {};
  return pa::harness::SyntheticSpec::from_json(read_file(path, "synthetic spec"));
}

int run_generate(const Flags& f) {
  const auto spec = load_spec(f.spec);
  std::cerr << "# spec=" << spec.to_json() << '\n';
  const auto inst = pa::harness::generate_synthetic(spec);
  {
    auto out = open_out(f.model_out, "model");
    pa::model::write_trace_lines(out, inst.model.language());
  }
  auto out = open_out(f.log_out, "log");
  pa::log_io::write_variants(out, inst.log);
  std::cerr << "# model_traces=" << inst.model.language().size()
            << " variants=" << inst.log.variant_count() << " traces=" << inst.log.total_traces() << '\n';
  return 0;
}

int run_evaluate(const Flags& f) {
  const auto spec = load_spec(f.spec);
  pa::harness::ExperimentGrid grid;
  if (!f.grid.empty()) grid = pa::harness::ExperimentGrid::from_json(read_file(f.grid, "grid"));
  std::cerr << "# spec=" << spec.to_json() << " repeats=" << grid.repeats
            << " master_seed=" << grid.master_seed << '\n';
  pa::harness::ExperimentOptions opts;
  opts.jobs = f.jobs;
  opts.estimator = pa::bounds::parse_estimator(f.estimator);
  const auto result = pa::harness::run_experiment(grid, spec, opts);
  const bool timings = !f.no_timings;
  with_output(f.out, "results", [&](std::ostream& out) {
    pa::harness::write_rows_csv(out, result.rows, timings);
  });
  if (!f.long_out.empty()) {
    auto out = open_out(f.long_out, "long-format results");
    pa::harness::write_long_csv(out, result.rows, timings);
  }
  if (!f.correlations_out.empty()) {
    auto out = open_out(f.correlations_out, "correlations");
    pa::harness::write_correlations_csv(out, result.correlations);
  } else {
    pa::harness::write_correlations_csv(std::cerr, result.correlations);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate alignment costs of event logs against process models"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Flags f;
  app.add_option("--jobs", f.jobs, "Worker threads (0 = available parallelism)")->capture_default_str();

  auto* exact = app.add_subcommand("exact", "Exact alignment cost of every log variant");
  add_log_flags(exact, f.input);
  add_model_flags(exact, f.input);
  exact->add_flag("--dump-moves", f.dump_moves, "Add the move sequence of each alignment");
  exact->add_flag("--heuristic", f.heuristic, "Use the foreign-activity heuristic in net search");
  exact->add_option("--out", f.out, "Output file (default: standard output)");

  auto* approx = app.add_subcommand("approximate", "Bounded cost estimates from a proxy-set");
  add_log_flags(approx, f.input);
  add_model_flags(approx, f.input);
  add_proxy_flags(approx, f.proxy);
  approx->add_option("--estimator", f.estimator, "midpoint|half-distance")->capture_default_str();
  approx->add_option("--upper-weight", f.upper_weight, "Weight of the upper bound in the midpoint")
      ->capture_default_str();
  approx->add_option("--report", f.report, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  approx->add_flag("--strict", f.strict, "Drop the alphabet term for nets with unverified liveness");
  approx->add_flag("--heuristic", f.heuristic, "Use the foreign-activity heuristic in net search");
  approx->add_flag("--no-timings", f.no_timings, "Omit timing fields from the report");
  approx->add_option("--out", f.out, "Output file (default: standard output)");

  auto* pgen = app.add_subcommand("proxy-gen", "Select a proxy-set from a log");
  add_log_flags(pgen, f.input);
  add_proxy_flags(pgen, f.proxy);
  pgen->get_option("--proxy-in")->description("Ignored by proxy-gen");

  auto* gen = app.add_subcommand("generate", "Write a synthetic model and log");
  gen->add_option("--spec", f.spec, "Synthetic spec JSON (default spec when omitted)");
  gen->add_option("--model-out", f.model_out, "Model language output")->required();
  gen->add_option("--log-out", f.log_out, "Variant log output")->required();

  auto* eval = app.add_subcommand("evaluate", "Run a strategy/size/seed grid on a synthetic instance");
  eval->add_option("--spec", f.spec, "Synthetic spec JSON (default spec when omitted)");
  eval->add_option("--grid", f.grid, "Grid JSON (default grid when omitted)");
  eval->add_option("--out", f.out, "Per-cell CSV (default: standard output)");
  eval->add_option("--long-out", f.long_out, "Long-format CSV: strategy,size_percent,repeat,metric,value");
  eval->add_option("--correlations-out", f.correlations_out, "Per-strategy correlation CSV");
  eval->add_option("--estimator", f.estimator, "midpoint|half-distance")->capture_default_str();
  eval->add_flag("--no-timings", f.no_timings, "Omit timing columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[" << pa::error_tag(pa::ErrorCode::Usage) << "] " << e.what() << "\n\n";
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << sub->help();
    return 2;
  }

  auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    print_config(f, name);
    if (name == "exact") return run_exact(f);
    if (name == "approximate") return run_approximate(f);
    if (name == "proxy-gen") return run_proxy_gen(f);
    if (name == "generate") return run_generate(f);
    return run_evaluate(f);
  } catch (const pa::Error& e) {
    std::cerr << "error[" << pa::error_tag(e.code()) << "] " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[E-INTERNAL] " << e.what() << '\n';
    return 1;
  }
}
