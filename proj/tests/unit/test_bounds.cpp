#include "doctest.h"

#include <random>
#include <sstream>

#include "proxyalign/aligner.hpp"
#include "proxyalign/bounds.hpp"
#include "proxyalign/error.hpp"
#include "proxyalign/report_io.hpp"
#include "support/oracles.hpp"

using namespace proxyalign;
using namespace proxyalign::bounds;

namespace {

const std::string kFixtures = PROXYALIGN_FIXTURES;

model::ProcessModel m1() { return model::load_model(kFixtures + "/m1.lang", std::nullopt); }

proxy::ProxySet with_costs(std::vector<Trace> members, const model::ProcessModel& m) {
  proxy::ProxySet s(std::move(members));
  compute_reference_costs(s, m, {}, 1);
  return s;
}

}  // namespace

TEST_CASE("worked example bounds") {
  const auto m = m1();
  const auto omega = with_costs({make_trace({"a", "c", "c", "b", "d", "e"})}, m);
  CHECK(*omega.ref_cost(0) == 2);
  const auto r = approximate_cost(make_trace({"a", "c", "b", "d", "e"}), omega, ModelMeta::from_model(m));
  CHECK(r.lower == 1);
  CHECK(r.upper == 3);
  CHECK(r.estimate == Rational(2));
  CHECK(r.proxy_distance == 1);
  CHECK(r.lower_source == LowerSource::Proxy);
}

TEST_CASE("structural lower bound") {
  const auto meta = ModelMeta::from_model(m1());
  CHECK(structural_lower_bound(Trace{}, meta) == 3);
  CHECK(structural_lower_bound(make_trace({"a", "x"}), meta) == 2);
  CHECK(structural_lower_bound(make_trace({"x", "y", "z", "w"}), meta) == 4);
  CHECK(structural_lower_bound(make_trace({"a", "b", "e"}), meta) == 0);
}

TEST_CASE("lower bound source") {
  const auto m = m1();
  const auto meta = ModelMeta::from_model(m);
  const auto omega = with_costs({make_trace({"a", "b", "e"})}, m);
  // both terms are zero
  CHECK(lower_bound(make_trace({"a", "b", "e"}), omega, meta).source == LowerSource::Both);
  const auto s = lower_bound(make_trace({"x"}), omega, meta);
  CHECK(s.source == LowerSource::Structural);
  CHECK(s.value == 3);
  CHECK(s.proxy == 0);
  for (auto src : {LowerSource::Structural, LowerSource::Proxy, LowerSource::Both}) {
    CHECK(parse_lower_source(lower_source_name(src)) == src);
  }
}

TEST_CASE("strict mode drops the alphabet term for unverified nets") {
  std::istringstream in(
      "<pnml><net id=\"n\"><place id=\"p\"><initialMarking><text>1</text></initialMarking></place>"
      "<place id=\"q\"/><place id=\"never\"/>"
      "<transition id=\"ta\"><name><text>a</text></name></transition>"
      "<transition id=\"tx\"><name><text>x</text></name></transition>"
      "<arc id=\"1\" source=\"p\" target=\"ta\"/><arc id=\"2\" source=\"ta\" target=\"q\"/>"
      "<arc id=\"3\" source=\"never\" target=\"tx\"/><arc id=\"4\" source=\"tx\" target=\"q\"/></net></pnml>");
  auto net = model::parse_pnml(in);
  net.final_marking = model::parse_marking_json("{\"q\": 1}", net);
  const auto m = model::ProcessModel::from_petri_net(net);
  const auto trace = make_trace({"a", "y", "y"});
  CHECK(structural_lower_bound(trace, ModelMeta::from_model(m)) == 2);
  CHECK(structural_lower_bound(trace, ModelMeta::from_model(m, true)) == 0);
  CHECK(structural_lower_bound(trace, ModelMeta::from_model(m1(), true)) == 2);
}

TEST_CASE("estimators") {
  const auto m = m1();
  const auto meta = ModelMeta::from_model(m);
  const auto costly = with_costs({make_trace({"a", "c", "c", "b", "d", "e"})}, m);
  const auto t = make_trace({"a", "c", "b", "d", "e"});
  CHECK(approximate_cost(t, costly, meta, Estimator::Midpoint, Rational(1)).estimate == Rational(3));
  CHECK(approximate_cost(t, costly, meta, Estimator::Midpoint, Rational(0)).estimate == Rational(1));
  CHECK(approximate_cost(t, costly, meta, Estimator::Midpoint, Rational(1, 4)).estimate == Rational(3, 2));
  CHECK_THROWS_AS(approximate_cost(t, costly, meta, Estimator::Midpoint, Rational(2)), InvalidArgument);
  CHECK_THROWS_AS(approximate_cost(t, costly, meta, Estimator::HalfDistanceZeroCost), InvalidArgument);

  const auto fitting = with_costs({make_trace({"a", "b", "e"})}, m);
  // delta = 3, half is 3/2, inside [lower, upper] = [0, 3]
  const auto r = approximate_cost(make_trace({"a", "b", "x", "y", "e"}), fitting, meta, Estimator::HalfDistanceZeroCost);
  CHECK(r.lower == 2);
  CHECK(r.upper == 2);
  CHECK(r.estimate == Rational(2));
  const auto r2 = approximate_cost(make_trace({"a", "b", "b", "e"}), fitting, meta, Estimator::HalfDistanceZeroCost);
  CHECK(r2.estimate == Rational(1, 2));
  CHECK(parse_estimator("half-distance") == Estimator::HalfDistanceZeroCost);
  CHECK(parse_estimator("midpoint") == Estimator::Midpoint);
  CHECK_THROWS_AS(parse_estimator("mean"), InvalidArgument);
}

TEST_CASE("missing reference costs are rejected") {
  const proxy::ProxySet omega({make_trace({"a"})});
  CHECK_THROWS_AS(upper_bound(make_trace({"a"}), omega), InvalidArgument);
}

TEST_CASE("bounds contain the true cost") {
  std::mt19937_64 rng(41);
  const auto sigma = oracle::letters(4);
  auto all = sigma;
  all.push_back(Activity::intern("X0"));
  for (int rep = 0; rep < 300; ++rep) {
    const auto m = model::ProcessModel::from_language(oracle::random_language(rng, sigma, 8, 7));
    std::vector<Trace> members(1 + rng() % 4);
    for (auto& t : members) t = oracle::random_trace(rng, all, 0, 8);
    const auto omega = with_costs(members, m);
    const auto t = oracle::random_trace(rng, all, 0, 8);
    const auto z = align::optimal_alignment(t, m).cost;
    const auto r = approximate_cost(t, omega, ModelMeta::from_model(m));
    CHECK(r.lower <= z);
    CHECK(z <= r.upper);
  }
}

TEST_CASE("approximate_log with the whole log as proxy-set is exact") {
  std::mt19937_64 rng(42);
  const auto sigma = oracle::letters(4);
  const auto m = model::ProcessModel::from_language(oracle::random_language(rng, sigma, 6, 6));
  const auto log = oracle::random_log(rng, sigma, 15, 7);
  ApproxOptions opts;
  opts.preset = proxy::ProxySet(log.variant_traces());
  const auto report = approximate_log(log, m, opts);
  CHECK(report.aligner_invocations == log.variant_count());
  CHECK(report.epsilon_max == 0);
  Rational total(0);
  for (std::size_t i = 0; i < log.variant_count(); ++i) {
    const auto z = align::optimal_alignment(log[i].trace, m).cost;
    CHECK(report.per_variant[i].bounds.lower == z);
    CHECK(report.per_variant[i].bounds.upper == z);
    total += Rational(static_cast<std::int64_t>(z * log[i].multiplicity));
  }
  CHECK(report.total_estimate == total);
}

TEST_CASE("approximate_log invokes the aligner once per proxy and ignores the job count") {
  std::mt19937_64 rng(43);
  const auto sigma = oracle::letters(5);
  const auto m = model::ProcessModel::from_language(oracle::random_language(rng, sigma, 10, 8));
  const auto log = oracle::random_log(rng, sigma, 60, 9);
  for (auto s : {proxy::Strategy::Random, proxy::Strategy::Frequency, proxy::Strategy::KMedoids, proxy::Strategy::KCenter}) {
    ApproxOptions opts;
    opts.params = {s, Rational(10), 3};
    std::optional<proxy::ProxySet> omega;
    const auto a = approximate_log(log, m, opts, omega);
    REQUIRE(omega);
    CHECK(omega->ref_costs_complete());
    CHECK(a.aligner_invocations == 6);
    CHECK(a.proxies.size() == 6);
    CHECK(a.total_traces == log.total_traces());
    CHECK(a.epsilon_max == proxy::epsilon_max_error(log, *omega).total);
    opts.jobs = 4;
    const auto b = approximate_log(log, m, opts);
    CHECK(a.proxies == b.proxies);
    CHECK(a.total_estimate == b.total_estimate);
    for (std::size_t i = 0; i < log.variant_count(); ++i) {
      CHECK(a.per_variant[i].bounds.estimate == b.per_variant[i].bounds.estimate);
    }
  }
}

TEST_CASE("report JSON round trip and number encoding") {
  const auto m = m1();
  const EventLog log({{make_trace({"a", "c", "b", "d", "e"}), 2}, {make_trace({"a", "x"}), 1}});
  ApproxOptions opts;
  opts.preset = proxy::ProxySet({make_trace({"a", "c", "c", "b", "d", "e"})});
  opts.upper_weight = Rational(1, 3);
  auto report = approximate_log(log, m, opts);
  report.timings.reset();
  std::ostringstream out;
  log_io::write_report(out, report, log_io::ReportFormat::Json);
  const auto text = out.str();
  CHECK(text.find("\"upper_weight\": \"1/3\"") != std::string::npos);
  std::istringstream in(text);
  const auto back = log_io::read_report_json(in);
  CHECK(back.total_estimate == report.total_estimate);
  CHECK(back.upper_weight == Rational(1, 3));
  CHECK(back.epsilon_max == report.epsilon_max);
  CHECK(back.proxies == report.proxies);
  CHECK(back.proxy_costs == report.proxy_costs);
  REQUIRE(back.per_variant.size() == report.per_variant.size());
  for (std::size_t i = 0; i < back.per_variant.size(); ++i) {
    CHECK(back.per_variant[i].bounds.trace == report.per_variant[i].bounds.trace);
    CHECK(back.per_variant[i].bounds.estimate == report.per_variant[i].bounds.estimate);
    CHECK(back.per_variant[i].bounds.lower_source == report.per_variant[i].bounds.lower_source);
    CHECK(back.per_variant[i].multiplicity == report.per_variant[i].multiplicity);
  }
  CHECK_FALSE(back.timings);
  std::ostringstream again;
  log_io::write_report(again, back, log_io::ReportFormat::Json);
  CHECK(again.str() == text);
}

TEST_CASE("report CSV layout") {
  const auto m = m1();
  const EventLog log({{make_trace({"a", "c", "b", "d", "e"}), 2}});
  ApproxOptions opts;
  opts.preset = proxy::ProxySet({make_trace({"a", "c", "c", "b", "d", "e"})});
  auto report = approximate_log(log, m, opts);
  report.timings.reset();
  std::ostringstream out;
  log_io::write_report(out, report, log_io::ReportFormat::Csv);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.rfind("trace,multiplicity,lower,upper,estimate", 0) == 0);
  CHECK(row.rfind("\"a,c,b,d,e\",2,1,3,2", 0) == 0);
  CHECK(out.str().find("epsilon_max,2") != std::string::npos);
  CHECK_THROWS_AS(log_io::parse_report_format("xml"), InvalidArgument);
}

TEST_CASE("zero-cost proxies halve the maximum error") {
  const auto m = model::ProcessModel::from_language({make_trace({"a", "b"})});
  const auto omega = with_costs({make_trace({"a", "b"})}, m);
  const auto t = make_trace({"a", "b", "a", "b", "a", "b"});
  const auto r = approximate_cost(t, omega, ModelMeta::from_model(m), Estimator::HalfDistanceZeroCost);
  CHECK(r.proxy_distance == 4);
  CHECK(r.estimate == Rational(2));
  const auto z = align::optimal_alignment(t, m).cost;
  const Rational err = Rational(static_cast<std::int64_t>(z)) - r.estimate;
  CHECK((err < 0 ? -err : err) <= Rational(2));
}
