#include "doctest.h"

#include <array>
#include <cmath>
#include <random>

#include "proxyalign/error.hpp"
#include "proxyalign/proxy.hpp"
#include "support/oracles.hpp"

using namespace proxyalign;
using namespace proxyalign::proxy;

namespace {

std::vector<Trace> members(const ProxySet& s) { return {s.members().begin(), s.members().end()}; }

std::vector<std::size_t> indices_in(const EventLog& log, const ProxySet& s) {
  std::vector<std::size_t> out;
  for (const auto& t : s.members()) out.push_back(*log.find(t));
  return out;
}

std::vector<std::uint64_t> weights(const EventLog& log) {
  std::vector<std::uint64_t> w;
  for (const auto& v : log.variants()) w.push_back(v.multiplicity);
  return w;
}

}  // namespace

TEST_CASE("proxy size rounds half up and clamps") {
  CHECK(proxy_size(Rational(10), 20) == 2);
  CHECK(proxy_size(Rational(5), 10) == 1);   // 0.5 rounds up
  CHECK(proxy_size(Rational(15), 10) == 2);  // 1.5 rounds up
  CHECK(proxy_size(Rational(14), 10) == 1);
  CHECK(proxy_size(Rational(10), 3) == 1);   // 0.3 is clamped to one
  CHECK(proxy_size(Rational(100), 7) == 7);
  CHECK(proxy_size(Rational(1, 4), 1000) == 3);
  CHECK_THROWS_AS(proxy_size(Rational(0), 10), InvalidArgument);
  CHECK_THROWS_AS(proxy_size(Rational(101), 10), InvalidArgument);
  CHECK_THROWS_AS(proxy_size(Rational(10), 0), InvalidArgument);
}

TEST_CASE("strategy names") {
  for (auto s : {Strategy::Random, Strategy::Frequency, Strategy::KMedoids, Strategy::KCenter}) {
    CHECK(parse_strategy(strategy_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_strategy("medoids"), InvalidArgument);
}

TEST_CASE("proxy set invariants") {
  CHECK_THROWS_AS(ProxySet({}), InvalidArgument);
  ProxySet s({make_trace({"b"}), make_trace({"a", "b"}), make_trace({"b"})});
  REQUIRE(s.size() == 2);
  CHECK(s.members()[0] == make_trace({"b"}));
  CHECK(s.index_of(make_trace({"a", "b"})) == 1);
  CHECK_FALSE(s.contains(make_trace({"a"})));
  CHECK_FALSE(s.ref_costs_complete());
  CHECK_THROWS_AS(s.require_ref_costs(), InvalidArgument);
  s.set_ref_cost(0, 1);
  s.set_ref_cost(1, 0);
  CHECK(s.ref_costs_complete());
  CHECK(s.ref_cost(0) == 1u);
}

TEST_CASE("random sampling is seeded and without replacement") {
  std::mt19937_64 rng(31);
  const auto log = oracle::random_log(rng, oracle::letters(4), 30, 6);
  const auto a = sample_random(log, 7, 99);
  const auto b = sample_random(log, 7, 99);
  CHECK(members(a) == members(b));
  CHECK(a.size() == 7);
  for (const auto& t : a.members()) CHECK(log.find(t).has_value());
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 10 && !differs; ++seed) differs = members(sample_random(log, 7, seed)) != members(a);
  CHECK(differs);
  CHECK(sample_random(log, 30, 5).size() == 30);
}

TEST_CASE("frequency sampling takes the most frequent variants, canonical on ties") {
  const EventLog log({{make_trace({"c"}), 5}, {make_trace({"a", "b"}), 9}, {make_trace({"b"}), 5}, {make_trace({"a"}), 1}});
  CHECK(members(sample_frequency(log, 1)) == std::vector<Trace>{make_trace({"a", "b"})});
  const auto two = members(sample_frequency(log, 2));
  CHECK(std::find(two.begin(), two.end(), make_trace({"b"})) != two.end());
  CHECK(std::find(two.begin(), two.end(), make_trace({"c"})) == two.end());
}

TEST_CASE("epsilon matches the oracle and shrinks as members are added") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 50; ++rep) {
    const auto log = oracle::random_log(rng, oracle::letters(4), 12, 7);
    const auto traces = log.variant_traces();
    std::vector<Trace> omega{traces[rng() % traces.size()]};
    auto prev = epsilon_max_error(log, omega).total;
    CHECK(prev == oracle::epsilon(log, omega));
    for (int i = 0; i < 3; ++i) {
      omega.push_back(traces[rng() % traces.size()]);
      const auto e = epsilon_max_error(log, omega);
      CHECK(e.total == oracle::epsilon(log, omega));
      CHECK(e.total <= prev);
      prev = e.total;
    }
  }
  const EventLog log({{make_trace({"a"}), 3}});
  CHECK(epsilon_max_error(log, std::vector<Trace>{make_trace({"a"})}).total == 0);
}

TEST_CASE("dominance") {
  const EventLog log({{make_trace({"a"}), 3}, {make_trace({"a", "b"}), 1}});
  const std::vector<Trace> one{make_trace({"a"})};
  const std::vector<Trace> two{make_trace({"a"}), make_trace({"b"})};
  const std::vector<Trace> full{make_trace({"a"}), make_trace({"a", "b"})};
  CHECK(dominates(one, two, log));  // same epsilon, fewer members
  CHECK_FALSE(dominates(two, one, log));
  CHECK_FALSE(dominates(one, full, log));  // smaller but worse
  CHECK_FALSE(dominates(one, one, log));
}

TEST_CASE("k-primal brute force finds the exhaustive optimum") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 20; ++rep) {
    const auto log = oracle::random_log(rng, oracle::letters(3), 9, 5);
    const auto universe = log.variant_traces();
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto best = brute_force_k_primal(log, k, universe);
      CHECK(best.size() == k);
      CHECK(oracle::epsilon(log, members(best)) == oracle::optimal_kmedoids(log, k));
    }
  }
  std::vector<Trace> big(kMaxPrimalUniverse + 1);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = Trace(i + 1, Activity::intern("a"));
  CHECK_THROWS_AS(brute_force_k_primal(EventLog::from_traces(big), 2, big), InvalidArgument);
}

TEST_CASE("k-center is a 2-approximation") {
  std::mt19937_64 rng(34);
  for (int rep = 0; rep < 60; ++rep) {
    const auto log = oracle::random_log(rng, oracle::letters(4), 10, 6);
    const auto points = log.variant_traces();
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto centers = cluster_kcenter(log, k, 0);
      CHECK(centers.size() == k);
      const auto r = oracle::radius(points, members(centers));
      CHECK(r <= 2 * oracle::optimal_kcenter_radius(points, k));
      const auto matrix = distance::distance_matrix(points);
      CHECK(kcenter_radius(matrix, indices_in(log, centers)) == r);
    }
  }
}

TEST_CASE("k-center starts from the most frequent variant") {
  const EventLog log({{make_trace({"a"}), 1}, {make_trace({"b", "b"}), 7}, {make_trace({"c", "c", "c"}), 2}});
  CHECK(members(cluster_kcenter(log, 1, 0)) == std::vector<Trace>{make_trace({"b", "b"})});
}

TEST_CASE("k-medoids reaches a swap-stable objective no better than the optimum") {
  std::mt19937_64 rng(35);
  for (int rep = 0; rep < 40; ++rep) {
    const auto log = oracle::random_log(rng, oracle::letters(3), 8, 5);
    const auto matrix = distance::distance_matrix(log.variant_traces());
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto medoids = cluster_kmedoids(log, k, rep, &matrix);
      const auto idx = indices_in(log, medoids);
      const auto obj = kmedoids_objective(matrix, weights(log), idx);
      CHECK(obj == oracle::epsilon(log, members(medoids)));
      CHECK(obj >= oracle::optimal_kmedoids(log, k));
      // no single swap improves the result
      for (std::size_t out = 0; out < idx.size(); ++out) {
        for (std::size_t in = 0; in < log.variant_count(); ++in) {
          if (std::find(idx.begin(), idx.end(), in) != idx.end()) continue;
          auto swapped = idx;
          swapped[out] = in;
          CHECK(kmedoids_objective(matrix, weights(log), swapped) >= obj);
        }
      }
    }
  }
}

TEST_CASE("clustering is independent of the job count and of a precomputed matrix") {
  std::mt19937_64 rng(36);
  const auto log = oracle::random_log(rng, oracle::letters(5), 40, 8);
  const auto matrix = distance::distance_matrix(log.variant_traces(), 3);
  CHECK(members(cluster_kmedoids(log, 4, 1)) == members(cluster_kmedoids(log, 4, 1, &matrix, 3)));
  CHECK(members(cluster_kcenter(log, 4, 1)) == members(cluster_kcenter(log, 4, 1, &matrix, 3)));
}

TEST_CASE("generate records provenance") {
  std::mt19937_64 rng(37);
  const auto log = oracle::random_log(rng, oracle::letters(4), 20, 6);
  const auto s = generate(log, {Strategy::KCenter, Rational(25), 7});
  CHECK(s.size() == 5);
  CHECK(s.provenance().strategy == "kcenter");
  CHECK(s.provenance().k == 5);
  CHECK(s.provenance().size_percent == Rational(25));
  CHECK(s.provenance().seed == 7);
}

TEST_CASE("random sampling with k = 1 is uniform over variants") {
  const EventLog log({{make_trace({"a"}), 1}, {make_trace({"b"}), 10}, {make_trace({"c"}), 100}});
  std::array<std::size_t, 3> hits{};
  const std::size_t n = 10000;
  for (std::uint64_t seed = 0; seed < n; ++seed) ++hits[*log.find(sample_random(log, 1, seed).members()[0])];
  for (auto h : hits) CHECK(std::abs(static_cast<double>(h) / n - 1.0 / 3.0) <= 0.02);
}

TEST_CASE("k-medoids on six variants with k = 2 is optimal") {
  const EventLog log({{make_trace({"a", "b"}), 3}, {make_trace({"a", "b", "c"}), 1}, {make_trace({"a", "c"}), 2},
                      {make_trace({"x", "y"}), 4}, {make_trace({"x", "y", "z"}), 1}, {make_trace({"y"}), 2}});
  const auto medoids = cluster_kmedoids(log, 2, 0);
  CHECK(oracle::epsilon(log, members(medoids)) == oracle::optimal_kmedoids(log, 2));
}

TEST_CASE("k-center reaches for the outlier") {
  const EventLog log({{make_trace({"a"}), 1}, {make_trace({"a", "b"}), 1}, {make_trace({"x", "y", "z", "w"}), 1}});
  CHECK(cluster_kcenter(log, 2, 0).contains(make_trace({"x", "y", "z", "w"})));
}

TEST_CASE("epsilon example") {
  const EventLog log({{make_trace({"a", "b"}), 2}, {make_trace({"a", "b", "c"}), 3}});
  CHECK(epsilon_max_error(log, std::vector<Trace>{make_trace({"a", "b"})}).total == 3);
}

TEST_CASE("k-primal with k = 1 is the weighted 1-medoid") {
  const EventLog log({{make_trace({"a"}), 1}, {make_trace({"a", "b"}), 5}, {make_trace({"a", "b", "c", "d"}), 2}});
  const auto universe = log.variant_traces();
  CHECK(members(brute_force_k_primal(log, 1, universe)) == std::vector<Trace>{make_trace({"a", "b"})});
}
