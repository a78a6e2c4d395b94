#include <algorithm>
#include <numeric>

#include "proxyalign/error.hpp"
#include "proxyalign/proxy.hpp"
#include "proxyalign/rng.hpp"

namespace proxyalign::proxy {
namespace {

void check_k(const EventLog& log, std::size_t k) {
  if (k < 1 || k > log.variant_count()) {
    throw InvalidArgument("proxy size k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(log.variant_count()) + "]");
  }
}

}  // namespace

ProxySet sample_random(const EventLog& log, std::size_t k, std::uint64_t seed) {
  check_k(log, k);
  std::vector<std::size_t> order(log.variant_count());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, order.size() - i);
    std::swap(order[i], order[j]);
  }
  std::vector<Trace> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back(log[order[i]].trace);
  return ProxySet(std::move(members), {"random", k, std::nullopt, seed});
}

ProxySet sample_frequency(const EventLog& log, std::size_t k) {
  check_k(log, k);
  std::vector<std::size_t> order(log.variant_count());
  std::iota(order.begin(), order.end(), 0);
  // Variants are already in canonical order, so a stable sort on multiplicity
  // breaks ties by (length, labels).
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return log[a].multiplicity > log[b].multiplicity;
  });
  std::vector<Trace> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back(log[order[i]].trace);
  return ProxySet(std::move(members), {"frequency", k, std::nullopt, 0});
}

}  // namespace proxyalign::proxy
