#include <algorithm>

#include "proxyalign/error.hpp"
#include "proxyalign/proxy.hpp"

namespace proxyalign::proxy {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::Frequency: return "frequency";
    case Strategy::KMedoids: return "kmedoids";
    case Strategy::KCenter: return "kcenter";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::Random, Strategy::Frequency, Strategy::KMedoids, Strategy::KCenter}) {
    if (strategy_name(s) == name) return s;
  }
  throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

std::size_t proxy_size(const Rational& size_percent, std::size_t variants) {
  if (size_percent <= 0 || size_percent > 100) {
    throw InvalidArgument("size percent must lie in (0, 100], got " + to_string(size_percent));
  }
  if (variants == 0) throw InvalidArgument("cannot size a proxy-set for a log without variants");
  const Rational scaled = size_percent * static_cast<std::int64_t>(variants) / 100 + Rational(1, 2);
  const auto rounded = static_cast<std::size_t>(scaled.numerator() / scaled.denominator());
  return std::clamp<std::size_t>(rounded, 1, variants);
}

ProxySet::ProxySet(std::vector<Trace> members, Provenance provenance)
    : members_(std::move(members)), provenance_(std::move(provenance)) {
  if (members_.empty()) throw InvalidArgument("a proxy-set must have at least one member");
  std::sort(members_.begin(), members_.end(), CanonicalLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  ref_costs_.assign(members_.size(), std::nullopt);
  if (provenance_.k == 0) provenance_.k = members_.size();
}

std::optional<std::size_t> ProxySet::index_of(const Trace& t) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), t, CanonicalLess{});
  if (it == members_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool ProxySet::contains(const Trace& t) const { return index_of(t).has_value(); }

void ProxySet::set_ref_cost(std::size_t member, std::size_t cost) { ref_costs_.at(member) = cost; }

bool ProxySet::ref_costs_complete() const {
  return std::all_of(ref_costs_.begin(), ref_costs_.end(), [](const auto& c) { return c.has_value(); });
}

void ProxySet::require_ref_costs() const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!ref_costs_[i]) {
      throw InvalidArgument("proxy " + to_string(members_[i]) + " has no reference alignment cost");
    }
  }
}

ProxySet generate(const EventLog& log, const StrategyParams& params,
                  const distance::DistanceMatrix* matrix, std::size_t jobs) {
  const std::size_t k = proxy_size(params.size_percent, log.variant_count());
  ProxySet omega = [&] {
    switch (params.strategy) {
      case Strategy::Random: return sample_random(log, k, params.seed);
      case Strategy::Frequency: return sample_frequency(log, k);
      case Strategy::KMedoids: return cluster_kmedoids(log, k, params.seed, matrix, jobs);
      case Strategy::KCenter: return cluster_kcenter(log, k, params.seed, matrix, jobs);
    }
    throw InvalidArgument("unknown strategy");
  }();
  Provenance p = omega.provenance();
  p.size_percent = params.size_percent;
  return ProxySet(std::vector<Trace>(omega.members().begin(), omega.members().end()), p);
}

}  // namespace proxyalign::proxy
