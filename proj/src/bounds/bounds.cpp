#include "proxyalign/bounds.hpp"

#include <algorithm>
#include <limits>

#include "proxyalign/distance.hpp"
#include "proxyalign/error.hpp"

namespace proxyalign::bounds {

ModelMeta ModelMeta::from_model(const model::ProcessModel& model, bool strict) {
  ModelMeta meta;
  for (Activity a : model.alphabet()) meta.alphabet.insert(a.id());
  meta.min_visible_length = model.min_visible_length();
  meta.use_alphabet_term = !strict || model.alphabet_verified();
  return meta;
}

std::string_view lower_source_name(LowerSource s) {
  switch (s) {
    case LowerSource::Structural: return "structural";
    case LowerSource::Proxy: return "proxy";
    case LowerSource::Both: return "both";
  }
  return "unknown";
}

LowerSource parse_lower_source(std::string_view name) {
  for (auto s : {LowerSource::Structural, LowerSource::Proxy, LowerSource::Both}) {
    if (lower_source_name(s) == name) return s;
  }
  throw InvalidArgument("unknown lower-bound source '" + std::string(name) + "'");
}

std::string_view estimator_name(Estimator e) {
  switch (e) {
    case Estimator::Midpoint: return "midpoint";
    case Estimator::HalfDistanceZeroCost: return "half-distance";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view name) {
  if (name == "midpoint") return Estimator::Midpoint;
  if (name == "half-distance") return Estimator::HalfDistanceZeroCost;
  throw InvalidArgument("unknown estimator '" + std::string(name) + "'");
}

std::size_t structural_lower_bound(const Trace& trace, const ModelMeta& meta) {
  std::size_t value = meta.min_visible_length > trace.size() ? meta.min_visible_length - trace.size() : 0;
  if (meta.use_alphabet_term) {
    for (Activity a : trace) {
      if (!meta.alphabet.contains(a.id())) ++value;
    }
  }
  return value;
}

namespace {

struct ProxyTerms {
  std::size_t upper = 0;
  std::size_t proxy_lower = 0;
  std::size_t nearest = 0;
  std::size_t nearest_distance = 0;
};

ProxyTerms proxy_terms(const Trace& trace, const proxy::ProxySet& omega) {
  omega.require_ref_costs();
  const auto deltas = distance::distances_to_many(trace, omega.members());
  ProxyTerms terms;
  terms.upper = std::numeric_limits<std::size_t>::max();
  terms.nearest_distance = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const std::size_t z = *omega.ref_cost(i);
    const std::size_t d = deltas[i];
    terms.upper = std::min(terms.upper, z + d);
    if (z > d) terms.proxy_lower = std::max(terms.proxy_lower, z - d);
    // Members are canonically ordered: the first minimizer is the canonical one.
    if (d < terms.nearest_distance) {
      terms.nearest_distance = d;
      terms.nearest = i;
    }
  }
  return terms;
}

LowerBound combine_lower(std::size_t structural, std::size_t proxy) {
  LowerBound lb;
  lb.structural = structural;
  lb.proxy = proxy;
  lb.value = std::max(structural, proxy);
  lb.source = structural == proxy ? LowerSource::Both
              : structural > proxy ? LowerSource::Structural
                                   : LowerSource::Proxy;
  return lb;
}

}  // namespace

std::size_t upper_bound(const Trace& trace, const proxy::ProxySet& omega) {
  return proxy_terms(trace, omega).upper;
}

LowerBound lower_bound(const Trace& trace, const proxy::ProxySet& omega, const ModelMeta& meta) {
  return combine_lower(structural_lower_bound(trace, meta), proxy_terms(trace, omega).proxy_lower);
}

BoundsResult approximate_cost(const Trace& trace, const proxy::ProxySet& omega,
                              const ModelMeta& meta, Estimator estimator,
                              const Rational& upper_weight) {
  if (upper_weight < 0 || upper_weight > 1) {
    throw InvalidArgument("upper-bound weight must lie in [0, 1], got " + to_string(upper_weight));
  }
  const ProxyTerms terms = proxy_terms(trace, omega);
  const LowerBound lb = combine_lower(structural_lower_bound(trace, meta), terms.proxy_lower);
  if (lb.value > terms.upper) {
    throw InvalidArgument("lower bound " + std::to_string(lb.value) + " exceeds upper bound " +
                          std::to_string(terms.upper) + " for " + to_string(trace) +
                          "; reference costs or model metadata are inconsistent");
  }

  BoundsResult r;
  r.trace = trace;
  r.lower = lb.value;
  r.upper = terms.upper;
  r.lower_source = lb.source;
  r.nearest_proxy = omega.members()[terms.nearest];
  r.proxy_distance = terms.nearest_distance;
  const Rational lower(static_cast<std::int64_t>(r.lower));
  const Rational upper(static_cast<std::int64_t>(r.upper));
  switch (estimator) {
    case Estimator::Midpoint:
      r.estimate = upper_weight * upper + (Rational(1) - upper_weight) * lower;
      break;
    case Estimator::HalfDistanceZeroCost: {
      for (std::size_t i = 0; i < omega.size(); ++i) {
        if (*omega.ref_cost(i) != 0) {
          throw InvalidArgument("half-distance estimator needs zero-cost proxies, but " +
                                to_string(omega.members()[i]) + " costs " +
                                std::to_string(*omega.ref_cost(i)));
        }
      }
      const Rational half(static_cast<std::int64_t>(r.proxy_distance), 2);
      r.estimate = std::clamp(half, lower, upper);
      break;
    }
  }
  return r;
}

}  // namespace proxyalign::bounds
