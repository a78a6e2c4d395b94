#pragma once
// Independent reference implementations used as test oracles. None of these
// call into the library's distance or alignment code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "proxyalign/event_log.hpp"
#include "proxyalign/petri_net.hpp"
#include "proxyalign/trace.hpp"

namespace oracle {

using proxyalign::Activity;
using proxyalign::Trace;

// Insert/delete edit distance by direct recursion over prefixes, memoized.
inline std::size_t edit_distance(const Trace& a, const Trace& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t r = a[i] == b[j] ? go(i + 1, j + 1) : 1 + std::min(go(i + 1, j), go(i, j + 1));
    memo.emplace(key, r);
    return r;
  };
  return go(0, 0);
}

inline std::size_t min_distance(const Trace& t, const std::vector<Trace>& set) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : set) best = std::min(best, edit_distance(t, s));
  return best;
}

inline std::vector<Activity> letters(std::size_t n, const std::string& prefix = "") {
  std::vector<Activity> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = prefix.empty() ? std::string(1, static_cast<char>('a' + i)) : prefix + std::to_string(i);
    out.push_back(Activity::intern(label));
  }
  return out;
}

inline Trace random_trace(std::mt19937_64& rng, const std::vector<Activity>& alphabet,
                          std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Trace t(len(rng));
  for (auto& x : t) x = alphabet[pick(rng)];
  return t;
}

inline std::vector<Trace> random_language(std::mt19937_64& rng, const std::vector<Activity>& alphabet,
                                          std::size_t max_size, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<Trace> lang(size(rng));
  for (auto& t : lang) t = random_trace(rng, alphabet, 0, max_len);
  return lang;
}

inline proxyalign::EventLog random_log(std::mt19937_64& rng, const std::vector<Activity>& alphabet,
                                       std::size_t variants, std::size_t max_len) {
  std::set<Trace, proxyalign::CanonicalLess> seen;
  std::uniform_int_distribution<std::uint64_t> mult(1, 9);
  std::vector<proxyalign::Variant> out;
  while (out.size() < variants) {
    auto t = random_trace(rng, alphabet, 1, max_len);
    if (seen.insert(t).second) out.push_back({t, mult(rng)});
  }
  return proxyalign::EventLog(std::move(out));
}

// Visible traces of every complete run of at most `max_visible` visible and
// `max_silent` silent steps, found by exhaustive depth-first firing.
inline std::set<Trace, proxyalign::CanonicalLess> net_language(const proxyalign::model::PetriNet& net, std::size_t max_visible,
                                    std::size_t max_silent) {
  std::set<Trace, proxyalign::CanonicalLess> out;
  Trace prefix;
  std::function<void(const proxyalign::model::Marking&, std::size_t)> dfs =
      [&](const proxyalign::model::Marking& m, std::size_t silent) {
        if (m == *net.final_marking) out.insert(prefix);
        for (std::size_t t = 0; t < net.transitions.size(); ++t) {
          if (!net.enabled(m, t)) continue;
          const auto& tr = net.transitions[t];
          if (tr.silent()) {
            if (silent < max_silent) dfs(net.fire(m, t), silent + 1);
          } else if (prefix.size() < max_visible) {
            prefix.push_back(*tr.label);
            dfs(net.fire(m, t), silent);
            prefix.pop_back();
          }
        }
      };
  dfs(net.initial_marking, 0);
  return out;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = from; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Frequency-weighted sum of nearest-member distances.
inline std::uint64_t epsilon(const proxyalign::EventLog& log, const std::vector<Trace>& omega) {
  std::uint64_t total = 0;
  for (const auto& v : log.variants()) total += v.multiplicity * min_distance(v.trace, omega);
  return total;
}

inline std::uint64_t optimal_kmedoids(const proxyalign::EventLog& log, std::size_t k) {
  const auto traces = log.variant_traces();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_subset(traces.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Trace> omega;
    for (auto i : idx) omega.push_back(traces[i]);
    best = std::min(best, epsilon(log, omega));
  });
  return best;
}

inline std::size_t radius(const std::vector<Trace>& points, const std::vector<Trace>& centers) {
  std::size_t r = 0;
  for (const auto& p : points) r = std::max(r, min_distance(p, centers));
  return r;
}

inline std::size_t optimal_kcenter_radius(const std::vector<Trace>& points, std::size_t k) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Trace> centers;
    for (auto i : idx) centers.push_back(points[i]);
    best = std::min(best, radius(points, centers));
  });
  return best;
}

}  // namespace oracle
