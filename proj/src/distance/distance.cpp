#include "proxyalign/distance.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "proxyalign/error.hpp"
#include "proxyalign/parallel.hpp"
#include "proxyalign/simd/lcs_kernels.hpp"

namespace proxyalign::distance {
namespace {

std::vector<std::uint32_t> symbol_ids(std::span<const Activity> trace) {
  std::vector<std::uint32_t> ids(trace.size());
  std::transform(trace.begin(), trace.end(), ids.begin(), [](Activity a) { return a.id(); });
  return ids;
}

}  // namespace

std::size_t lcs_length(std::span<const Activity> a, std::span<const Activity> b) {
  return simd::lcs_pair_scalar(symbol_ids(a), symbol_ids(b));
}

std::size_t edit_distance(std::span<const Activity> a, std::span<const Activity> b) {
  return a.size() + b.size() - 2 * lcs_length(a, b);
}

BoundedDistance edit_distance_bounded(std::span<const Activity> a, std::span<const Activity> b,
                                      std::size_t cutoff) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const std::size_t length_gap = m > n ? m - n : n - m;
  if (length_gap >= cutoff) return {cutoff, false};

  std::vector<std::uint32_t> prev(n + 1, 0), cur(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
    // LCS(a, b) <= LCS(a[..i], b) + (m - i), hence a lower bound on the distance.
    const std::size_t best_lcs = std::min<std::size_t>(prev[n] + (m - i), std::min(m, n));
    if (m + n - 2 * best_lcs >= cutoff) return {cutoff, false};
  }
  return {m + n - 2 * static_cast<std::size_t>(prev[n]), true};
}

std::vector<std::uint32_t> distances_to_many(std::span<const Activity> query,
                                             std::span<const Trace> targets) {
  constexpr std::size_t lanes = simd::kLanes;
  const auto kernel = simd::kernel_for(simd::active_level());
  const std::vector<std::uint32_t> q = symbol_ids(query);

  std::vector<std::uint32_t> result(targets.size());
  std::vector<std::uint32_t> packed;
  std::vector<std::uint32_t> row;
  std::array<std::uint32_t, lanes> lcs{};
  for (std::size_t base = 0; base < targets.size(); base += lanes) {
    const std::size_t count = std::min(lanes, targets.size() - base);
    std::size_t width = 0;
    for (std::size_t j = 0; j < count; ++j) width = std::max(width, targets[base + j].size());

    packed.assign(width * lanes, simd::kPadSymbol);
    for (std::size_t j = 0; j < count; ++j) {
      const Trace& t = targets[base + j];
      for (std::size_t p = 0; p < t.size(); ++p) packed[p * lanes + j] = t[p].id();
    }
    row.resize((width + 1) * lanes);
    kernel(q, packed, width, row, lcs);
    for (std::size_t j = 0; j < count; ++j) {
      result[base + j] =
          static_cast<std::uint32_t>(query.size() + targets[base + j].size() - 2 * lcs[j]);
    }
  }
  return result;
}

NearestTrace distance_to_set(std::span<const Activity> trace, std::span<const Trace> set) {
  if (set.empty()) throw InvalidArgument("distance_to_set: the set must be non-empty");
  const auto distances = distances_to_many(trace, set);
  NearestTrace best{distances[0], 0};
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (distances[i] < best.distance ||
        (distances[i] == best.distance && CanonicalLess{}(set[i], set[best.index]))) {
      best = {distances[i], i};
    }
  }
  return best;
}

DistanceMatrix::DistanceMatrix(std::vector<Trace> labels, std::vector<std::uint32_t> cells)
    : labels_(std::move(labels)), cells_(std::move(cells)) {
  if (cells_.size() != labels_.size() * labels_.size()) {
    throw InvalidArgument("distance matrix cell count does not match its labels");
  }
}

void DistanceMatrix::write_csv(std::ostream& out) const {
  out << "trace";
  for (const auto& l : labels_) out << ",\"" << to_label_list(l) << '"';
  out << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    out << '"' << to_label_list(labels_[i]) << '"';
    for (std::size_t j = 0; j < size(); ++j) out << ',' << (*this)(i, j);
    out << '\n';
  }
}

DistanceMatrix distance_matrix(std::span<const Trace> traces, std::size_t jobs) {
  const std::size_t n = traces.size();
  std::vector<std::uint32_t> cells(n * n, 0);
  parallel_for(n, jobs, [&](std::size_t i) {
    const auto row = distances_to_many(traces[i], traces.subspan(i + 1));
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::size_t j = i + 1 + k;
      cells[i * n + j] = row[k];
      cells[j * n + i] = row[k];
    }
  });
  return DistanceMatrix(std::vector<Trace>(traces.begin(), traces.end()), std::move(cells));
}

}  // namespace proxyalign::distance
