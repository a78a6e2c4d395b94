#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "proxyalign/trace.hpp"

namespace proxyalign::distance {

/// Longest common subsequence length.
std::size_t lcs_length(std::span<const Activity> a, std::span<const Activity> b);

/// Insertion/deletion edit distance: |a| + |b| - 2 LCS(a, b).
std::size_t edit_distance(std::span<const Activity> a, std::span<const Activity> b);

/// Result of a distance computation with an early-exit cutoff. When `exact`
/// is false the true distance is >= `value` (== cutoff).
struct BoundedDistance {
  std::size_t value = 0;
  bool exact = true;
};

/// Stops as soon as the distance is known to be >= cutoff. Never use the
/// inexact result where an exact distance is required.
BoundedDistance edit_distance_bounded(std::span<const Activity> a, std::span<const Activity> b,
                                      std::size_t cutoff);

/// Distances from `query` to every target, batched through the active SIMD
/// kernel. Bit-identical to calling edit_distance pairwise.
std::vector<std::uint32_t> distances_to_many(std::span<const Activity> query,
                                             std::span<const Trace> targets);

struct NearestTrace {
  std::size_t distance = 0;
  std::size_t index = 0;  ///< position of the nearest trace in the input set
};

/// Minimum distance from `trace` to `set` and a minimizer; ties go to the
/// canonically smallest trace. Throws InvalidArgument for an empty set.
NearestTrace distance_to_set(std::span<const Activity> trace, std::span<const Trace> set);

/// Symmetric pairwise distance matrix over a sequence of traces.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::vector<Trace> labels, std::vector<std::uint32_t> cells);

  std::size_t size() const { return labels_.size(); }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  const std::vector<Trace>& labels() const { return labels_; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return std::span<const std::uint32_t>(cells_).subspan(i * size(), size());
  }

  /// Header row of labels then one row per trace; for debugging.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<Trace> labels_;
  std::vector<std::uint32_t> cells_;
};

/// Every pair computed once; rows may run on up to `jobs` threads (0 = all)
/// with results identical to the sequential computation.
DistanceMatrix distance_matrix(std::span<const Trace> traces, std::size_t jobs = 1);

}  // namespace proxyalign::distance
