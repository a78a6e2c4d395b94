#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxyalign/model.hpp"
#include "proxyalign/trace.hpp"

namespace proxyalign::align {

enum class MoveKind {
  Sync,    ///< (a, a)
  Log,     ///< (a, >>)
  Model,   ///< (>>, a)
  Silent,  ///< (>>, tau), free
};

struct Move {
  MoveKind kind = MoveKind::Sync;
  Activity activity;                     ///< invalid for silent moves
  std::optional<std::size_t> transition; ///< Petri backend only

  std::size_t cost() const { return kind == MoveKind::Log || kind == MoveKind::Model ? 1 : 0; }
  friend bool operator==(const Move&, const Move&) = default;
};

struct Alignment {
  std::vector<Move> moves;
  Trace log_trace;
  Trace model_trace;  ///< visible model-side projection
};

struct AlignmentResult {
  Alignment alignment;
  std::size_t cost = 0;
  std::size_t states_expanded = 0;
  std::chrono::microseconds wall_time{0};
};

struct AlignerOptions {
  /// 0 uses the model's configured bound.
  std::size_t state_bound = 0;
  /// A* with h = remaining log activities outside the model alphabet
  /// (Petri backend).
  bool heuristic = false;
};

/// One optimal alignment under the standard cost function (log and model
/// moves cost 1, synchronous and silent moves 0). Ties prefer synchronous,
/// then silent, then model, then log moves, then lower transition index.
AlignmentResult optimal_alignment(const Trace& trace, const model::ProcessModel& model,
                                  const AlignerOptions& options = {});

/// Process-wide number of optimal_alignment calls so far.
std::uint64_t alignment_invocations();

std::size_t alignment_cost(const Alignment& alignment);
Trace model_projection(const Alignment& alignment);
Trace log_projection(const Alignment& alignment);

/// Space-separated columns `log/model`, with `>>` for a skip and `tau` for a
/// silent step, e.g. `>>/a b/b d/>> e/e`.
std::string format_moves(const Alignment& alignment);

/// Replays the model side of an alignment on the net from the initial marking
/// and checks that the final marking is reached.
bool replays_on_net(const Alignment& alignment, const model::PetriNet& net);

namespace detail {
AlignmentResult align_with_language(const Trace& trace, const std::vector<Trace>& language);
AlignmentResult align_with_net(const Trace& trace, const model::ProcessModel& model,
                               std::size_t state_bound, bool heuristic);
}  // namespace detail

}  // namespace proxyalign::align
