#include "proxyalign/aligner.hpp"

#include <algorithm>
#include <atomic>

#include "proxyalign/distance.hpp"
#include "proxyalign/error.hpp"

namespace proxyalign::align {

namespace detail {

AlignmentResult align_with_language(const Trace& trace, const std::vector<Trace>& language) {
  // The language is canonically sorted, so distance_to_set's tie-break picks
  // the canonical minimizer.
  const auto nearest = distance::distance_to_set(trace, language);
  const Trace& target = language[nearest.index];

  const std::size_t m = trace.size();
  const std::size_t n = target.size();
  // Suffix LCS table so the traceback runs forward and the move preference
  // applies from the start of the trace, as in the net search.
  std::vector<std::uint32_t> suf((m + 1) * (n + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return suf[i * (n + 1) + j]; };
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      at(i, j) = trace[i] == target[j] ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
    }
  }

  AlignmentResult result;
  auto& moves = result.alignment.moves;
  std::size_t i = 0, j = 0;
  while (i < m || j < n) {
    if (i < m && j < n && trace[i] == target[j]) {
      moves.push_back({MoveKind::Sync, trace[i], std::nullopt});
      ++i;
      ++j;
    } else if (j < n && (i == m || at(i, j) == at(i, j + 1))) {
      moves.push_back({MoveKind::Model, target[j], std::nullopt});
      ++j;
    } else {
      moves.push_back({MoveKind::Log, trace[i], std::nullopt});
      ++i;
    }
  }
  result.alignment.log_trace = trace;
  result.alignment.model_trace = target;
  result.cost = nearest.distance;
  result.states_expanded = language.size();
  return result;
}

}  // namespace detail

namespace {
std::atomic<std::uint64_t> invocations{0};
}  // namespace

std::uint64_t alignment_invocations() { return invocations.load(); }

AlignmentResult optimal_alignment(const Trace& trace, const model::ProcessModel& model,
                                  const AlignerOptions& options) {
  invocations.fetch_add(1, std::memory_order_relaxed);
  const auto start = std::chrono::steady_clock::now();
  AlignmentResult result =
      model.is_explicit()
          ? detail::align_with_language(trace, model.language())
          : detail::align_with_net(trace, model,
                                   options.state_bound ? options.state_bound : model.state_bound(),
                                   options.heuristic);
  result.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

std::size_t alignment_cost(const Alignment& alignment) {
  std::size_t cost = 0;
  for (const auto& m : alignment.moves) cost += m.cost();
  return cost;
}

Trace model_projection(const Alignment& alignment) {
  Trace out;
  for (const auto& m : alignment.moves) {
    if (m.kind == MoveKind::Sync || m.kind == MoveKind::Model) out.push_back(m.activity);
  }
  return out;
}

Trace log_projection(const Alignment& alignment) {
  Trace out;
  for (const auto& m : alignment.moves) {
    if (m.kind == MoveKind::Sync || m.kind == MoveKind::Log) out.push_back(m.activity);
  }
  return out;
}

std::string format_moves(const Alignment& alignment) {
  std::string out;
  for (const auto& m : alignment.moves) {
    if (!out.empty()) out += ' ';
    switch (m.kind) {
      case MoveKind::Sync:
        out.append(m.activity.label()).append("/").append(m.activity.label());
        break;
      case MoveKind::Log: out.append(m.activity.label()).append("/>>"); break;
      case MoveKind::Model: out.append(">>/").append(m.activity.label()); break;
      case MoveKind::Silent: out.append(">>/tau"); break;
    }
  }
  return out;
}

bool replays_on_net(const Alignment& alignment, const model::PetriNet& net) {
  if (!net.final_marking) return false;
  model::Marking marking = net.initial_marking;
  for (const auto& m : alignment.moves) {
    if (m.kind == MoveKind::Log) continue;
    if (!m.transition || *m.transition >= net.transitions.size()) return false;
    const auto& t = net.transitions[*m.transition];
    if (m.kind == MoveKind::Silent ? !t.silent() : (!t.label || *t.label != m.activity)) return false;
    if (!net.enabled(marking, *m.transition)) return false;
    marking = net.fire(marking, *m.transition);
  }
  return marking == *net.final_marking;
}

}  // namespace proxyalign::align
