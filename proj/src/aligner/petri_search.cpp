#include <algorithm>
#include <queue>
#include <unordered_map>

#include "proxyalign/aligner.hpp"
#include "proxyalign/error.hpp"

namespace proxyalign::align::detail {
namespace {

struct StateKey {
  model::Marking marking;
  std::size_t position;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return model::MarkingHash{}(k.marking) * 31 + k.position;
  }
};

struct Node {
  const StateKey* key = nullptr;
  std::size_t cost = 0;
  std::size_t parent = 0;
  Move move;
  bool closed = false;
};

struct QueueEntry {
  std::size_t priority;
  std::size_t sequence;
  std::size_t node;
  bool operator>(const QueueEntry& o) const {
    return priority != o.priority ? priority > o.priority : sequence > o.sequence;
  }
};

}  // namespace

// Uniform-cost (optionally A*) search over the synchronous product of the
// trace and the net's reachability graph. A state is (marking, number of
// trace events consumed).
AlignmentResult align_with_net(const Trace& trace, const model::ProcessModel& model,
                               std::size_t state_bound, bool heuristic) {
  const model::PetriNet& net = model.net();
  const std::size_t n = trace.size();

  // Log events outside the alphabet can only be log moves; consistent, since a
  // log move costs 1 and lowers the estimate by at most 1.
  std::vector<std::size_t> foreign_suffix(n + 1, 0);
  if (heuristic) {
    for (std::size_t i = n; i-- > 0;) {
      foreign_suffix[i] = foreign_suffix[i + 1] + (model.in_alphabet(trace[i]) ? 0 : 1);
    }
  }

  std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
  std::vector<Node> nodes;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
  std::size_t sequence = 0;
  std::size_t expanded = 0;

  auto relax = [&](StateKey key, std::size_t cost, std::size_t parent, Move move) {
    auto it = index.find(key);
    if (it == index.end()) {
      if (nodes.size() >= state_bound) throw StateBoundExceeded(state_bound, "alignment search");
      const std::size_t id = nodes.size();
      auto [pos, _] = index.emplace(std::move(key), id);
      nodes.push_back({&pos->first, cost, parent, move, false});
      open.push({cost + foreign_suffix[pos->first.position], sequence++, id});
      return;
    }
    Node& node = nodes[it->second];
    if (node.closed || node.cost <= cost) return;
    node.cost = cost;
    node.parent = parent;
    node.move = move;
    open.push({cost + foreign_suffix[node.key->position], sequence++, it->second});
  };

  relax({net.initial_marking, 0}, 0, 0, Move{});
  while (!open.empty()) {
    const QueueEntry top = open.top();
    open.pop();
    Node& current = nodes[top.node];
    if (current.closed || top.priority != current.cost + foreign_suffix[current.key->position]) {
      continue;
    }
    current.closed = true;
    ++expanded;
    const model::Marking& marking = current.key->marking;
    const std::size_t pos = current.key->position;
    const std::size_t cost = current.cost;

    if (pos == n && marking == *net.final_marking) {
      AlignmentResult result;
      std::vector<Move> moves;
      for (std::size_t id = top.node; id != 0; id = nodes[id].parent) moves.push_back(nodes[id].move);
      std::reverse(moves.begin(), moves.end());
      result.alignment.moves = std::move(moves);
      result.alignment.log_trace = trace;
      result.alignment.model_trace = model_projection(result.alignment);
      result.cost = cost;
      result.states_expanded = expanded;
      return result;
    }

    const std::size_t self = top.node;
    // Successors in tie-break order: sync, silent, model, log.
    if (pos < n) {
      for (std::size_t t = 0; t < net.transitions.size(); ++t) {
        const auto& tr = net.transitions[t];
        if (tr.label && *tr.label == trace[pos] && net.enabled(marking, t)) {
          relax({net.fire(marking, t), pos + 1}, cost, self, {MoveKind::Sync, trace[pos], t});
        }
      }
    }
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (net.transitions[t].silent() && net.enabled(marking, t)) {
        relax({net.fire(marking, t), pos}, cost, self, {MoveKind::Silent, Activity{}, t});
      }
    }
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      const auto& tr = net.transitions[t];
      if (tr.label && net.enabled(marking, t)) {
        relax({net.fire(marking, t), pos}, cost + 1, self, {MoveKind::Model, *tr.label, t});
      }
    }
    if (pos < n) {
      relax({marking, pos + 1}, cost + 1, self, {MoveKind::Log, trace[pos], std::nullopt});
    }
  }
  throw ModelError("no alignment exists: the final marking is unreachable");
}

}  // namespace proxyalign::align::detail
