#include "proxyalign/petri_net.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

#include "json.hpp"

#include "proxyalign/error.hpp"

namespace proxyalign::model {

std::optional<std::size_t> PetriNet::place_index(std::string_view id) const {
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (places[i].id == id) return i;
  }
  return std::nullopt;
}

bool PetriNet::enabled(const Marking& m, std::size_t t) const {
  for (std::size_t p : transitions[t].inputs) {
    if (m[p] == 0) return false;
  }
  return true;
}

Marking PetriNet::fire(const Marking& m, std::size_t t) const {
  Marking next = m;
  for (std::size_t p : transitions[t].inputs) --next[p];
  for (std::size_t p : transitions[t].outputs) ++next[p];
  return next;
}

std::vector<Activity> PetriNet::visible_labels() const {
  std::vector<Activity> labels;
  for (const auto& t : transitions) {
    if (t.label && std::find(labels.begin(), labels.end(), *t.label) == labels.end()) {
      labels.push_back(*t.label);
    }
  }
  std::sort(labels.begin(), labels.end(), ActivityLabelLess{});
  return labels;
}

void PetriNet::validate() const {
  if (initial_marking.size() != places.size()) {
    throw ModelError("initial marking does not cover every place");
  }
  if (!final_marking) throw ModelError("no final marking configured");
  if (final_marking->size() != places.size()) {
    throw ModelError("final marking does not cover every place");
  }
  for (const auto& t : transitions) {
    for (std::size_t p : t.inputs) {
      if (p >= places.size()) throw ModelError("transition '" + t.id + "' has a dangling input arc");
    }
    for (std::size_t p : t.outputs) {
      if (p >= places.size()) throw ModelError("transition '" + t.id + "' has a dangling output arc");
    }
  }
}

Marking parse_marking_json(std::string_view json, const PetriNet& net) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("final marking: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("final marking must be a JSON object");
  Marking m(net.places.size(), 0);
  for (const auto& [place, tokens] : doc.items()) {
    auto idx = net.place_index(place);
    if (!idx) throw ModelError("final marking names unknown place '" + place + "'");
    if (!tokens.is_number_unsigned()) {
      throw ParseError("final marking token count for '" + place + "' must be a non-negative integer");
    }
    m[*idx] = tokens.get<std::uint32_t>();
  }
  return m;
}

LivenessProbe probe_liveness(const PetriNet& net, std::size_t state_bound) {
  LivenessProbe probe;
  std::unordered_map<Marking, std::size_t, MarkingHash> ids;
  std::vector<const Marking*> states;
  struct Edge {
    std::size_t from, transition, to;
  };
  std::vector<Edge> edges;

  auto intern = [&](Marking m) -> std::optional<std::size_t> {
    auto it = ids.find(m);
    if (it != ids.end()) return it->second;
    if (ids.size() >= state_bound) return std::nullopt;
    auto [pos, _] = ids.emplace(std::move(m), ids.size());
    states.push_back(&pos->first);
    return pos->second;
  };

  probe.complete = true;
  intern(net.initial_marking);
  for (std::size_t s = 0; s < states.size() && probe.complete; ++s) {
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!net.enabled(*states[s], t)) continue;
      auto to = intern(net.fire(*states[s], t));
      if (!to) {
        probe.complete = false;
        break;
      }
      edges.push_back({s, t, *to});
    }
  }
  probe.states = states.size();
  if (!probe.complete) return probe;

  // Backward reachability to the final marking.
  std::vector<char> coreachable(states.size(), 0);
  std::vector<std::vector<std::size_t>> predecessors(states.size());
  for (const auto& e : edges) predecessors[e.to].push_back(e.from);
  std::deque<std::size_t> queue;
  if (auto it = ids.find(*net.final_marking); it != ids.end()) {
    coreachable[it->second] = 1;
    queue.push_back(it->second);
  }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t p : predecessors[s]) {
      if (!coreachable[p]) {
        coreachable[p] = 1;
        queue.push_back(p);
      }
    }
  }
  probe.final_reachable = coreachable[0] != 0;

  std::vector<char> live(net.transitions.size(), 0);
  for (const auto& e : edges) {
    if (coreachable[e.to]) live[e.transition] = 1;
  }
  std::set<std::uint32_t> live_labels;
  for (std::size_t t = 0; t < net.transitions.size(); ++t) {
    if (!live[t]) {
      probe.dead_transitions.push_back(t);
    } else if (net.transitions[t].label) {
      live_labels.insert(net.transitions[t].label->id());
    }
  }
  for (Activity a : net.visible_labels()) {
    if (!live_labels.contains(a.id())) probe.dead_labels.push_back(a);
  }
  return probe;
}

std::size_t shortest_visible_run(const PetriNet& net, std::size_t state_bound) {
  net.validate();
  // 0-1 breadth-first search: silent firings go to the front of the deque.
  std::unordered_map<Marking, std::size_t, MarkingHash> best;
  std::deque<std::pair<Marking, std::size_t>> queue;
  best.emplace(net.initial_marking, 0);
  queue.emplace_back(net.initial_marking, 0);
  while (!queue.empty()) {
    auto [m, cost] = std::move(queue.front());
    queue.pop_front();
    if (best.at(m) < cost) continue;
    if (m == *net.final_marking) return cost;
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!net.enabled(m, t)) continue;
      const bool silent = net.transitions[t].silent();
      const std::size_t next_cost = cost + (silent ? 0 : 1);
      Marking next = net.fire(m, t);
      auto it = best.find(next);
      if (it != best.end() && it->second <= next_cost) continue;
      if (it == best.end()) {
        if (best.size() >= state_bound) throw StateBoundExceeded(state_bound, "shortest visible run");
        best.emplace(next, next_cost);
      } else {
        it->second = next_cost;
      }
      if (silent) {
        queue.emplace_front(std::move(next), next_cost);
      } else {
        queue.emplace_back(std::move(next), next_cost);
      }
    }
  }
  throw ModelError("final marking is unreachable: the model language is empty");
}

}  // namespace proxyalign::model
