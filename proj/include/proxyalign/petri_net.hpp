#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxyalign/trace.hpp"

namespace proxyalign::model {

/// Token count per place, indexed like PetriNet::places.
using Marking = std::vector<std::uint32_t>;

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept {
    std::size_t h = 0x9E3779B97F4A7C15ull;
    for (auto v : m) h = (h ^ v) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

struct Place {
  std::string id;
};

struct Transition {
  std::string id;
  std::optional<Activity> label;  ///< nullopt for silent transitions
  std::vector<std::size_t> inputs;
  std::vector<std::size_t> outputs;

  bool silent() const { return !label.has_value(); }
};

/// Labeled place/transition net with unit arc weights.
class PetriNet {
 public:
  std::vector<Place> places;
  std::vector<Transition> transitions;
  Marking initial_marking;
  std::optional<Marking> final_marking;

  std::optional<std::size_t> place_index(std::string_view id) const;

  bool enabled(const Marking& m, std::size_t t) const;
  Marking fire(const Marking& m, std::size_t t) const;

  /// Distinct visible labels in label order.
  std::vector<Activity> visible_labels() const;

  /// Checks arc endpoints, marking sizes and that a final marking is set.
  void validate() const;
};

struct PnmlOptions {
  /// Transitions whose name equals this label are silent, as are unnamed ones
  /// and ProM's `$invisible$` tool annotation.
  std::string silent_label = "tau";
};

/// PNML subset: net, optional pages, place (with initialMarking), transition
/// (with name), arc. The final marking is not read from the file.
PetriNet parse_pnml(std::istream& in, const PnmlOptions& options = {});

/// `{"place-id": tokens, ...}`; places not mentioned hold zero tokens.
Marking parse_marking_json(std::string_view json, const PetriNet& net);

/// Bounded breadth-first exploration of the reachability graph.
struct LivenessProbe {
  bool complete = false;           ///< the whole graph fit in the bound
  std::size_t states = 0;
  bool final_reachable = false;    ///< meaningful only when complete
  std::vector<std::size_t> dead_transitions;  ///< never fire on a path to the final marking
  std::vector<Activity> dead_labels;          ///< visible labels with no live transition
};

LivenessProbe probe_liveness(const PetriNet& net, std::size_t state_bound);

/// Fewest visible transitions on any firing sequence from the initial to the
/// final marking (silent firings are free). Throws StateBoundExceeded or
/// ModelError when the final marking is unreachable.
std::size_t shortest_visible_run(const PetriNet& net, std::size_t state_bound);

}  // namespace proxyalign::model
