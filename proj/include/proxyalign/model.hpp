#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_set>
#include <variant>
#include <vector>

#include "proxyalign/petri_net.hpp"
#include "proxyalign/trace.hpp"

namespace proxyalign::model {

inline constexpr std::size_t kDefaultStateBound = 1'000'000;

struct ModelOptions {
  std::size_t state_bound = kDefaultStateBound;
};

/// A process model exposing what alignment and the structural lower bound
/// need: its alphabet, the length of a shortest visible trace, and an
/// exact-alignment backend (finite language or Petri net).
class ProcessModel {
 public:
  /// Deduplicates and sorts canonically. Throws ModelError when empty.
  static ProcessModel from_language(std::vector<Trace> traces);

  /// Validates the net, runs the bounded liveness probe and caches the
  /// shortest visible run.
  static ProcessModel from_petri_net(PetriNet net, const ModelOptions& options = {});

  bool is_explicit() const { return std::holds_alternative<std::vector<Trace>>(backend_); }

  /// Explicit backend only.
  const std::vector<Trace>& language() const;
  /// Petri backend only.
  const PetriNet& net() const;

  /// Explicit backend: activities occurring in some trace. Petri backend:
  /// visible transition labels. Sorted by label.
  const std::vector<Activity>& alphabet() const { return alphabet_; }
  bool in_alphabet(Activity a) const { return alphabet_ids_.contains(a.id()); }

  std::size_t min_visible_length() const { return min_visible_length_; }
  std::size_t state_bound() const { return state_bound_; }

  const std::optional<LivenessProbe>& liveness() const { return liveness_; }

  /// True when alphabet() is known to contain only labels that occur in some
  /// model trace: always for explicit languages, for nets only when the probe
  /// explored the full graph and found no dead labels.
  bool alphabet_verified() const;

 private:
  ProcessModel() = default;

  std::variant<std::vector<Trace>, PetriNet> backend_;
  std::vector<Activity> alphabet_;
  std::unordered_set<std::uint32_t> alphabet_ids_;
  std::size_t min_visible_length_ = 0;
  std::size_t state_bound_ = kDefaultStateBound;
  std::optional<LivenessProbe> liveness_;
};

std::size_t min_visible_length(const ProcessModel& model);

/// One comma-separated trace per line, "-" for the empty trace; blank lines
/// and lines starting with '#' are skipped.
std::vector<Trace> parse_trace_lines(std::istream& in);
void write_trace_lines(std::ostream& out, std::span<const Trace> traces);

ProcessModel parse_explicit_language(std::istream& in);

/// .pnml files need a final marking (JSON text); anything else is read as an
/// explicit language.
ProcessModel load_model(const std::filesystem::path& path,
                        const std::optional<std::string>& final_marking_json,
                        const PnmlOptions& pnml = {}, const ModelOptions& options = {});

}  // namespace proxyalign::model
