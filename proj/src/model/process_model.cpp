#include "proxyalign/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "proxyalign/error.hpp"

namespace proxyalign::model {

ProcessModel ProcessModel::from_language(std::vector<Trace> traces) {
  if (traces.empty()) throw ModelError("model language must contain at least one trace");
  std::sort(traces.begin(), traces.end(), CanonicalLess{});
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());

  ProcessModel model;
  for (const auto& t : traces) {
    for (Activity a : t) {
      if (model.alphabet_ids_.insert(a.id()).second) model.alphabet_.push_back(a);
    }
  }
  std::sort(model.alphabet_.begin(), model.alphabet_.end(), ActivityLabelLess{});
  model.min_visible_length_ = traces.front().size();  // canonical order is length-first
  model.backend_ = std::move(traces);
  return model;
}

ProcessModel ProcessModel::from_petri_net(PetriNet net, const ModelOptions& options) {
  net.validate();
  ProcessModel model;
  model.state_bound_ = options.state_bound;
  model.liveness_ = probe_liveness(net, options.state_bound);
  if (model.liveness_->complete && !model.liveness_->final_reachable) {
    throw ModelError("final marking is unreachable: the model language is empty");
  }
  model.min_visible_length_ = shortest_visible_run(net, options.state_bound);
  model.alphabet_ = net.visible_labels();
  for (Activity a : model.alphabet_) model.alphabet_ids_.insert(a.id());
  model.backend_ = std::move(net);
  return model;
}

const std::vector<Trace>& ProcessModel::language() const {
  if (!is_explicit()) throw ModelError("model has no explicit language");
  return std::get<std::vector<Trace>>(backend_);
}

const PetriNet& ProcessModel::net() const {
  if (is_explicit()) throw ModelError("model is not a Petri net");
  return std::get<PetriNet>(backend_);
}

bool ProcessModel::alphabet_verified() const {
  if (is_explicit()) return true;
  return liveness_ && liveness_->complete && liveness_->dead_labels.empty();
}

std::size_t min_visible_length(const ProcessModel& model) { return model.min_visible_length(); }

ProcessModel parse_explicit_language(std::istream& in) {
  return ProcessModel::from_language(parse_trace_lines(in));
}

ProcessModel load_model(const std::filesystem::path& path,
                        const std::optional<std::string>& final_marking_json,
                        const PnmlOptions& pnml, const ModelOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open model '" + path.string() + "'");
  if (path.extension() == ".pnml") {
    PetriNet net = parse_pnml(in, pnml);
    if (!final_marking_json) throw ModelError("Petri net model needs a final marking");
    net.final_marking = parse_marking_json(*final_marking_json, net);
    return ProcessModel::from_petri_net(std::move(net), options);
  }
  return parse_explicit_language(in);
}

}  // namespace proxyalign::model
