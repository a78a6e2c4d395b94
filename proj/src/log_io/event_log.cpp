#include "proxyalign/event_log.hpp"

#include <algorithm>

#include "proxyalign/error.hpp"

namespace proxyalign {

EventLog::EventLog(std::vector<Variant> variants) {
  std::unordered_map<Trace, std::uint64_t, TraceHash> merged;
  for (auto& v : variants) {
    if (v.multiplicity == 0) {
      throw InvalidArgument("variant " + to_string(v.trace) + " has multiplicity 0");
    }
    merged[std::move(v.trace)] += v.multiplicity;
  }
  variants_.reserve(merged.size());
  for (auto& [trace, count] : merged) variants_.push_back({trace, count});
  std::sort(variants_.begin(), variants_.end(),
            [](const Variant& a, const Variant& b) { return CanonicalLess{}(a.trace, b.trace); });
  for (std::size_t i = 0; i < variants_.size(); ++i) {
    index_.emplace(variants_[i].trace, i);
    total_ += variants_[i].multiplicity;
  }
}

EventLog EventLog::from_traces(std::span<const Trace> traces) {
  EventLogBuilder builder;
  for (const auto& t : traces) builder.add_trace(t);
  return builder.build();
}

std::optional<std::size_t> EventLog::find(const Trace& trace) const {
  if (auto it = index_.find(trace); it != index_.end()) return it->second;
  return std::nullopt;
}

std::uint64_t EventLog::multiplicity(const Trace& trace) const {
  auto i = find(trace);
  return i ? variants_[*i].multiplicity : 0;
}

std::vector<Trace> EventLog::variant_traces() const {
  std::vector<Trace> out;
  out.reserve(variants_.size());
  for (const auto& v : variants_) out.push_back(v.trace);
  return out;
}

bool operator==(const EventLog& a, const EventLog& b) {
  if (a.variants_.size() != b.variants_.size() || a.total_ != b.total_) return false;
  for (std::size_t i = 0; i < a.variants_.size(); ++i) {
    if (a.variants_[i].trace != b.variants_[i].trace ||
        a.variants_[i].multiplicity != b.variants_[i].multiplicity) {
      return false;
    }
  }
  return true;
}

void EventLogBuilder::add_variant(Trace trace, std::uint64_t multiplicity) {
  if (multiplicity == 0) throw InvalidArgument("multiplicity must be >= 1");
  counts_[std::move(trace)] += multiplicity;
  traces_ += multiplicity;
}

EventLog EventLogBuilder::build() const {
  std::vector<Variant> variants;
  variants.reserve(counts_.size());
  for (const auto& [trace, count] : counts_) variants.push_back({trace, count});
  return EventLog(std::move(variants));
}

}  // namespace proxyalign
