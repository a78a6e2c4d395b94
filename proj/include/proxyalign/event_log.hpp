#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "proxyalign/trace.hpp"

namespace proxyalign {

struct Variant {
  Trace trace;
  std::uint64_t multiplicity = 0;
};

/// A bag of traces stored as distinct variants with multiplicities. Variants
/// are kept in canonical trace order; the log is immutable once built.
class EventLog {
 public:
  EventLog() = default;

  /// Merges duplicate traces; every multiplicity must be >= 1.
  explicit EventLog(std::vector<Variant> variants);

  static EventLog from_traces(std::span<const Trace> traces);

  std::span<const Variant> variants() const { return variants_; }
  std::size_t variant_count() const { return variants_.size(); }
  std::uint64_t total_traces() const { return total_; }
  bool empty() const { return variants_.empty(); }

  const Variant& operator[](std::size_t i) const { return variants_[i]; }

  std::optional<std::size_t> find(const Trace& trace) const;
  std::uint64_t multiplicity(const Trace& trace) const;
  std::vector<Trace> variant_traces() const;

  friend bool operator==(const EventLog& a, const EventLog& b);

 private:
  std::vector<Variant> variants_;
  std::unordered_map<Trace, std::size_t, TraceHash> index_;
  std::uint64_t total_ = 0;
};

class EventLogBuilder {
 public:
  void add_trace(Trace trace) { add_variant(std::move(trace), 1); }
  void add_variant(Trace trace, std::uint64_t multiplicity);
  std::size_t traces_added() const { return traces_; }
  EventLog build() const;

 private:
  std::unordered_map<Trace, std::uint64_t, TraceHash> counts_;
  std::size_t traces_ = 0;
};

}  // namespace proxyalign
