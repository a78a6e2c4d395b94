#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxyalign {

/// An interned activity label. Labels are compared byte-exactly; two
/// activities are equal iff their labels are equal. Interning is process-wide
/// and thread-safe, so ids are stable for the lifetime of the process.
class Activity {
 public:
  Activity() = default;

  static Activity intern(std::string_view label);

  std::string_view label() const;
  std::uint32_t id() const noexcept { return id_; }
  bool valid() const noexcept { return id_ != kInvalid; }

  friend bool operator==(Activity, Activity) = default;

  static constexpr std::uint32_t kInvalid = 0xFFFFFFFFu;

 private:
  explicit Activity(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;
};

/// Label order (byte-wise), used wherever a deterministic order is required.
struct ActivityLabelLess {
  bool operator()(Activity a, Activity b) const { return a.label() < b.label(); }
};

using Trace = std::vector<Activity>;

Trace make_trace(std::initializer_list<std::string_view> labels);
Trace make_trace(std::span<const std::string> labels);

/// Canonical trace order: shorter first, then lexicographic by labels.
std::strong_ordering canonical_compare(std::span<const Activity> a, std::span<const Activity> b);

struct CanonicalLess {
  bool operator()(const Trace& a, const Trace& b) const {
    return canonical_compare(a, b) == std::strong_ordering::less;
  }
};

struct TraceHash {
  std::size_t operator()(const Trace& t) const noexcept;
};

/// Renders `<a,b,c>`; the empty trace renders as `<>`.
std::string to_string(std::span<const Activity> trace);

/// Comma-joined labels; the empty trace is written as "-".
std::string to_label_list(std::span<const Activity> trace);

}  // namespace proxyalign
