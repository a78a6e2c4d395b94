#include "proxyalign/trace.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "proxyalign/error.hpp"

namespace proxyalign {
namespace {

class ActivityTable {
 public:
  static ActivityTable& instance() {
    static ActivityTable table;
    return table;
  }

  std::uint32_t intern(std::string_view label) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(label); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(label); it != ids_.end()) return it->second;
    if (labels_.size() >= Activity::kInvalid) throw InvalidArgument("activity table full");
    const auto id = static_cast<std::uint32_t>(labels_.size());
    // deque keeps element addresses stable, so the map can key on views.
    const std::string& stored = labels_.emplace_back(label);
    ids_.emplace(std::string_view(stored), id);
    return id;
  }

  std::string_view label(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return labels_.at(id);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> labels_;
  std::unordered_map<std::string_view, std::uint32_t> ids_;
};

}  // namespace

Activity Activity::intern(std::string_view label) {
  if (label.empty()) throw InvalidArgument("activity label must be non-empty");
  return Activity(ActivityTable::instance().intern(label));
}

std::string_view Activity::label() const {
  if (!valid()) return {};
  return ActivityTable::instance().label(id_);
}

Trace make_trace(std::initializer_list<std::string_view> labels) {
  Trace t;
  t.reserve(labels.size());
  for (auto l : labels) t.push_back(Activity::intern(l));
  return t;
}

Trace make_trace(std::span<const std::string> labels) {
  Trace t;
  t.reserve(labels.size());
  for (const auto& l : labels) t.push_back(Activity::intern(l));
  return t;
}

std::strong_ordering canonical_compare(std::span<const Activity> a, std::span<const Activity> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    const int c = a[i].label().compare(b[i].label());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t TraceHash::operator()(const Trace& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Activity a : t) {
    h ^= a.id();
    h *= 0x100000001b3ull;
  }
  return h ^ t.size();
}

std::string to_string(std::span<const Activity> trace) {
  std::string out = "<";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ',';
    out += trace[i].label();
  }
  out += '>';
  return out;
}

std::string to_label_list(std::span<const Activity> trace) {
  if (trace.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ',';
    out += trace[i].label();
  }
  return out;
}

}  // namespace proxyalign
