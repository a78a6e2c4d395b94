#include <istream>
#include <ostream>
#include <string>

#include "proxyalign/error.hpp"
#include "proxyalign/model.hpp"

namespace proxyalign::model {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Trace> parse_trace_lines(std::istream& in) {
  std::vector<Trace> traces;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    Trace trace;
    if (text != "-") {
      std::size_t pos = 0;
      for (;;) {
        const std::size_t comma = text.find(',', pos);
        const auto label = trim(text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (label.empty()) throw ParseError("empty activity label", line);
        trace.push_back(Activity::intern(label));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

void write_trace_lines(std::ostream& out, std::span<const Trace> traces) {
  for (const auto& t : traces) out << to_label_list(t) << '\n';
}

}  // namespace proxyalign::model
