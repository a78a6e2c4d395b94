#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "proxyalign/error.hpp"
#include "proxyalign/log_io.hpp"

namespace proxyalign::log_io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Trace parse_label_list(std::string_view text, std::size_t line) {
  Trace trace;
  if (text == "-") return trace;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view label =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (label.empty()) throw ParseError("empty activity label", line);
    trace.push_back(Activity::intern(label));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return trace;
}

}  // namespace

void write_variants(std::ostream& out, const EventLog& log) {
  for (const auto& v : log.variants()) {
    out << v.multiplicity << '\t' << to_label_list(v.trace) << '\n';
  }
}

EventLog parse_variants(std::istream& in) {
  EventLogBuilder builder;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const std::size_t tab = text.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected '<count>\\t<trace>'", line);
    const std::string_view count_text = trim(text.substr(0, tab));
    std::uint64_t count = 0;
    auto [ptr, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count == 0) {
      throw ParseError("invalid multiplicity '" + std::string(count_text) + "'", line);
    }
    builder.add_variant(parse_label_list(trim(text.substr(tab + 1)), line), count);
  }
  return builder.build();
}

EventLog load_event_log(const std::filesystem::path& path, const CsvColumns& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open log '" + path.string() + "'");
  const auto ext = path.extension().string();
  if (ext == ".xes") return parse_xes(in);
  if (ext == ".csv") return parse_csv(in, columns);
  return parse_variants(in);
}

}  // namespace proxyalign::log_io
