#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>

#include "proxyalign/error.hpp"
#include "proxyalign/log_io.hpp"

namespace proxyalign::log_io {
namespace {

/// Splits one logical CSV record; quoted fields may contain the delimiter,
/// doubled quotes and newlines. Returns nullopt at end of input.
std::optional<std::vector<std::string>> read_record(std::istream& in, char delimiter,
                                                    std::size_t& line) {
  std::string raw;
  if (!std::getline(in, raw)) return std::nullopt;
  ++line;
  const std::size_t start_line = line;

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (;;) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < raw.size() && raw[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"') {
        if (!field.empty() || was_quoted) throw ParseError("stray quote in field", line);
        quoted = true;
        was_quoted = true;
      } else if (c == delimiter) {
        fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else {
        if (was_quoted) throw ParseError("characters after closing quote", line);
        field += c;
      }
    }
    if (!quoted) break;
    field += '\n';
    if (!std::getline(in, raw)) throw ParseError("unterminated quoted field", start_line);
    ++line;
  }
  fields.push_back(std::move(field));
  return fields;
}

bool is_integer(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

struct Row {
  std::string order;
  std::size_t file_index;
  Activity activity;
};

}  // namespace

EventLog parse_csv(std::istream& in, const CsvColumns& columns) {
  std::size_t line = 0;
  auto header = read_record(in, columns.delimiter, line);
  while (header && header->size() == 1 && header->front().empty()) {
    header = read_record(in, columns.delimiter, line);
  }
  if (!header) throw ParseError("CSV input has no header row");

  auto column_index = [&](const std::string& name) {
    auto it = std::find(header->begin(), header->end(), name);
    if (it == header->end()) throw ParseError("CSV header has no column '" + name + "'", line);
    return static_cast<std::size_t>(it - header->begin());
  };
  const std::size_t case_col = column_index(columns.case_column);
  const std::size_t activity_col = column_index(columns.activity_column);
  const std::size_t order_col = column_index(columns.order_column);

  // Cases in order of first appearance.
  std::map<std::string, std::size_t> case_ids;
  std::vector<std::vector<Row>> cases;
  bool all_integer = true;
  std::size_t file_index = 0;
  while (auto record = read_record(in, columns.delimiter, line)) {
    if (record->size() == 1 && record->front().empty()) continue;
    if (record->size() != header->size()) {
      throw ParseError("row " + std::to_string(line) + " has " + std::to_string(record->size()) +
                           " fields, header has " + std::to_string(header->size()),
                       line);
    }
    const std::string& case_id = (*record)[case_col];
    const std::string& label = (*record)[activity_col];
    const std::string& order = (*record)[order_col];
    if (case_id.empty()) throw ParseError("row " + std::to_string(line) + ": empty case id", line);
    if (label.empty()) throw ParseError("row " + std::to_string(line) + ": empty activity", line);
    if (order.empty()) throw ParseError("row " + std::to_string(line) + ": empty order value", line);
    all_integer = all_integer && is_integer(order);

    auto [it, inserted] = case_ids.emplace(case_id, cases.size());
    if (inserted) cases.emplace_back();
    cases[it->second].push_back({order, file_index++, Activity::intern(label)});
  }

  EventLogBuilder builder;
  for (auto& rows : cases) {
    if (all_integer) {
      std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::stoll(a.order) < std::stoll(b.order);
      });
    } else {
      std::stable_sort(rows.begin(), rows.end(),
                       [](const Row& a, const Row& b) { return a.order < b.order; });
    }
    Trace trace;
    trace.reserve(rows.size());
    for (const auto& r : rows) trace.push_back(r.activity);
    builder.add_trace(std::move(trace));
  }
  return builder.build();
}

}  // namespace proxyalign::log_io
