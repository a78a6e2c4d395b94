#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "proxyalign/event_log.hpp"

namespace proxyalign::log_io {

/// XES subset: <log> containing <trace> elements containing <event> elements.
/// Only the `concept:name` string attribute of each event is read.
EventLog parse_xes(std::istream& in);

struct CsvColumns {
  std::string case_column = "case";
  std::string activity_column = "activity";
  std::string order_column = "timestamp";
  char delimiter = ',';
};

/// Events are grouped by case and sorted by the order column. When every
/// order value is an integer the sort is numeric, otherwise lexicographic
/// (ISO-8601 timestamps sort correctly that way). Ties keep file order.
EventLog parse_csv(std::istream& in, const CsvColumns& columns = {});

/// Variant interchange format: one `<multiplicity>\t<a,b,c>` line per variant,
/// `-` for the empty trace, `#` comments allowed.
void write_variants(std::ostream& out, const EventLog& log);
EventLog parse_variants(std::istream& in);

/// Chooses the reader by extension: .xes, .csv, otherwise variant text.
EventLog load_event_log(const std::filesystem::path& path, const CsvColumns& columns = {});

}  // namespace proxyalign::log_io
