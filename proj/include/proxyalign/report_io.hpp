#pragma once

#include <iosfwd>
#include <string_view>

#include "proxyalign/bounds.hpp"

namespace proxyalign::log_io {

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view name);

/// Fields are written in a fixed order. Rationals are JSON numbers when they
/// have at most three decimals, otherwise "p/q" strings. Timings are written
/// only when present in the report.
void write_report(std::ostream& out, const bounds::ApproxReport& report, ReportFormat format);

/// Inverse of the JSON writer.
bounds::ApproxReport read_report_json(std::istream& in);

}  // namespace proxyalign::log_io
