#include <istream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "proxyalign/error.hpp"
#include "proxyalign/log_io.hpp"

namespace proxyalign::log_io {
namespace pt = boost::property_tree;

namespace {

const pt::ptree* find_log_element(const pt::ptree& doc) {
  for (const auto& [name, child] : doc) {
    if (name == "log") return &child;
  }
  return nullptr;
}

}  // namespace

EventLog parse_xes(std::istream& in) {
  pt::ptree doc;
  try {
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed XES: " + e.message(), e.line());
  }

  const pt::ptree* log = find_log_element(doc);
  if (log == nullptr) throw ParseError("XES document has no <log> root element");

  EventLogBuilder builder;
  std::size_t trace_index = 0;
  for (const auto& [name, trace_node] : *log) {
    if (name != "trace") continue;
    ++trace_index;
    Trace trace;
    for (const auto& [event_name, event_node] : trace_node) {
      if (event_name != "event") continue;
      std::optional<std::string> label;
      for (const auto& [attr_name, attr] : event_node) {
        if (attr_name != "string") continue;
        if (attr.get<std::string>("<xmlattr>.key", "") == "concept:name") {
          label = attr.get<std::string>("<xmlattr>.value", "");
          break;
        }
      }
      if (!label || label->empty()) {
        throw ParseError("event " + std::to_string(trace.size() + 1) + " of trace " +
                         std::to_string(trace_index) + " has no concept:name");
      }
      trace.push_back(Activity::intern(*label));
    }
    builder.add_trace(std::move(trace));
  }
  return builder.build();
}

}  // namespace proxyalign::log_io
