#include "proxyalign/report_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

#include "proxyalign/error.hpp"

namespace proxyalign::log_io {
namespace {

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  if (1000 % r.denominator() == 0 && std::abs(r.numerator()) < (std::int64_t{1} << 50)) {
    return to_double(r);
  }
  return to_string(r);
}

Rational rational_from(const ojson& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a number or rational string, got " + j.dump());
}

ojson trace_json(const Trace& t) {
  ojson arr = ojson::array();
  for (Activity a : t) arr.push_back(std::string(a.label()));
  return arr;
}

Trace trace_from(const ojson& j) {
  Trace t;
  for (const auto& label : j) t.push_back(Activity::intern(label.get<std::string>()));
  return t;
}

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_json(std::ostream& out, const bounds::ApproxReport& r) {
  ojson doc;
  doc["schema"] = "proxyalign.report/1";
  doc["estimator"] = r.estimator;
  doc["upper_weight"] = rational_json(r.upper_weight);

  ojson proxy;
  proxy["strategy"] = r.provenance.strategy;
  proxy["k"] = r.provenance.k;
  proxy["size_percent"] = r.provenance.size_percent ? rational_json(*r.provenance.size_percent) : ojson();
  proxy["seed"] = r.provenance.seed;
  ojson members = ojson::array();
  for (std::size_t i = 0; i < r.proxies.size(); ++i) {
    ojson m;
    m["trace"] = trace_json(r.proxies[i]);
    m["cost"] = i < r.proxy_costs.size() ? ojson(r.proxy_costs[i]) : ojson();
    members.push_back(std::move(m));
  }
  proxy["members"] = std::move(members);
  doc["proxy"] = std::move(proxy);

  ojson variants = ojson::array();
  for (const auto& v : r.per_variant) {
    const auto& b = v.bounds;
    ojson row;
    row["trace"] = trace_json(b.trace);
    row["multiplicity"] = v.multiplicity;
    row["lower"] = b.lower;
    row["upper"] = b.upper;
    row["estimate"] = rational_json(b.estimate);
    row["nearest_proxy"] = trace_json(b.nearest_proxy);
    row["proxy_distance"] = b.proxy_distance;
    row["lower_source"] = std::string(bounds::lower_source_name(b.lower_source));
    variants.push_back(std::move(row));
  }
  doc["variants"] = std::move(variants);

  ojson agg;
  agg["total_traces"] = r.total_traces;
  agg["variants"] = r.per_variant.size();
  agg["epsilon_max"] = r.epsilon_max;
  agg["total_estimate"] = rational_json(r.total_estimate);
  agg["total_lower"] = r.total_lower;
  agg["total_upper"] = r.total_upper;
  agg["aligner_invocations"] = r.aligner_invocations;
  doc["aggregates"] = std::move(agg);

  if (r.timings) {
    ojson t;
    t["proxy_generation"] = r.timings->proxy_generation.count();
    t["reference_alignment"] = r.timings->reference_alignment.count();
    t["bound_computation"] = r.timings->bound_computation.count();
    doc["timings_us"] = std::move(t);
  }
  out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const bounds::ApproxReport& r) {
  out << "trace,multiplicity,lower,upper,estimate,nearest_proxy,proxy_distance,lower_source\n";
  for (const auto& v : r.per_variant) {
    const auto& b = v.bounds;
    out << csv_cell(to_label_list(b.trace)) << ',' << v.multiplicity << ',' << b.lower << ','
        << b.upper << ',' << to_decimal_string(b.estimate) << ','
        << csv_cell(to_label_list(b.nearest_proxy)) << ',' << b.proxy_distance << ','
        << bounds::lower_source_name(b.lower_source) << '\n';
  }
  out << '\n' << "aggregate,value\n";
  out << "total_traces," << r.total_traces << '\n';
  out << "variants," << r.per_variant.size() << '\n';
  out << "epsilon_max," << r.epsilon_max << '\n';
  out << "total_estimate," << to_decimal_string(r.total_estimate) << '\n';
  out << "total_lower," << r.total_lower << '\n';
  out << "total_upper," << r.total_upper << '\n';
  out << "aligner_invocations," << r.aligner_invocations << '\n';
  out << "proxy_strategy," << r.provenance.strategy << '\n';
  out << "proxy_size," << r.proxies.size() << '\n';
  out << "seed," << r.provenance.seed << '\n';
  if (r.timings) {
    out << "proxy_generation_us," << r.timings->proxy_generation.count() << '\n';
    out << "reference_alignment_us," << r.timings->reference_alignment.count() << '\n';
    out << "bound_computation_us," << r.timings->bound_computation.count() << '\n';
  }
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

void write_report(std::ostream& out, const bounds::ApproxReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    write_json(out, report);
  } else {
    write_csv(out, report);
  }
}

bounds::ApproxReport read_report_json(std::istream& in) {
  ojson doc;
  try {
    doc = ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  try {
    bounds::ApproxReport r;
    r.estimator = doc.at("estimator").get<std::string>();
    r.upper_weight = rational_from(doc.at("upper_weight"));
    const auto& proxy = doc.at("proxy");
    r.provenance.strategy = proxy.at("strategy").get<std::string>();
    r.provenance.k = proxy.at("k").get<std::size_t>();
    if (!proxy.at("size_percent").is_null()) r.provenance.size_percent = rational_from(proxy["size_percent"]);
    r.provenance.seed = proxy.at("seed").get<std::uint64_t>();
    for (const auto& m : proxy.at("members")) {
      r.proxies.push_back(trace_from(m.at("trace")));
      if (!m.at("cost").is_null()) r.proxy_costs.push_back(m["cost"].get<std::size_t>());
    }
    for (const auto& row : doc.at("variants")) {
      bounds::VariantBounds v;
      v.multiplicity = row.at("multiplicity").get<std::uint64_t>();
      v.bounds.trace = trace_from(row.at("trace"));
      v.bounds.lower = row.at("lower").get<std::size_t>();
      v.bounds.upper = row.at("upper").get<std::size_t>();
      v.bounds.estimate = rational_from(row.at("estimate"));
      v.bounds.nearest_proxy = trace_from(row.at("nearest_proxy"));
      v.bounds.proxy_distance = row.at("proxy_distance").get<std::size_t>();
      v.bounds.lower_source = bounds::parse_lower_source(row.at("lower_source").get<std::string>());
      r.per_variant.push_back(std::move(v));
    }
    const auto& agg = doc.at("aggregates");
    r.total_traces = agg.at("total_traces").get<std::uint64_t>();
    r.epsilon_max = agg.at("epsilon_max").get<std::uint64_t>();
    r.total_estimate = rational_from(agg.at("total_estimate"));
    r.total_lower = agg.at("total_lower").get<std::uint64_t>();
    r.total_upper = agg.at("total_upper").get<std::uint64_t>();
    r.aligner_invocations = agg.at("aligner_invocations").get<std::size_t>();
    if (doc.contains("timings_us")) {
      const auto& t = doc["timings_us"];
      r.timings = bounds::Timings{std::chrono::microseconds(t.at("proxy_generation").get<std::int64_t>()),
                                  std::chrono::microseconds(t.at("reference_alignment").get<std::int64_t>()),
                                  std::chrono::microseconds(t.at("bound_computation").get<std::int64_t>())};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace proxyalign::log_io
