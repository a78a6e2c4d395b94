#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "json.hpp"

#include "proxyalign/error.hpp"
#include "proxyalign/harness.hpp"
#include "proxyalign/rng.hpp"

namespace proxyalign::harness {

void SyntheticSpec::validate() const {
  auto positive = [](std::size_t v, const char* name) {
    if (v == 0) throw InvalidArgument(std::string("synthetic spec: ") + name + " must be positive");
  };
  positive(alphabet_size, "alphabet_size");
  positive(model_trace_count, "model_trace_count");
  positive(model_trace_max_length, "model_trace_max_length");
  positive(log_variant_count, "log_variant_count");
  if (multiplicity_max == 0) throw InvalidArgument("synthetic spec: multiplicity_max must be positive");
  if (model_trace_min_length > model_trace_max_length) {
    throw InvalidArgument("synthetic spec: model_trace_min_length > model_trace_max_length");
  }
  if (noise_insert_min > noise_insert_max || noise_delete_min > noise_delete_max) {
    throw InvalidArgument("synthetic spec: noise minimum exceeds maximum");
  }
  if (!(zipf_exponent >= 0)) throw InvalidArgument("synthetic spec: zipf_exponent must be >= 0");
}

SyntheticSpec SyntheticSpec::from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("synthetic spec: ") + e.what());
  }
  SyntheticSpec s;
  try {
    s.alphabet_size = doc.value("alphabet_size", s.alphabet_size);
    s.foreign_activities = doc.value("foreign_activities", s.foreign_activities);
    s.model_trace_count = doc.value("model_trace_count", s.model_trace_count);
    s.model_trace_min_length = doc.value("model_trace_min_length", s.model_trace_min_length);
    s.model_trace_max_length = doc.value("model_trace_max_length", s.model_trace_max_length);
    s.log_variant_count = doc.value("log_variant_count", s.log_variant_count);
    s.noise_insert_min = doc.value("noise_insert_min", s.noise_insert_min);
    s.noise_insert_max = doc.value("noise_insert_max", s.noise_insert_max);
    s.noise_delete_min = doc.value("noise_delete_min", s.noise_delete_min);
    s.noise_delete_max = doc.value("noise_delete_max", s.noise_delete_max);
    s.multiplicity_max = doc.value("multiplicity_max", s.multiplicity_max);
    s.zipf_exponent = doc.value("zipf_exponent", s.zipf_exponent);
    s.frequent_variants_conform = doc.value("frequent_variants_conform", s.frequent_variants_conform);
    s.seed = doc.value("seed", s.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("synthetic spec: ") + e.what());
  }
  s.validate();
  return s;
}

std::string SyntheticSpec::to_json() const {
  nlohmann::ordered_json doc;
  doc["alphabet_size"] = alphabet_size;
  doc["foreign_activities"] = foreign_activities;
  doc["model_trace_count"] = model_trace_count;
  doc["model_trace_min_length"] = model_trace_min_length;
  doc["model_trace_max_length"] = model_trace_max_length;
  doc["log_variant_count"] = log_variant_count;
  doc["noise_insert_min"] = noise_insert_min;
  doc["noise_insert_max"] = noise_insert_max;
  doc["noise_delete_min"] = noise_delete_min;
  doc["noise_delete_max"] = noise_delete_max;
  doc["multiplicity_max"] = multiplicity_max;
  doc["zipf_exponent"] = zipf_exponent;
  doc["frequent_variants_conform"] = frequent_variants_conform;
  doc["seed"] = seed;
  return doc.dump();
}

SyntheticInstance generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  std::vector<Activity> model_alphabet;
  for (std::size_t i = 0; i < spec.alphabet_size; ++i) {
    model_alphabet.push_back(Activity::intern("A" + std::to_string(i)));
  }
  std::vector<Activity> noise_alphabet = model_alphabet;
  for (std::size_t i = 0; i < spec.foreign_activities; ++i) {
    noise_alphabet.push_back(Activity::intern("X" + std::to_string(i)));
  }

  std::vector<Trace> model_traces;
  std::unordered_set<Trace, TraceHash> seen_model;
  const std::size_t model_attempts = spec.model_trace_count * 50;
  for (std::size_t attempt = 0; attempt < model_attempts && model_traces.size() < spec.model_trace_count;
       ++attempt) {
    const std::size_t len =
        uniform_between(rng, spec.model_trace_min_length, spec.model_trace_max_length);
    Trace t(len);
    for (auto& a : t) a = model_alphabet[uniform_index(rng, model_alphabet.size())];
    if (seen_model.insert(t).second) model_traces.push_back(std::move(t));
  }

  std::vector<Trace> variants;
  std::vector<std::size_t> noise_ops;
  std::unordered_set<Trace, TraceHash> seen_log;
  const std::size_t log_attempts = spec.log_variant_count * 50;
  for (std::size_t attempt = 0; attempt < log_attempts && variants.size() < spec.log_variant_count;
       ++attempt) {
    Trace t = model_traces[uniform_index(rng, model_traces.size())];
    const std::size_t deletions = uniform_between(rng, spec.noise_delete_min, spec.noise_delete_max);
    for (std::size_t d = 0; d < deletions && !t.empty(); ++d) {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(uniform_index(rng, t.size())));
    }
    const std::size_t insertions = uniform_between(rng, spec.noise_insert_min, spec.noise_insert_max);
    for (std::size_t i = 0; i < insertions; ++i) {
      const auto at = static_cast<std::ptrdiff_t>(uniform_index(rng, t.size() + 1));
      t.insert(t.begin() + at, noise_alphabet[uniform_index(rng, noise_alphabet.size())]);
    }
    if (seen_log.insert(t).second) {
      variants.push_back(std::move(t));
      noise_ops.push_back(deletions + insertions);
    }
  }

  // Zipf multiplicities over a random ranking, optionally with less noisy
  // variants ranked first.
  std::vector<std::size_t> rank(variants.size());
  std::iota(rank.begin(), rank.end(), 0);
  for (std::size_t i = rank.size(); i > 1; --i) std::swap(rank[i - 1], rank[uniform_index(rng, i)]);
  if (spec.frequent_variants_conform) {
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return noise_ops[a] < noise_ops[b]; });
  }
  std::vector<Variant> weighted;
  weighted.reserve(variants.size());
  for (std::size_t r = 0; r < rank.size(); ++r) {
    const double m = static_cast<double>(spec.multiplicity_max) /
                     std::pow(static_cast<double>(r + 1), spec.zipf_exponent);
    weighted.push_back({variants[rank[r]], std::max<std::uint64_t>(1, std::llround(m))});
  }
  return {model::ProcessModel::from_language(std::move(model_traces)), EventLog(std::move(weighted))};
}

}  // namespace proxyalign::harness
