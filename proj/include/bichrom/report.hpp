#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bichrom/feature_vector.hpp"

namespace bichrom {

enum class Family { theta, fan, two_tree, classical_baseline };
enum class Method { closed, oracle };
enum class Format { text, json, csv };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::theta: return "theta";
    case Family::fan: return "fan";
    case Family::two_tree: return "two-tree";
    case Family::classical_baseline: return "classical-baseline";
  }
  return "?";
}

inline const char* to_string(Method m) { return m == Method::closed ? "closed-form" : "oracle"; }

inline Family family_from_string(const std::string& s) {
  if (s == "theta") return Family::theta;
  if (s == "fan") return Family::fan;
  if (s == "two-tree") return Family::two_tree;
  if (s == "classical-baseline") return Family::classical_baseline;
  throw std::invalid_argument("unknown family tag '" + s + "'");
}

inline Method method_from_string(const std::string& s) {
  if (s == "closed-form") return Method::closed;
  if (s == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method tag '" + s + "'");
}

struct SpectrumReport {
  Family family = Family::theta;
  int n = 0;
  Method method = Method::closed;
  FeatureVector vector;
  std::optional<Count> total;
  std::string graph;  // "theta", "fan" or a two-tree sequence
  std::optional<std::vector<int>> degree_sequence;
  std::optional<double> wall_seconds;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

// Counts travel as decimal strings so that no consumer truncates them.
inline void to_json(nlohmann::ordered_json& j, const SpectrumReport& r) {
  j = nlohmann::ordered_json::object();
  j["family"] = to_string(r.family);
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["method"] = to_string(r.method);
  j["vector"] = r.vector.decimal();
  if (r.total) j["total"] = r.total->str();
  if (r.degree_sequence) j["degree_sequence"] = *r.degree_sequence;
  if (r.wall_seconds) j["wall_time_s"] = *r.wall_seconds;
}

inline SpectrumReport report_from_json(const nlohmann::json& j) {
  SpectrumReport r;
  r.family = family_from_string(j.at("family").get<std::string>());
  r.graph = j.value("graph", std::string{});
  r.n = j.at("n").get<int>();
  r.method = method_from_string(j.at("method").get<std::string>());
  std::vector<Count> v;
  for (const auto& s : j.at("vector")) v.emplace_back(s.get<std::string>());
  r.vector = FeatureVector(std::move(v));
  if (j.contains("total")) r.total = Count(j["total"].get<std::string>());
  if (j.contains("degree_sequence")) r.degree_sequence = j["degree_sequence"].get<std::vector<int>>();
  if (j.contains("wall_time_s")) r.wall_seconds = j["wall_time_s"].get<double>();
  if (r.vector.n() != static_cast<std::size_t>(r.n))
    throw std::invalid_argument("report: vector length " + std::to_string(r.vector.n()) + " != n " +
                                std::to_string(r.n));
  if (r.total && *r.total != r.vector.total()) throw std::invalid_argument("report: total does not match vector");
  return r;
}

inline std::vector<SpectrumReport> reports_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<SpectrumReport> out;
  for (const auto& item : j) out.push_back(report_from_json(item));
  return out;
}

inline void write_reports(std::ostream& os, const std::vector<SpectrumReport>& reports, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(r);
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "family,n,k,method,count\n";
      for (const auto& r : reports)
        for (std::size_t k = 1; k <= r.vector.n(); ++k)
          os << to_string(r.family) << ',' << r.n << ',' << k << ',' << to_string(r.method) << ',' << r.vector.r(k)
             << '\n';
      break;
    case Format::text:
      for (const auto& r : reports) {
        os << to_string(r.family);
        if (r.graph != to_string(r.family)) os << " graph=" << r.graph;
        os << " n=" << r.n << ' ' << to_string(r.method) << ' ' << r.vector;
        if (r.total) os << " total=" << *r.total;
        if (r.wall_seconds) {
          std::ostringstream t;
          t << std::fixed << std::setprecision(6) << *r.wall_seconds;
          os << " time=" << t.str() << 's';
        }
        os << '\n';
      }
      break;
  }
}

}  // namespace bichrom
