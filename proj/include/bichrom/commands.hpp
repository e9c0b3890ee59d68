#pragma once

// Subcommand implementations behind the `bichrom` tool. Each command writes
// its report to `out`, diagnostics to `err`, and returns the process exit
// status: 0 all checks pass, 1 verification mismatch, 2 usage or cap error.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bichrom/feature_vector.hpp"
#include "bichrom/graphs.hpp"
#include "bichrom/kernel.hpp"
#include "bichrom/oracle.hpp"
#include "bichrom/report.hpp"
#include "bichrom/spectra.hpp"

namespace bichrom::cli {

enum ExitStatus : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// Bad flag value or a request beyond an oracle cap; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "5", "3..10", "0,2,4..6". Ranges are inclusive.
inline std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError(field + ": '" + s + "' is not an integer");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
    if (lo > hi) throw UsageError(field + ": empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(field + ": no values given");
  return out;
}

struct FamilySpec {
  Family family = Family::theta;
  std::optional<TwoTreeSeq> seq;

  std::string label() const { return seq ? format_two_tree_seq(*seq) : to_string(family); }

  TriangleGraph graph(int n) const {
    switch (family) {
      case Family::theta: return build_theta(n);
      case Family::fan: return build_fan(n);
      default: return build_two_tree(*seq);
    }
  }
};

/// theta | fan | seq:<n;u-v;...>
inline FamilySpec parse_family(const std::string& text) {
  if (text == "theta") return {Family::theta, std::nullopt};
  if (text == "fan") return {Family::fan, std::nullopt};
  if (text.rfind("seq:", 0) == 0) {
    try {
      return {Family::two_tree, parse_two_tree_seq(text.substr(4))};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--family seq: ") + e.what());
    }
  }
  throw UsageError("--family: expected theta, fan or seq:<n;u-v;...>, got '" + text + "'");
}

enum class MethodChoice { closed, oracle, both };

inline MethodChoice parse_method(const std::string& s) {
  if (s == "closed") return MethodChoice::closed;
  if (s == "oracle") return MethodChoice::oracle;
  if (s == "both") return MethodChoice::both;
  throw UsageError("--method: expected closed, oracle or both, got '" + s + "'");
}

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("--format: expected json, csv or text, got '" + s + "'");
}

struct RunConfig {
  std::string family = "theta";
  std::vector<int> ns;
  std::vector<int> ks;
  MethodChoice method = MethodChoice::closed;
  Format format = Format::text;
  bool classical = false;
  bool check = false;
  bool timing = false;
  bool closed_only = false;
  std::vector<std::string> families{"theta", "fan"};
  std::string sequence_id;
  int count = 8;
};

namespace detail {

inline std::vector<int> resolve_ns(const RunConfig& cfg, const FamilySpec& fam) {
  if (fam.seq) {
    for (int n : cfg.ns)
      if (n != fam.seq->n)
        throw UsageError("--n: " + std::to_string(n) + " does not match the sequence's vertex count " +
                         std::to_string(fam.seq->n));
    return {fam.seq->n};
  }
  if (cfg.ns.empty()) throw UsageError("--n: required for family " + fam.label());
  for (int n : cfg.ns)
    if (n < 3) throw UsageError("--n: must be >= 3 (got " + std::to_string(n) + ")");
  return cfg.ns;
}

inline void require_oracle_size(int n) {
  if (n > kMaxPartitionVertices)
    throw UsageError("--n: oracle method is limited to n <= " + std::to_string(kMaxPartitionVertices) + " (got " +
                     std::to_string(n) + ")");
}

}  // namespace detail

inline SpectrumReport compute_report(const FamilySpec& fam, int n, Method method, bool classical, bool timing,
                                     KernelTables& tables) {
  const auto start = std::chrono::steady_clock::now();
  const TriangleGraph g = fam.graph(n);
  FeatureVector v;
  if (method == Method::oracle) {
    detail::require_oracle_size(n);
    v = oracle_spectrum(g, classical ? Constraint::classical : Constraint::bichromatic);
  } else if (classical) {
    v = classical_spectrum(n);
  } else if (fam.family == Family::theta) {
    v = theta_spectrum(n, tables);
  } else if (fam.family == Family::fan) {
    v = fan_spectrum(n, tables);
  } else {
    throw UsageError("--method: no closed form exists for a general two-tree sequence; use --method oracle");
  }
  SpectrumReport r;
  r.family = classical ? Family::classical_baseline : fam.family;
  r.n = n;
  r.method = method;
  r.total = v.total();
  r.vector = std::move(v);
  r.graph = fam.label();
  r.degree_sequence = degree_sequence(g);
  if (timing)
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// One report per (n, method). With --method both, differing vectors exit 1.
inline int cmd_spectrum(const RunConfig& cfg, KernelTables& tables, std::ostream& out, std::ostream& err) {
  const FamilySpec fam = parse_family(cfg.family);
  const auto ns = detail::resolve_ns(cfg, fam);
  std::vector<SpectrumReport> reports;
  int status = kPass;
  for (int n : ns) {
    if (cfg.method != MethodChoice::closed) detail::require_oracle_size(n);
    if (cfg.method != MethodChoice::oracle)
      reports.push_back(compute_report(fam, n, Method::closed, cfg.classical, cfg.timing, tables));
    if (cfg.method != MethodChoice::closed)
      reports.push_back(compute_report(fam, n, Method::oracle, cfg.classical, cfg.timing, tables));
    if (cfg.method == MethodChoice::both) {
      const auto& c = reports[reports.size() - 2].vector;
      const auto& o = reports.back().vector;
      if (c != o) {
        err << "mismatch: " << fam.label() << " n=" << n << " closed " << c << " vs oracle " << o << '\n';
        status = kMismatch;
      }
    }
  }
  write_reports(out, reports, cfg.format);
  return status;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string family;
  int n = 0;
  std::string check;
  bool passed = true;
  std::string detail;
};

namespace detail {

/// Cell-wise recurrence audit of the memo tables for rows 1..max_n.
inline std::vector<CheckResult> audit_tables(int max_n, KernelTables& t) {
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, std::optional<std::string> failure) {
    out.push_back({"tables", max_n, name, !failure.has_value(), failure.value_or("")});
  };
  std::optional<std::string> pascal, stirling, bell, fib;
  for (int n = 1; n <= max_n; ++n) {
    Count row = 0;
    for (int k = 0; k <= n; ++k) {
      const Count s = t.stirling2(n, k);
      row += s;
      if (!stirling && k >= 1) {
        const Count expect = k * t.stirling2(n - 1, k) + t.stirling2(n - 1, k - 1);
        if (s != expect)
          stirling = "stirling2(" + std::to_string(n) + "," + std::to_string(k) + ") = " + s.str() +
                     " but k*S(n-1,k) + S(n-1,k-1) = " + expect.str();
      }
      if (!pascal && k >= 1 && k <= n - 1) {
        const Count b = t.binomial(n, k), expect = t.binomial(n - 1, k - 1) + t.binomial(n - 1, k);
        if (b != expect)
          pascal = "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") = " + b.str() +
                   " but Pascal sum = " + expect.str();
      }
    }
    if (!bell && t.bell(n) != row)
      bell = "bell(" + std::to_string(n) + ") = " + t.bell(n).str() + " but Stirling row sum = " + row.str();
    if (!fib && t.fibonacci(n) != t.fibonacci_poly(n, 1))
      fib = "fibonacci(" + std::to_string(n) + ") = " + t.fibonacci(n).str() + " but fibonacci_poly(n,1) = " +
            t.fibonacci_poly(n, 1).str();
  }
  record("pascal-recurrence", pascal);
  record("stirling-recurrence", stirling);
  record("bell-row-sum", bell);
  record("fibonacci-poly-at-1", fib);
  return out;
}

inline std::optional<std::string> first_mismatch(const FeatureVector& closed, const FeatureVector& oracle) {
  for (std::size_t k = 1; k <= std::max(closed.n(), oracle.n()); ++k)
    if (closed.r(k) != oracle.r(k))
      return "k=" + std::to_string(k) + ": closed=" + closed.r(k).str() + " oracle=" + oracle.r(k).str();
  return std::nullopt;
}

inline std::optional<std::string> compare(int k, const Count& lhs, const Count& rhs, const char* lhs_name,
                                          const char* rhs_name) {
  if (lhs == rhs) return std::nullopt;
  return "k=" + std::to_string(k) + ": " + lhs_name + "=" + lhs.str() + " " + rhs_name + "=" + rhs.str();
}

/// Structural facts of valid partitions with >= 3 blocks: theta centrals share
/// a block; the fan apex shares its block with a nonempty independent set of
/// path vertices.
inline std::optional<std::string> structure_violation(Family family, const TriangleGraph& g) {
  std::optional<std::string> bad;
  for_each_valid_partition(g, Constraint::bichromatic, [&](const PartitionCode& p) {
    if (bad || p.blocks < 3) return;
    const auto& lab = p.rgs;
    if (family == Family::theta) {
      if (lab[0] != lab[1]) bad = "k=" + std::to_string(p.blocks) + ": centrals in different blocks";
      return;
    }
    bool any = false;
    for (int v = 1; v < g.n(); ++v) {
      if (lab[v] != lab[0]) continue;
      any = true;
      if (v + 1 < g.n() && lab[v + 1] == lab[0])
        bad = "k=" + std::to_string(p.blocks) + ": apex block contains adjacent path vertices";
    }
    if (!any) bad = "k=" + std::to_string(p.blocks) + ": apex isolated";
  });
  return bad;
}

}  // namespace detail

inline constexpr double kBinetRelTolerance = 1e-9;
inline constexpr int kBinetMaxM = 40;

inline std::vector<CheckResult> run_verify(const std::vector<std::string>& families, const std::vector<int>& ns,
                                           bool closed_only, KernelTables& tables) {
  for (const auto& f : families)
    if (f != "theta" && f != "fan") throw UsageError("--families: expected theta and/or fan, got '" + f + "'");
  int max_n = 3;
  for (int n : ns) {
    if (n < 3) throw UsageError("--n: must be >= 3 (got " + std::to_string(n) + ")");
    if (!closed_only) detail::require_oracle_size(n);
    max_n = std::max(max_n, n);
  }
  std::vector<CheckResult> results = detail::audit_tables(max_n + 2, tables);

  for (const auto& fname : families) {
    const Family family = fname == "theta" ? Family::theta : Family::fan;
    for (int n : ns) {
      auto add = [&](const std::string& check, std::optional<std::string> failure) {
        results.push_back({fname, n, check, !failure.has_value(), failure.value_or("")});
      };
      const FeatureVector closed = family == Family::theta ? theta_spectrum(n, tables) : fan_spectrum(n, tables);
      if (!closed_only) {
        const TriangleGraph g = family == Family::theta ? build_theta(n) : build_fan(n);
        add("closed-vs-oracle", detail::first_mismatch(closed, oracle_spectrum(g)));
        add("structure", detail::structure_violation(family, g));
      }
      if (family == Family::theta) {
        add("total", detail::compare(0, theta_total(n, tables), closed.total(), "2^(n-2)+B(n-2)", "sum"));
        if (n >= 4) {
          add("small-k r3", detail::compare(3, closed.r(3), pow2(n - 3) - 1, "r3", "2^(n-3)-1"));
          add("small-k r(n-1)", detail::compare(n - 1, closed.r(n - 1), 1, "r(n-1)", "one"));
        }
        if (n >= 5) {
          BigInt p3 = 1;
          for (int i = 0; i < n - 3; ++i) p3 *= 3;
          const Count r4 = checked_count((p3 - pow2(n - 2) + 1) / 2, "theta r4");
          add("small-k r4", detail::compare(4, closed.r(4), r4, "r4", "(3^(n-3)-2^(n-2)+1)/2"));
        }
        continue;
      }
      add("total", detail::compare(0, fan_total(n, tables), closed.total(), "sum a(m,t)B(t)", "sum"));
      add("corollary-k2", detail::compare(2, closed.r(2), fan_r2(n, tables), "expansion", "F(n+1)"));
      add("corollary-k3", detail::compare(3, closed.r(3), fan_r3_closed(n, tables), "expansion", "closed"));
      if (n >= 4) add("corollary-k4", detail::compare(4, closed.r(4), fan_r4_closed(n, tables), "expansion", "closed"));
      if (n >= 5) add("corollary-k5", detail::compare(5, closed.r(5), fan_r5_closed(n, tables), "expansion", "closed"));
      const int m = n - 1;
      if (m <= kBinetMaxM) {
        std::optional<std::string> failure;
        for (int r = 1; r <= 4 && !failure; ++r) {
          const Count exact = big_a(m, r, tables);
          const auto approx = big_a_binet(m, r);
          const double ref = exact.convert_to<double>();
          if (!approx || std::abs(*approx - ref) / ref >= kBinetRelTolerance) {
            std::ostringstream s;
            s.precision(17);
            s << "r=" << r << ": exact=" << exact << " binet=" << (approx ? *approx : NAN);
            failure = s.str();
          }
        }
        add("binet", failure);
      }
    }
  }
  return results;
}

inline int cmd_verify(const RunConfig& cfg, KernelTables& tables, std::ostream& out, std::ostream& err) {
  if (cfg.ns.empty()) throw UsageError("--n: required (e.g. --n 3..10)");
  const auto results = run_verify(cfg.families, cfg.ns, cfg.closed_only, tables);
  std::size_t failed = 0;
  const CheckResult* first = nullptr;
  for (const auto& r : results)
    if (!r.passed && !failed++) first = &r;
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"family", r.family}, {"n", r.n}, {"check", r.check}, {"passed", r.passed},
                             {"detail", r.detail}});
    j["failed"] = failed;
    j["passed"] = failed == 0;
    out << j.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "family,n,check,status,detail\n";
    for (const auto& r : results)
      out << r.family << ',' << r.n << ',' << r.check << ',' << (r.passed ? "pass" : "fail") << ",\"" << r.detail
          << "\"\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.family << " n=" << r.n << ' ' << r.check;
      if (!r.passed) out << " -- " << r.detail;
      out << '\n';
    }
    out << "verify: " << results.size() << " checks, " << failed << " failed\n";
  }
  if (first)
    err << "first failure: " << first->family << " n=" << first->n << ' ' << first->check << ": " << first->detail
        << '\n';
  return failed ? kMismatch : kPass;
}

// ---------------------------------------------------------------------------
// collide

struct CollisionGroup {
  FeatureVector vector;
  std::vector<TwoTreeClass> members;
};

struct CollisionSearch {
  int n = 0;
  std::size_t classes = 0;
  std::vector<CollisionGroup> groups;  // size >= 2 only, ordered by vector
};

/// Groups the 2-tree isomorphism classes on n vertices by oracle spectrum.
inline CollisionSearch find_collisions(int n) {
  CollisionSearch result{n, 0, {}};
  const auto classes = enumerate_two_tree_classes(n);
  result.classes = classes.size();
  std::map<std::vector<Count>, std::vector<TwoTreeClass>> by_vector;
  for (const auto& c : classes) by_vector[oracle_spectrum(c.graph).values()].push_back(c);
  for (auto& [v, members] : by_vector)
    if (members.size() >= 2) result.groups.push_back({FeatureVector(v), std::move(members)});
  return result;
}

inline int cmd_collide(const RunConfig& cfg, std::ostream& out) {
  if (cfg.ns.empty()) throw UsageError("--n: required");
  std::vector<CollisionSearch> searches;
  for (int n : cfg.ns) {
    if (n < 3 || n > kMaxEnumeratedTwoTree)
      throw UsageError("--n: collide supports 3.." + std::to_string(kMaxEnumeratedTwoTree) + " (got " +
                       std::to_string(n) + ")");
    searches.push_back(find_collisions(n));
  }
  auto degrees_text = [](const std::vector<int>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
  };
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : searches) {
      nlohmann::ordered_json j;
      j["n"] = s.n;
      j["classes"] = s.classes;
      j["groups"] = nlohmann::ordered_json::array();
      for (const auto& g : s.groups) {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (const auto& m : g.members)
          members.push_back({{"sequence", format_two_tree_seq(m.seq)}, {"degree_sequence", degree_sequence(m.graph)}});
        j["groups"].push_back({{"vector", g.vector.decimal()}, {"members", members}});
      }
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "n,group,vector,sequence,degree_sequence\n";
    for (const auto& s : searches)
      for (std::size_t i = 0; i < s.groups.size(); ++i) {
        std::ostringstream v;
        v << s.groups[i].vector;
        for (const auto& m : s.groups[i].members)
          out << s.n << ',' << i + 1 << ",\"" << v.str() << "\"," << format_two_tree_seq(m.seq) << ",\""
              << degrees_text(degree_sequence(m.graph)) << "\"\n";
      }
  } else {
    for (const auto& s : searches) {
      out << "collide n=" << s.n << ": " << s.classes << " isomorphism classes, " << s.groups.size()
          << " collision group(s)\n";
      for (std::size_t i = 0; i < s.groups.size(); ++i) {
        out << "group " << i + 1 << ": " << s.groups[i].vector << '\n';
        for (const auto& m : s.groups[i].members)
          out << "  " << format_two_tree_seq(m.seq) << "  degrees " << degrees_text(degree_sequence(m.graph)) << '\n';
      }
    }
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// oeis

/// Reference prefixes for comparison; no network access involved.
inline const std::vector<long>& oeis_reference(const std::string& id) {
  static const std::map<std::string, std::vector<long>> refs{
      {"A390130", {1, 5, 19, 61, 180, 500, 1335, 3459}},
      {"A390131", {1, 6, 29, 114, 410, 1366, 4341, 13264}},
      // columns r = 1 (F_{m+2}) and r = 2 (3 * 2^{m-2}) of T(m, r), m = 2..9
      {"A390491/r1", {3, 5, 8, 13, 21, 34, 55, 89}},
      {"A390491/r2", {3, 6, 12, 24, 48, 96, 192, 384}},
  };
  auto it = refs.find(id);
  if (it == refs.end()) throw UsageError("unknown sequence id '" + id + "'");
  return it->second;
}

struct OeisSeries {
  std::string label;  // e.g. "A390130" or "A390491 r=3"
  int offset = 0;     // index of the first term (n or m)
  std::vector<Count> terms;
  std::optional<std::vector<long>> reference;
};

inline std::vector<OeisSeries> compute_oeis(const std::string& id, int count, KernelTables& tables) {
  if (count < 1) throw UsageError("--count: must be >= 1");
  std::vector<OeisSeries> out;
  if (id == "A390130" || id == "A390131") {
    const bool r4 = id == "A390130";
    OeisSeries s{id, r4 ? 6 : 8, {}, oeis_reference(id)};
    for (int i = 0; i < count; ++i)
      s.terms.push_back(r4 ? fan_r4_closed(s.offset + i, tables) : fan_r5_closed(s.offset + i, tables));
    out.push_back(std::move(s));
    return out;
  }
  if (id == "A390491") {
    for (int r = 1; r <= 4; ++r) {
      OeisSeries s{id + " r=" + std::to_string(r), 2, {}, std::nullopt};
      if (r <= 2) s.reference = oeis_reference("A390491/r" + std::to_string(r));
      for (int i = 0; i < count; ++i) s.terms.push_back(big_a(2 + i, r, tables));
      out.push_back(std::move(s));
    }
    return out;
  }
  throw UsageError("--id: unknown sequence '" + id + "' (expected A390130, A390131 or A390491)");
}

inline int cmd_oeis(const RunConfig& cfg, KernelTables& tables, std::ostream& out, std::ostream& err) {
  const auto series = compute_oeis(cfg.sequence_id, cfg.count, tables);
  bool all_match = true;
  std::vector<std::size_t> compared(series.size(), 0);
  std::vector<bool> matched(series.size(), true);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!series[i].reference) continue;
    const auto& ref = *series[i].reference;
    for (std::size_t t = 0; t < std::min(ref.size(), series[i].terms.size()); ++t) {
      ++compared[i];
      if (series[i].terms[t] != ref[t]) {
        matched[i] = false;
        err << series[i].label << ": term " << t << " computed " << series[i].terms[t] << " reference " << ref[t]
            << '\n';
      }
    }
    all_match = all_match && matched[i];
  }
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < series.size(); ++i) {
      nlohmann::ordered_json j;
      j["sequence"] = series[i].label;
      j["offset"] = series[i].offset;
      std::vector<std::string> terms;
      for (const auto& t : series[i].terms) terms.push_back(t.str());
      j["terms"] = terms;
      if (series[i].reference) {
        j["compared"] = compared[i];
        j["match"] = static_cast<bool>(matched[i]);
      }
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "sequence,index,value\n";
    for (const auto& s : series)
      for (std::size_t t = 0; t < s.terms.size(); ++t) out << s.label << ',' << s.offset + t << ',' << s.terms[t] << '\n';
  } else {
    for (std::size_t i = 0; i < series.size(); ++i) {
      out << series[i].label << " (from " << series[i].offset << "):";
      for (std::size_t t = 0; t < series[i].terms.size(); ++t) out << (t ? ", " : " ") << series[i].terms[t];
      out << '\n';
      if (series[i].reference)
        out << "  reference: " << compared[i] << " term(s) compared, " << (matched[i] ? "match" : "MISMATCH") << '\n';
    }
  }
  return all_match ? kPass : kMismatch;
}

// ---------------------------------------------------------------------------
// poly

struct PolyRow {
  std::string family;
  std::string graph;
  int n = 0;
  int k = 0;
  Count value;
  std::optional<Count> direct;
};

inline int cmd_poly(const RunConfig& cfg, KernelTables& tables, std::ostream& out, std::ostream& err) {
  const FamilySpec fam = parse_family(cfg.family);
  const auto ns = detail::resolve_ns(cfg, fam);
  if (cfg.ks.empty()) throw UsageError("--k: required");
  for (int k : cfg.ks)
    if (k < 0) throw UsageError("--k: must be >= 0 (got " + std::to_string(k) + ")");
  std::vector<PolyRow> rows;
  int status = kPass;
  for (int n : ns) {
    const TriangleGraph g = fam.graph(n);
    FeatureVector v;
    if (fam.family == Family::theta) {
      v = theta_spectrum(n, tables);
    } else if (fam.family == Family::fan) {
      v = fan_spectrum(n, tables);
    } else {
      detail::require_oracle_size(n);
      v = oracle_spectrum(g);
    }
    for (int k : cfg.ks) {
      PolyRow row{to_string(fam.family), fam.label(), n, k, eval_coloring_polynomial(v, k), std::nullopt};
      if (cfg.check) {
        try {
          row.direct = count_colorings(g, k, Constraint::bichromatic);
        } catch (const std::out_of_range& e) {
          throw UsageError(std::string("--check: ") + e.what());
        }
        if (*row.direct != row.value) {
          err << "mismatch: " << fam.label() << " n=" << n << " k=" << k << " polynomial " << row.value
              << " direct " << *row.direct << '\n';
          status = kMismatch;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  if (cfg.format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j{{"family", r.family}, {"graph", r.graph}, {"n", r.n}, {"k", r.k}, {"value", r.value.str()}};
      if (r.direct) j["direct"] = r.direct->str();
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "family,n,k,value,direct\n";
    for (const auto& r : rows)
      out << r.family << ',' << r.n << ',' << r.k << ',' << r.value << ',' << (r.direct ? r.direct->str() : "") << '\n';
  } else {
    for (const auto& r : rows) {
      out << r.family;
      if (r.graph != r.family) out << " graph=" << r.graph;
      out << " n=" << r.n << " k=" << r.k << " P=" << r.value;
      if (r.direct) out << " direct=" << *r.direct << (*r.direct == r.value ? " ok" : " MISMATCH");
      out << '\n';
    }
  }
  return status;
}

}  // namespace bichrom::cli
