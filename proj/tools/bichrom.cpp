#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bichrom/commands.hpp"

namespace {

using bichrom::cli::RunConfig;

struct Flags {
  std::string family = "theta";
  std::string n;
  std::string n_range;
  std::string k;
  std::string method = "closed";
  std::string format = "text";
  std::string out;
  std::string families = "theta,fan";
  std::string id;
  int count = 8;
  bool classical = false, check = false, timing = false, closed_only = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "vertex count, list or range (5, 3..10, 4,6,8)");
  cmd->add_option("--n-range", f.n_range, "inclusive vertex-count range A..B");
  cmd->add_option("--format", f.format, "json | csv | text")->default_str("text");
  cmd->add_option("--out", f.out, "write output to PATH instead of stdout");
}

RunConfig to_config(const Flags& f) {
  RunConfig cfg;
  cfg.family = f.family;
  if (!f.n.empty()) cfg.ns = bichrom::cli::parse_int_list(f.n, "--n");
  if (!f.n_range.empty()) {
    auto more = bichrom::cli::parse_int_list(f.n_range, "--n-range");
    cfg.ns.insert(cfg.ns.end(), more.begin(), more.end());
  }
  if (!f.k.empty()) cfg.ks = bichrom::cli::parse_int_list(f.k, "--k");
  cfg.method = bichrom::cli::parse_method(f.method);
  cfg.format = bichrom::cli::parse_format(f.format);
  cfg.classical = f.classical;
  cfg.check = f.check;
  cfg.timing = f.timing;
  cfg.closed_only = f.closed_only;
  cfg.families.clear();
  std::stringstream ss(f.families);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) cfg.families.push_back(item);
  cfg.sequence_id = f.id;
  cfg.count = f.count;
  return cfg;
}

constexpr const char* kSeqHelp =
    "theta | fan | seq:<n;u-v;...>\n"
    "  two-tree sequence grammar: n followed by n-3 attachments separated by ';'.\n"
    "  Vertices 0,1,2 form the first triangle; attachment i (1-based) adds vertex i+2\n"
    "  joined to both ends of the existing edge u-v (0-based, either order).\n"
    "  Examples: 5;0-1;0-1 (theta_5), 5;0-1;0-3 (fan_5)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic feature vectors of 2-trees under the bichromatic triangle constraint"};
  app.require_subcommand(1);
  Flags f;

  auto* spectrum = app.add_subcommand("spectrum", "compute feature vectors by closed form and/or oracle");
  spectrum->add_option("--family", f.family, kSeqHelp)->default_str("theta");
  spectrum->add_option("--method", f.method, "closed | oracle | both")->default_str("closed");
  spectrum->add_flag("--classical", f.classical, "classical proper-coloring baseline instead");
  spectrum->add_flag("--timing", f.timing, "include wall time per report");
  add_common(spectrum, f);

  auto* verify = app.add_subcommand("verify", "closed forms vs oracle and identity cross-checks");
  verify->add_option("--families", f.families, "comma list of theta,fan")->default_str("theta,fan");
  verify->add_flag("--closed-only", f.closed_only, "skip the oracle; closed-form identities only");
  add_common(verify, f);

  auto* collide = app.add_subcommand("collide", "non-isomorphic 2-trees sharing a feature vector");
  add_common(collide, f);

  auto* oeis = app.add_subcommand("oeis", "emit and check A390130 / A390131 / A390491 terms");
  oeis->add_option("id", f.id, "sequence id")->required();
  oeis->add_option("--count", f.count, "number of terms (rows for A390491)")->default_str("8");
  oeis->add_option("--format", f.format, "json | csv | text")->default_str("text");
  oeis->add_option("--out", f.out, "write output to PATH instead of stdout");

  auto* poly = app.add_subcommand("poly", "evaluate the coloring polynomial P_G(k)");
  poly->add_option("--family", f.family, kSeqHelp)->default_str("theta");
  poly->add_option("--k", f.k, "palette sizes, list or range")->required();
  poly->add_flag("--check", f.check, "also count colorings directly (small n)");
  add_common(poly, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bichrom::cli::kUsage;
  }

  try {
    const RunConfig cfg = to_config(f);
    std::unique_ptr<std::ofstream> file;
    if (!f.out.empty()) {
      file = std::make_unique<std::ofstream>(f.out);
      if (!*file) throw bichrom::cli::UsageError("--out: cannot open '" + f.out + "'");
    }
    std::ostream& out = file ? *file : std::cout;
    bichrom::KernelTables tables;
    if (spectrum->parsed()) return bichrom::cli::cmd_spectrum(cfg, tables, out, std::cerr);
    if (verify->parsed()) return bichrom::cli::cmd_verify(cfg, tables, out, std::cerr);
    if (collide->parsed()) return bichrom::cli::cmd_collide(cfg, out);
    if (oeis->parsed()) return bichrom::cli::cmd_oeis(cfg, tables, out, std::cerr);
    if (poly->parsed()) return bichrom::cli::cmd_poly(cfg, tables, out, std::cerr);
  } catch (const bichrom::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bichrom::cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bichrom::cli::kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bichrom::cli::kUsage;
  }
  return bichrom::cli::kUsage;
}
