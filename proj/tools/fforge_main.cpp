// fforge: Fiedler vectors of trees, the FED property, rose-tree thresholds
// and the exhaustive free-tree census.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fforge/census.hpp"
#include "fforge/errors.hpp"

namespace {

using fforge::census::Config;
using fforge::census::IntRange;
using fforge::census::OutputFormat;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyMismatch = 3;

// "A..B" or a single "A".
IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw fforge::BadParam("empty range " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw fforge::BadParam("cannot parse range: " + text);
  } catch (const std::out_of_range&) {
    throw fforge::BadParam("range out of bounds: " + text);
  }
}

void emit(const Config& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw fforge::IOError("cannot write " + cfg.out_path);
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiedler-vector analysis of trees and the FED census"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may come after the subcommand

  Config cfg;
  std::string format = "csv";
  std::string policy = "projection";
  app.add_option("--format", format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");
  app.add_option("--tol-zero", cfg.tol.zero, "relative zero/tie threshold");
  app.add_option("--tol-mult", cfg.tol.mult, "eigenvalue multiplicity width");

  auto* analyze = app.add_subcommand("analyze", "full Fiedler report for an edge-list file");
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "edge-list file")->required();

  auto* rose_cmd = app.add_subcommand("rose", "numeric/analytic sweep over R(s,t,p)");
  std::string rs = "3..6", rt = "3..6", rp = "0..10";
  rose_cmd->add_option("--s", rs, "s range A..B");
  rose_cmd->add_option("--t", rt, "t range A..B");
  rose_cmd->add_option("--p", rp, "p range A..B");

  auto* threshold = app.add_subcommand("threshold", "exact FED thresholds f(s,s)");
  std::string ts = "3..10";
  threshold->add_option("--s", ts, "s range A..B");
  threshold->add_option("--empirical-max-n", cfg.empirical_max_n,
                        "largest tree order for the eigensolver flip column");

  auto* census_cmd = app.add_subcommand("census", "FED census over all free trees on n vertices");
  int census_n = 0;
  census_cmd->add_option("--n", census_n, "vertex count (4..24)")->required();
  census_cmd->add_option("--shards", cfg.shards, "deterministic work partitions");
  census_cmd->add_option("--policy", policy, "degenerate eigenspace policy")
      ->check(CLI::IsMember({"strict", "projection"}));
  bool verify = false, list_violators = false;
  census_cmd->add_flag("--verify", verify, "compare against the built-in reference table");
  census_cmd->add_flag("--list-violators", list_violators, "include canonical codes of violators");
  std::string dump_sequences;
  census_cmd->add_option("--dump-sequences", dump_sequences,
                         "also write every enumerated level sequence to this file");

  auto* conjecture = app.add_subcommand("conjecture", "grow/shrink probes at the extrema");
  int n_max = 10;
  conjecture->add_option("--n-max", n_max, "largest vertex count (<= 14)");

  auto* suptest = app.add_subcommand("suptest", "empirical flip points for t > s");
  int sup_s = 3, sup_tmax = 10, sup_probe = 40;
  suptest->add_option("--s", sup_s, "fixed s (>= 3)");
  suptest->add_option("--t-max", sup_tmax, "largest t");
  suptest->add_option("--p-probe", sup_probe, "largest probed p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;  // --help exits 0, anything else is usage
  }

  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.policy = policy == "strict" ? fforge::DegeneratePolicy::Strict
                                  : fforge::DegeneratePolicy::Projection;
  cfg.verify = verify;
  cfg.list_violators = list_violators;

  const bool json = cfg.format == OutputFormat::Json;
  try {
    if (*analyze) {
      const fforge::FiedlerReport rep = fforge::census::analyze_file(analyze_path, cfg);
      emit(cfg, json ? fforge::census::to_json(rep) : fforge::census::to_text(rep));
    } else if (*rose_cmd) {
      const auto rows =
          fforge::census::run_rose_sweep(parse_range(rs), parse_range(rt), parse_range(rp), cfg);
      emit(cfg, json ? to_json(rows) : to_csv(rows));
    } else if (*threshold) {
      const auto rows = fforge::census::run_threshold_table(parse_range(ts), cfg);
      emit(cfg, json ? to_json(rows) : to_csv(rows));
    } else if (*census_cmd) {
      if (!dump_sequences.empty()) {
        std::ofstream dump(dump_sequences);
        if (!dump) throw fforge::IOError("cannot write " + dump_sequences);
        fforge::enumerate::write_level_sequences(census_n, dump);
      }
      const auto row = fforge::census::run_census(census_n, cfg);
      emit(cfg, json ? to_json(row, cfg.list_violators) : to_csv(row, cfg.list_violators));
      if (cfg.verify) {
        const auto ref = fforge::census::reference_census(census_n);
        if (!ref) {
          std::cerr << "no reference values for n=" << census_n << " (11..20)\n";
          return kExitUsage;
        }
        if (ref->trees != row.trees || ref->violations != row.violations) {
          std::cerr << "verify mismatch at n=" << census_n << ": got " << row.trees << "/"
                    << row.violations << ", reference " << ref->trees << "/"
                    << ref->violations << "\n";
          return kExitVerifyMismatch;
        }
        std::cerr << "verify ok: n=" << census_n << " matches the reference table\n";
      }
    } else if (*conjecture) {
      const auto report = fforge::census::run_conjecture_growth(n_max, cfg);
      emit(cfg, json ? to_json(report) : to_csv(report));
    } else if (*suptest) {
      const auto report = fforge::census::run_suptest(sup_s, sup_tmax, sup_probe, cfg);
      emit(cfg, json ? to_json(report) : to_csv(report));
    }
  } catch (const fforge::ConvergenceFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fforge::NoRoot& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fforge::StructureViolation& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
