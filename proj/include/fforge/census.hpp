#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fforge/enumerate.hpp"
#include "fforge/rose.hpp"
#include "fforge/spectral.hpp"

namespace fforge::census {

enum class OutputFormat { Csv, Json };

struct Config {
  DegeneratePolicy policy = DegeneratePolicy::Projection;
  int shards = 1;
  Tolerances tol;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;          // empty = stdout
  bool list_violators = false;
  bool verify = false;
  int threads = 0;               // 0 = FFORGE_THREADS env or hardware default
  int empirical_max_n = 900;     // skip eigensolver flips beyond this order
};

/// Worker cap: explicit config value, else FFORGE_THREADS, else hardware.
int effective_threads(const Config& cfg);

struct ViolatorInfo {
  std::string code;
  int multiplicity = 1;
  FedReason reason = FedReason::OK;
};

struct CensusRow {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t violations = 0;
  DegeneratePolicy policy = DegeneratePolicy::Projection;
  std::vector<ViolatorInfo> violators;  // sorted by canonical code

  /// violations/trees in percent, rounded half-up to two decimals
  /// (display only; the counts are the source of truth).
  std::string ratio_percent() const;
};

/// Enumerates every free tree on n vertices (4 <= n <= 24), runs the FED
/// check on each and aggregates deterministically: identical output for any
/// shard count.
CensusRow run_census(int n, const Config& cfg);

struct IntRange {
  int lo = 0;
  int hi = 0;  // inclusive
};

struct RoseSweepRow {
  int s = 0, t = 0, p = 0;
  double alpha_numeric = 0.0;
  double alpha_analytic = 0.0;
  bool fed_numeric = false;
  rose::FedPrediction fed_predicted = rose::FedPrediction::Indeterminate;
  bool agreement = true;  // predicted verdicts must match the eigensolver
};

std::vector<RoseSweepRow> run_rose_sweep(IntRange s_range, IntRange t_range,
                                         IntRange p_range, const Config& cfg);

struct ThresholdRow {
  int s = 0;
  double r_s = 0.0;
  double f_ss = 0.0;
  int floor_f = 0;         // last FED-true p according to the formula
  int empirical_flip = -1; // last FED-true p by eigensolver, -1 when skipped
  double asymptotic_ratio = 0.0;
};

std::vector<ThresholdRow> run_threshold_table(IntRange s_range, const Config& cfg);

struct ConjectureCase {
  std::string code;        // canonical code of the starting tree
  int vertex = 0;          // where it was grown or shrunk
  std::string grown_code;  // canonical code of the modified tree
};

struct ConjectureReport {
  int n_max = 0;
  std::uint64_t trees_checked = 0;
  std::uint64_t degenerate_skipped = 0;
  std::uint64_t grow_checked = 0;
  std::uint64_t shrink_checked = 0;
  std::vector<ConjectureCase> grow_counterexamples;    // FED lost after growing at m/M
  std::vector<ConjectureCase> shrink_counterexamples;  // FED gained after deleting m/M
};

/// Probes both directions of the growth conjecture over every enumerated
/// tree with simple second eigenvalue up to n_max (<= 14).
ConjectureReport run_conjecture_growth(int n_max, const Config& cfg);

struct SupTestRow {
  int t = 0;
  int flip = -1;        // last FED-true p (clamped at p_probe)
  bool censored = false;  // still true at p_probe
  double pair_bound = 0.0;  // f(t+2,t+2)
  bool within_bounds = false;
};

struct SupTestReport {
  int s = 0;
  int p_probe = 0;
  std::vector<SupTestRow> rows;
  int max_flip = -1;
  double stated_bound = 0.0;  // s(s+1)/2 - 2
  bool max_within_stated_bound = false;
};

/// Empirical flip points of R(s,t,p) for t in s+1..t_max, checked against
/// the pair bound f(t+2,t+2) and the conjectured constant s(s+1)/2 - 2.
SupTestReport run_suptest(int s, int t_max, int p_probe, const Config& cfg);

FiedlerReport analyze_file(const std::string& path, const Config& cfg);

// Rendering. CSV headers are fixed; reals carry 12 significant digits.
std::string to_csv(const CensusRow& row, bool with_violators);
std::string to_csv(const std::vector<RoseSweepRow>& rows);
std::string to_csv(const std::vector<ThresholdRow>& rows);
std::string to_csv(const ConjectureReport& report);
std::string to_csv(const SupTestReport& report);
std::string to_json(const CensusRow& row, bool with_violators);
std::string to_json(const std::vector<RoseSweepRow>& rows);
std::string to_json(const std::vector<ThresholdRow>& rows);
std::string to_json(const ConjectureReport& report);
std::string to_json(const SupTestReport& report);
std::string to_json(const FiedlerReport& report);
std::string to_text(const FiedlerReport& report);

/// Reference census values for n = 11..20; nullopt outside that range.
struct ReferenceCensus {
  std::uint64_t trees = 0;
  std::uint64_t violations = 0;
};
std::optional<ReferenceCensus> reference_census(int n);

}  // namespace fforge::census
