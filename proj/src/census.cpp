#include "fforge/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "fforge/errors.hpp"
#include "fforge/tree_io.hpp"

namespace fforge::census {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int effective_threads(const Config& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("FFORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string CensusRow::ratio_percent() const {
  // Half-up rounding of violations/trees*100 at two decimals, in integers.
  const std::uint64_t scaled = trees == 0 ? 0 : (violations * 20000 + trees) / (2 * trees);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu.%02llu",
                static_cast<unsigned long long>(scaled / 100),
                static_cast<unsigned long long>(scaled % 100));
  return buf;
}

CensusRow run_census(int n, const Config& cfg) {
  if (n < 4 || n > 24) throw BadParam("census supports 4 <= n <= 24");
  if (cfg.shards < 1) throw BadParam("shard count must be >= 1");

  struct Partial {
    std::uint64_t trees = 0;
    std::uint64_t violations = 0;
    std::vector<ViolatorInfo> violators;
  };
  std::vector<Partial> partials(cfg.shards);

  auto run_shard = [&](int shard) {
    Partial& out = partials[shard];
    enumerate::FreeTreeShardGen gen(n, {shard, cfg.shards});
    while (const enumerate::LevelSequence* seq = gen.next()) {
      const Tree tree = enumerate::decode(*seq);
      const FiedlerReport rep = fiedler(tree, cfg.policy, cfg.tol);
      ++out.trees;
      if (!rep.fed.satisfied) {
        ++out.violations;
        out.violators.push_back({tree.canonical_code(), rep.multiplicity, rep.fed.reason});
      }
    }
  };

  const int workers = std::min(cfg.shards, effective_threads(cfg));
  if (workers <= 1) {
    for (int shard = 0; shard < cfg.shards; ++shard) run_shard(shard);
  } else {
    std::atomic<int> next_shard{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int shard = next_shard.fetch_add(1); shard < cfg.shards;
             shard = next_shard.fetch_add(1)) {
          run_shard(shard);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  CensusRow row;
  row.n = n;
  row.policy = cfg.policy;
  for (auto& part : partials) {
    row.trees += part.trees;
    row.violations += part.violations;
    row.violators.insert(row.violators.end(),
                         std::make_move_iterator(part.violators.begin()),
                         std::make_move_iterator(part.violators.end()));
  }
  // Sorted merge erases any trace of scheduling or shard layout.
  std::sort(row.violators.begin(), row.violators.end(),
            [](const ViolatorInfo& a, const ViolatorInfo& b) { return a.code < b.code; });
  return row;
}

std::vector<RoseSweepRow> run_rose_sweep(IntRange s_range, IntRange t_range,
                                         IntRange p_range, const Config& cfg) {
  if (s_range.lo < 3 || t_range.lo < 3) throw BadParam("rose sweep needs s,t >= 3");
  if (p_range.lo < 0) throw BadParam("rose sweep needs p >= 0");
  std::vector<RoseSweepRow> rows;
  for (int s = s_range.lo; s <= s_range.hi; ++s) {
    for (int t = t_range.lo; t <= t_range.hi; ++t) {
      for (int p = p_range.lo; p <= p_range.hi; ++p) {
        RoseSweepRow row;
        row.s = s;
        row.t = t;
        row.p = p;
        const Tree tree = build_rose({s, t, p});
        row.alpha_numeric = algebraic_connectivity(tree);
        const rose::RoseVerdict verdict = rose::predict_fed(s, t, p);
        row.alpha_analytic = verdict.alpha_analytic;
        row.fed_numeric = check_fed(tree, cfg.policy, cfg.tol).satisfied;
        row.fed_predicted = verdict.prediction;
        row.agreement =
            verdict.prediction == rose::FedPrediction::Indeterminate ||
            (verdict.prediction == rose::FedPrediction::FedTrue) == row.fed_numeric;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

namespace {

// Last p in [0, p_hi] for which FED holds for R(s,t,p), assuming a single
// true->false flip (the observed behavior; sweeps validate it elsewhere).
// Returns {flip, censored}: censored means still true at p_hi.
std::pair<int, bool> empirical_flip(int s, int t, int p_hi, const Config& cfg) {
  auto fed_at = [&](int p) {
    return check_fed(build_rose({s, t, p}), cfg.policy, cfg.tol).satisfied;
  };
  if (!fed_at(0)) return {-1, false};
  if (fed_at(p_hi)) return {p_hi, true};
  int lo = 0, hi = p_hi;  // fed(lo) true, fed(hi) false
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (fed_at(mid) ? lo : hi) = mid;
  }
  return {lo, false};
}

}  // namespace

std::vector<ThresholdRow> run_threshold_table(IntRange s_range, const Config& cfg) {
  if (s_range.lo < 3) throw BadParam("threshold table needs s >= 3");
  std::vector<ThresholdRow> rows;
  for (int s = s_range.lo; s <= s_range.hi; ++s) {
    ThresholdRow row;
    row.s = s;
    row.r_s = rose::branch_root(s);
    row.f_ss = rose::fed_threshold(s);
    row.floor_f = static_cast<int>(std::floor(row.f_ss));
    row.asymptotic_ratio = rose::asymptotic_ratio(s);
    const int p_hi = row.floor_f + 8;
    if (2 * s + 2 + p_hi <= cfg.empirical_max_n) {
      row.empirical_flip = empirical_flip(s, s, p_hi, cfg).first;
    }
    rows.push_back(row);
  }
  return rows;
}

ConjectureReport run_conjecture_growth(int n_max, const Config& cfg) {
  if (n_max < 2 || n_max > 14) throw BadParam("conjecture probe supports n_max <= 14");
  ConjectureReport report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    enumerate::FreeTreeGen gen(n);
    while (const enumerate::LevelSequence* seq = gen.next()) {
      const Tree tree = enumerate::decode(*seq);
      const FiedlerReport rep = fiedler(tree, cfg.policy, cfg.tol);
      if (rep.multiplicity != 1) {
        ++report.degenerate_skipped;
        continue;
      }
      ++report.trees_checked;
      if (rep.fed.satisfied) {
        // Direction 1: growing a pendant at either extremum must keep FED.
        for (int v : {rep.fed.m, rep.fed.M}) {
          ++report.grow_checked;
          const Tree grown = tree.add_pendant(v);
          if (!check_fed(grown, cfg.policy, cfg.tol).satisfied) {
            report.grow_counterexamples.push_back(
                {tree.canonical_code(), v, grown.canonical_code()});
          }
        }
      } else {
        // Direction 2: deleting an extremal leaf must keep FED false.
        // Extrema may be tied here, so probe every extremal leaf.
        std::vector<int> candidates = rep.argmin_set;
        candidates.insert(candidates.end(), rep.argmax_set.begin(), rep.argmax_set.end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        for (int v : candidates) {
          if (tree.degree(v) != 1 || n < 3) continue;
          ++report.shrink_checked;
          const Tree shrunk = tree.remove_leaf(v);
          if (check_fed(shrunk, cfg.policy, cfg.tol).satisfied) {
            report.shrink_counterexamples.push_back(
                {tree.canonical_code(), v, shrunk.canonical_code()});
          }
        }
      }
    }
  }
  return report;
}

SupTestReport run_suptest(int s, int t_max, int p_probe, const Config& cfg) {
  if (s < 3) throw BadParam("suptest needs s >= 3");
  if (t_max <= s) throw BadParam("suptest needs t_max > s");
  if (p_probe < 1) throw BadParam("suptest needs p_probe >= 1");
  SupTestReport report;
  report.s = s;
  report.p_probe = p_probe;
  report.stated_bound = s * (s + 1) / 2.0 - 2.0;
  const double lower = std::floor(rose::fed_threshold(s) - 1.0);
  for (int t = s + 1; t <= t_max; ++t) {
    SupTestRow row;
    row.t = t;
    row.pair_bound = rose::fed_threshold(t + 2);
    const auto [flip, censored] = empirical_flip(s, t, p_probe, cfg);
    row.flip = flip;
    row.censored = censored;
    row.within_bounds = !censored && flip >= lower && flip <= row.pair_bound;
    report.max_flip = std::max(report.max_flip, flip);
    report.rows.push_back(row);
  }
  report.max_within_stated_bound = report.max_flip <= report.stated_bound;
  return report;
}

FiedlerReport analyze_file(const std::string& path, const Config& cfg) {
  return fiedler(read_edge_list_file(path), cfg.policy, cfg.tol);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string to_csv(const CensusRow& row, bool with_violators) {
  std::ostringstream out;
  out << "n,trees,violations,ratio_percent,policy";
  if (with_violators) out << ",violator_codes";
  out << "\n";
  out << row.n << "," << row.trees << "," << row.violations << ","
      << row.ratio_percent() << "," << to_string(row.policy);
  if (with_violators) {
    out << ",";
    for (std::size_t i = 0; i < row.violators.size(); ++i) {
      if (i) out << ";";
      out << row.violators[i].code;
    }
  }
  out << "\n";
  return out.str();
}

std::string to_csv(const std::vector<RoseSweepRow>& rows) {
  std::ostringstream out;
  out << "s,t,p,alpha_numeric,alpha_analytic,fed_numeric,fed_predicted,agreement\n";
  for (const auto& r : rows) {
    out << r.s << "," << r.t << "," << r.p << "," << fmt_real(r.alpha_numeric) << ","
        << fmt_real(r.alpha_analytic) << "," << bool_str(r.fed_numeric) << ","
        << rose::to_string(r.fed_predicted) << "," << bool_str(r.agreement) << "\n";
  }
  return out.str();
}

std::string to_csv(const std::vector<ThresholdRow>& rows) {
  std::ostringstream out;
  out << "s,r_s,f_ss,floor_f,empirical_flip,asymptotic_ratio\n";
  for (const auto& r : rows) {
    out << r.s << "," << fmt_real(r.r_s) << "," << fmt_real(r.f_ss) << "," << r.floor_f
        << "," << r.empirical_flip << "," << fmt_real(r.asymptotic_ratio) << "\n";
  }
  return out.str();
}

std::string to_csv(const ConjectureReport& report) {
  std::ostringstream out;
  out << "n_max,trees_checked,degenerate_skipped,grow_checked,shrink_checked,"
         "grow_counterexamples,shrink_counterexamples\n";
  out << report.n_max << "," << report.trees_checked << "," << report.degenerate_skipped
      << "," << report.grow_checked << "," << report.shrink_checked << ","
      << report.grow_counterexamples.size() << "," << report.shrink_counterexamples.size()
      << "\n";
  for (const auto& c : report.grow_counterexamples) {
    out << "# grow," << c.code << "," << c.vertex << "," << c.grown_code << "\n";
  }
  for (const auto& c : report.shrink_counterexamples) {
    out << "# shrink," << c.code << "," << c.vertex << "," << c.grown_code << "\n";
  }
  return out.str();
}

std::string to_csv(const SupTestReport& report) {
  std::ostringstream out;
  out << "t,empirical_flip,censored,pair_bound,within_bounds\n";
  for (const auto& r : report.rows) {
    out << r.t << "," << r.flip << "," << bool_str(r.censored) << ","
        << fmt_real(r.pair_bound) << "," << bool_str(r.within_bounds) << "\n";
  }
  return out.str();
}

namespace {

using nlohmann::json;

json violators_json(const CensusRow& row) {
  json arr = json::array();
  for (const auto& v : row.violators) {
    arr.push_back({{"code", v.code},
                   {"multiplicity", v.multiplicity},
                   {"reason", to_string(v.reason)}});
  }
  return arr;
}

}  // namespace

std::string to_json(const CensusRow& row, bool with_violators) {
  json j{{"n", row.n},
         {"trees", row.trees},
         {"violations", row.violations},
         {"ratio_percent", row.ratio_percent()},
         {"policy", to_string(row.policy)}};
  if (with_violators) j["violators"] = violators_json(row);
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<RoseSweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"s", r.s},
                   {"t", r.t},
                   {"p", r.p},
                   {"alpha_numeric", r.alpha_numeric},
                   {"alpha_analytic", r.alpha_analytic},
                   {"fed_numeric", r.fed_numeric},
                   {"fed_predicted", rose::to_string(r.fed_predicted)},
                   {"agreement", r.agreement}});
  }
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<ThresholdRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"s", r.s},
                   {"r_s", r.r_s},
                   {"f_ss", r.f_ss},
                   {"floor_f", r.floor_f},
                   {"empirical_flip", r.empirical_flip},
                   {"asymptotic_ratio", r.asymptotic_ratio}});
  }
  return arr.dump(2) + "\n";
}

std::string to_json(const ConjectureReport& report) {
  auto cases = [](const std::vector<ConjectureCase>& list) {
    json arr = json::array();
    for (const auto& c : list) {
      arr.push_back({{"code", c.code}, {"vertex", c.vertex}, {"modified_code", c.grown_code}});
    }
    return arr;
  };
  json j{{"n_max", report.n_max},
         {"trees_checked", report.trees_checked},
         {"degenerate_skipped", report.degenerate_skipped},
         {"grow_checked", report.grow_checked},
         {"shrink_checked", report.shrink_checked},
         {"grow_counterexamples", cases(report.grow_counterexamples)},
         {"shrink_counterexamples", cases(report.shrink_counterexamples)}};
  return j.dump(2) + "\n";
}

std::string to_json(const SupTestReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"t", r.t},
                    {"empirical_flip", r.flip},
                    {"censored", r.censored},
                    {"pair_bound", r.pair_bound},
                    {"within_bounds", r.within_bounds}});
  }
  json j{{"s", report.s},
         {"p_probe", report.p_probe},
         {"max_flip", report.max_flip},
         {"stated_bound", report.stated_bound},
         {"max_within_stated_bound", report.max_within_stated_bound},
         {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string to_json(const FiedlerReport& report) {
  json j{{"lambda2", report.lambda2},
         {"multiplicity", report.multiplicity},
         {"vector", report.vector},
         {"tree_type", to_string(report.tree_type)},
         {"zero_set", report.zero_set},
         {"argmin_set", report.argmin_set},
         {"argmax_set", report.argmax_set},
         {"fed",
          {{"satisfied", report.fed.satisfied},
           {"m", report.fed.m},
           {"M", report.fed.M},
           {"extrema_distance", report.fed.extrema_distance},
           {"diameter", report.fed.diameter},
           {"reason", to_string(report.fed.reason)}}}};
  if (report.tree_type == TreeType::TypeI) {
    j["characteristic_vertex"] = report.characteristic.vertex;
  } else if (report.tree_type == TreeType::TypeII) {
    j["characteristic_edge"] = {report.characteristic.edge.first,
                                report.characteristic.edge.second};
  }
  return j.dump(2) + "\n";
}

std::string to_text(const FiedlerReport& report) {
  std::ostringstream out;
  out << "lambda2            " << fmt_real(report.lambda2) << "\n";
  out << "multiplicity       " << report.multiplicity << "\n";
  out << "tree type          " << to_string(report.tree_type) << "\n";
  if (report.tree_type == TreeType::TypeI) {
    out << "characteristic     vertex " << report.characteristic.vertex << "\n";
  } else if (report.tree_type == TreeType::TypeII) {
    out << "characteristic     edge (" << report.characteristic.edge.first << ","
        << report.characteristic.edge.second << ")\n";
  }
  out << "fiedler vector    ";
  for (double x : report.vector) out << " " << fmt_real(x);
  out << "\n";
  out << "argmin set        ";
  for (int v : report.argmin_set) out << " " << v;
  out << "\n";
  out << "argmax set        ";
  for (int v : report.argmax_set) out << " " << v;
  out << "\n";
  out << "fed satisfied      " << bool_str(report.fed.satisfied) << "\n";
  out << "fed reason         " << to_string(report.fed.reason) << "\n";
  out << "extrema (m, M)     (" << report.fed.m << ", " << report.fed.M << ")\n";
  out << "extrema distance   " << report.fed.extrema_distance << "\n";
  out << "diameter           " << report.fed.diameter << "\n";
  return out.str();
}

std::optional<ReferenceCensus> reference_census(int n) {
  static constexpr struct {
    int n;
    std::uint64_t trees, violations;
  } kTable[] = {
      {11, 235, 0},      {12, 551, 1},      {13, 1301, 5},     {14, 3159, 21},
      {15, 7741, 72},    {16, 19320, 240},  {17, 48629, 757},  {18, 123867, 2331},
      {19, 317955, 7012},{20, 823065, 20807},
  };
  for (const auto& row : kTable) {
    if (row.n == n) return ReferenceCensus{row.trees, row.violations};
  }
  return std::nullopt;
}

}  // namespace fforge::census
