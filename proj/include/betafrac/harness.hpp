#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betafrac/corpus.hpp"

namespace betafrac {

/// Grid configuration for a verification run. Mirrors the JSON config file
/// keys: betas, intervals, degrees, tol, checks, output_path, parallel.
struct RunConfig {
  std::vector<double> betas;
  std::vector<Interval> intervals;
  std::vector<int> degrees;
  double tol = 1e-8;
  std::vector<std::string> checks;
  std::string output_path = "report.json";
  int parallel = 1;
};

/// One grid-cell result. Field names match the emitted report schema.
struct RunRecord {
  std::string check;
  std::string function;  // "f" or "f|g" for paired checks
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::optional<int> n;
  double lhs = 0.0;
  std::optional<double> mid;
  double rhs = 0.0;
  double margin_left = 0.0;
  double margin_right = 0.0;
  std::string verdict;  // holds | violated | hypothesis_not_met | error
  long evals = 0;
  double ms = 0.0;
};

struct RunSummary {
  long holds = 0;
  long violated = 0;
  long hypothesis_not_met = 0;
  long error = 0;
};

struct RunReport {
  RunConfig config;
  std::vector<RunRecord> records;
  RunSummary summary;
};

/// Names accepted in RunConfig::checks.
const std::vector<std::string>& registered_checks();

/// Default grid: betas {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}, intervals
/// {[0,1], [0.5,2], [1,3]}, degrees {0,1,2,4,6}, tol 1e-8, all checks.
RunConfig default_config();

/// Runs every enabled check over the full (beta, function, interval, degree)
/// grid. Records are sorted by (check, function, beta, a, b, n) so the output
/// is identical for any worker count. Per-cell failures become verdict
/// "error" records; only config validation or corpus-tag mismatch aborts.
RunReport run_suite(const RunConfig& cfg, const std::vector<CorpusEntry>& corpus);

std::string report_to_json(const RunReport& r);
std::string report_to_csv(const RunReport& r);

/// Parses a JSON report produced by report_to_json.
RunReport parse_report_json(const std::string& text);

/// Writes the report in "json" or "csv" format. Throws std::runtime_error on
/// I/O failure.
void emit_report(const RunReport& r, const std::string& format,
                 const std::string& path);

/// Reads a JSON config file (same keys as RunConfig). Missing keys keep the
/// defaults passed in `base`.
RunConfig load_config_file(const std::string& path, RunConfig base);

}  // namespace betafrac
