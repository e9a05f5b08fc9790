#pragma once

#include <string>
#include <vector>

#include "gft/grid.hpp"
#include "gft/theorems.hpp"
#include "gft/types.hpp"

namespace gft {

enum class ScanKind { Thm1, Thm2, Corollary };
enum class SignConvention { PlusD, MinusD };
enum class OutputFormat { Csv, Json };

const char* scan_kind_name(ScanKind k);        // thm1 / thm2 / corollary
const char* convention_name(SignConvention c); // plusD / minusD
const char* format_name(OutputFormat f);       // csv / json

// All parsers throw std::invalid_argument on unknown tokens.
ScanKind parse_scan_kind(const std::string& s);
SignConvention parse_convention(const std::string& s);
OutputFormat parse_format(const std::string& s);
CoefficientBundle parse_bundle(const std::string& s);

// Closed interval sampled as lo + i*step; the count is llround((hi-lo)/step)
// so binary-unrepresentable steps (0.05, 0.25) still hit the intended
// endpoint, and values up to step*1e-9 past hi are kept.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};

std::vector<double> enumerate_range(const Range& r);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct ScanConfig {
  ScanKind kind = ScanKind::Thm2;
  IntRange n{1, 4};
  Range alpha{0.0, 10.0, 0.25};
  Range C{-1.0, 1.0, 0.05}; // thm2/corollary only
  Range D{-1.0, 1.0, 0.05};
  double r_max = 0.999;
  DiskGrid grid{};
  SignConvention convention = SignConvention::PlusD;
  CoefficientBundle bundle = CoefficientBundle::Stated;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;
};

// Shipped grids: thm2 as the struct defaults above; thm1 n 0..8,
// alpha [-0.75, 15] step 0.25 (no C/D); corollary n 1..4, alpha [0.25, 10]
// step 0.25 (the shift needs alpha > 0). C and D share one enumeration and
// the pair filter keeps -1 < D < C <= 1; the degenerate D = -1 edge stays
// reachable through single checks, never through scans.
ScanConfig default_config(ScanKind kind);

// One parameter cell. thm1 rows have no (C, D) and no nonvanishing clause;
// has_params distinguishes them (CSV: empty cells). C and D always hold the
// configured values; under the minusD convention the empirical target uses
// the mirrored image built from (C, -D).
struct ScanRow {
  int n = 0;
  double alpha = 0.0;
  bool has_params = false;
  double C = 0.0;
  double D = 0.0;
  bool condition_holds = false;
  bool empirical_verdict = false;
  double worst_margin = 0.0;
  double witness_re = 0.0;
  double witness_im = 0.0;
  bool nonvanishing_ok = false;
  std::vector<std::string> failed_clauses;
};

struct ScanSummary {
  long rows = 0;
  long condition_holds = 0;
  long empirical_true = 0;
  long soundness_violations = 0; // condition_holds && !empirical_verdict
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanRow> rows;
  ScanSummary summary;
};

// Runs the sweep: blocks of rows sharing (n, alpha) are distributed over
// threads (capped by GFT_THREADS) and written to preassigned slots, so the
// row order and every byte of the rendered output are independent of the
// schedule. Throws std::invalid_argument on an empty grid or invalid config.
ScanResult run_scan(const ScanConfig& config);

// GFT_THREADS when set to a positive integer, else hardware concurrency.
int thread_budget();

std::string render_csv(const ScanResult& result);
std::string render_json(const ScanResult& result);

// Renders per config.format and writes atomically (temp file + rename); no
// partial file survives a failure. Throws std::runtime_error on I/O errors.
void write_output(const ScanResult& result, const std::string& path);

// Applies fields of a JSON config document onto cfg (flags are applied on
// top by the CLI). Unknown keys are config violations.
void apply_config_json(ScanConfig& cfg, const std::string& json_text);

// The "kind" field of a JSON config document, or "" when absent; used to
// pick the default config before applying the document.
std::string peek_config_kind(const std::string& json_text);

// Tidy projection of one or more JSON scan files:
// sign_convention,kind,n,alpha,C,D,metric,value with one row per quadruple
// per metric (condition_holds, empirical_verdict, worst_margin), grouped
// into blocks by sign_convention. Throws std::invalid_argument on malformed
// input.
std::string render_report(const std::vector<std::string>& scan_json_texts);

} // namespace gft
