#include "gft/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "gft/domains.hpp"
#include "gft/functional.hpp"
#include "gft/roots.hpp"
#include "gft/subordination.hpp"

namespace gft {

namespace {

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof(esc), "\\u%04x", ch);
          out += esc;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

bool clause_failed(const Clause& cl) { return cl.applicable && !cl.satisfied; }

} // namespace

const char* scan_kind_name(ScanKind k) {
  switch (k) {
    case ScanKind::Thm1: return "thm1";
    case ScanKind::Thm2: return "thm2";
    default: return "corollary";
  }
}

const char* convention_name(SignConvention c) {
  return c == SignConvention::PlusD ? "plusD" : "minusD";
}

const char* format_name(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

ScanKind parse_scan_kind(const std::string& s) {
  if (s == "thm1") return ScanKind::Thm1;
  if (s == "thm2") return ScanKind::Thm2;
  if (s == "corollary") return ScanKind::Corollary;
  throw std::invalid_argument("unknown scan kind: " + s);
}

SignConvention parse_convention(const std::string& s) {
  if (s == "plusD") return SignConvention::PlusD;
  if (s == "minusD") return SignConvention::MinusD;
  throw std::invalid_argument("unknown sign convention: " + s);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + s);
}

CoefficientBundle parse_bundle(const std::string& s) {
  if (s == "stated") return CoefficientBundle::Stated;
  if (s == "derived") return CoefficientBundle::Derived;
  throw std::invalid_argument("unknown coefficient bundle: " + s);
}

std::vector<double> enumerate_range(const Range& r) {
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi)) || !(r.step > 0.0))
    throw std::invalid_argument("range requires finite bounds and step > 0");
  if (r.hi < r.lo)
    throw std::invalid_argument("range requires hi >= lo");
  const long long count = std::llround((r.hi - r.lo) / r.step);
  std::vector<double> out;
  out.reserve(std::size_t(count) + 1);
  for (long long i = 0; i <= count; ++i) {
    const double v = r.lo + double(i) * r.step;
    if (v > r.hi + r.step * 1e-9) break;
    out.push_back(v);
  }
  return out;
}

ScanConfig default_config(ScanKind kind) {
  ScanConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ScanKind::Thm1:
      cfg.n = {0, 8};
      cfg.alpha = {-0.75, 15.0, 0.25};
      break;
    case ScanKind::Thm2:
      break; // struct defaults
    case ScanKind::Corollary:
      cfg.alpha = {0.25, 10.0, 0.25};
      break;
  }
  return cfg;
}

int thread_budget() {
  if (const char* env = std::getenv("GFT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && end && *end == '\0' && v >= 1 && v <= 1024)
      return int(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

ScanResult run_scan(const ScanConfig& config) {
  validate(config.grid);
  if (!(config.r_max > 0.0 && config.r_max < 1.0))
    throw std::invalid_argument("r_max must lie in (0, 1)");
  if (config.n.lo > config.n.hi)
    throw std::invalid_argument("n range is empty");
  if (config.n.lo < 0)
    throw std::invalid_argument("n must be >= 0");

  const std::vector<double> alphas = enumerate_range(config.alpha);
  if (alphas.empty()) throw std::invalid_argument("alpha range is empty");
  const double alpha_floor =
      config.kind == ScanKind::Corollary ? 0.0 : -1.0;
  for (double a : alphas)
    if (!(a > alpha_floor))
      throw std::invalid_argument(
          std::string("alpha values must exceed ") + fmt(alpha_floor) +
          " for this scan kind");

  const bool needs_pairs = config.kind != ScanKind::Thm1;
  std::vector<std::pair<double, double>> pairs; // (C, D)
  if (needs_pairs) {
    const std::vector<double> cs = enumerate_range(config.C);
    const std::vector<double> ds = enumerate_range(config.D);
    for (double c : cs)
      for (double d : ds)
        if (c >= -1.0 && c <= 1.0 && d > -1.0 && d < c)
          pairs.emplace_back(c, d);
    if (pairs.empty())
      throw std::invalid_argument(
          "empty (C, D) pair grid: need -1 < D < C <= 1");
  }

  struct Block {
    int n;
    double alpha;
    std::size_t offset;
  };
  const std::size_t rows_per_block = needs_pairs ? pairs.size() : 1;
  std::vector<Block> blocks;
  blocks.reserve(std::size_t(config.n.hi - config.n.lo + 1) * alphas.size());
  for (int nn = config.n.lo; nn <= config.n.hi; ++nn)
    for (double a : alphas)
      blocks.push_back({nn, a, blocks.size() * rows_per_block});

  ScanResult result;
  result.config = config;
  result.rows.resize(blocks.size() * rows_per_block);
  const GridPoints pts = sample_disk_soa(config.grid);

  auto process = [&](const Block& blk) {
    if (config.kind == ScanKind::Thm1) {
      ScanRow& row = result.rows[blk.offset];
      row.n = blk.n;
      row.alpha = blk.alpha;
      row.has_params = false;
      const ConditionVerdict v = thm1_condition(blk.n, blk.alpha);
      row.condition_holds = v.holds;
      for (const Clause& cl : v.clauses)
        if (clause_failed(cl)) row.failed_clauses.push_back(cl.name);
      const Functional f{FunctionalKind::Identity,
                         PolynomialSpec{blk.n, blk.alpha}, false};
      const GridValues vals = evaluate_grid(f, pts);
      const TargetDomain dom{DomainKind::Exponential, JanowskiParams{}, 0.0};
      const SubordinationReport rep = reduce_margins(vals, pts, dom);
      row.empirical_verdict = rep.verdict;
      row.worst_margin = rep.worst_margin;
      row.witness_re = rep.witness.real();
      row.witness_im = rep.witness.imag();
      return;
    }

    // Condition side; the starlikeness transfer shifts to (n+1, alpha-1).
    const bool shifted = config.kind == ScanKind::Corollary;
    const int cn = shifted ? blk.n + 1 : blk.n;
    const double ca = shifted ? blk.alpha - 1.0 : blk.alpha;

    Clause nv1, nv2;
    bool ambiguous = false;
    try {
      nv1 = nonvanishing_clause(PolynomialSpec{cn, ca}, 1, config.r_max);
      nv2 = nonvanishing_clause(PolynomialSpec{cn, ca}, 2, config.r_max);
    } catch (const ambiguous_root_error&) {
      ambiguous = true;
    }

    const Functional f =
        shifted ? Functional{FunctionalKind::StarlikeRatio,
                             PolynomialSpec{blk.n, blk.alpha}, true}
                : Functional{FunctionalKind::ConvexityRatio,
                             PolynomialSpec{blk.n, blk.alpha}, false};
    const GridValues vals = evaluate_grid(f, pts);

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      ScanRow& row = result.rows[blk.offset + pi];
      const double C = pairs[pi].first;
      const double D = pairs[pi].second;
      row.n = blk.n;
      row.alpha = blk.alpha;
      row.has_params = true;
      row.C = C;
      row.D = D;
      if (ambiguous) {
        row.condition_holds = false;
        row.nonvanishing_ok = false;
        row.failed_clauses.push_back("ambiguous-root");
      } else {
        std::vector<Clause> clauses = thm2_algebra_clauses(
            Thm2Coefficients(cn, ca, JanowskiParams{C, D}, config.bundle));
        clauses.push_back(nv1);
        clauses.push_back(nv2);
        row.condition_holds =
            std::all_of(clauses.begin(), clauses.end(), [](const Clause& cl) {
              return !cl.applicable || cl.satisfied;
            });
        row.nonvanishing_ok = nv1.satisfied && nv2.satisfied;
        for (const Clause& cl : clauses)
          if (clause_failed(cl)) row.failed_clauses.push_back(cl.name);
      }
      const double deff =
          config.convention == SignConvention::MinusD ? -D : D;
      const RegionDescriptor region = janowski_image(C, deff);
      const SubordinationReport rep = reduce_margins(vals, pts, region);
      row.empirical_verdict = rep.verdict;
      row.worst_margin = rep.worst_margin;
      row.witness_re = rep.witness.real();
      row.witness_im = rep.witness.imag();
    }
  };

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error = nullptr;
  std::mutex error_mu;
  auto drain = [&]() {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks.size()) return;
      try {
        process(blocks[b]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const int workers =
      int(std::min<std::size_t>(std::size_t(thread_budget()), blocks.size()));
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(std::size_t(workers));
    for (int i = 0; i < workers; ++i) threads.emplace_back(drain);
    for (std::thread& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  result.summary.rows = long(result.rows.size());
  for (const ScanRow& row : result.rows) {
    result.summary.condition_holds += row.condition_holds ? 1 : 0;
    result.summary.empirical_true += row.empirical_verdict ? 1 : 0;
    result.summary.soundness_violations +=
        (row.condition_holds && !row.empirical_verdict) ? 1 : 0;
  }
  return result;
}

std::string render_csv(const ScanResult& result) {
  std::string out =
      "n,alpha,C,D,condition_holds,empirical_verdict,worst_margin,"
      "witness_re,witness_im,nonvanishing_ok,failed_clauses\n";
  for (const ScanRow& r : result.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += fmt(r.alpha);
    out += ',';
    if (r.has_params) {
      out += fmt(r.C);
      out += ',';
      out += fmt(r.D);
    } else {
      out += ',';
    }
    out += ',';
    out += r.condition_holds ? "true" : "false";
    out += ',';
    out += r.empirical_verdict ? "true" : "false";
    out += ',';
    out += fmt(r.worst_margin);
    out += ',';
    out += fmt(r.witness_re);
    out += ',';
    out += fmt(r.witness_im);
    out += ',';
    if (r.has_params) out += r.nonvanishing_ok ? "true" : "false";
    out += ',';
    for (std::size_t i = 0; i < r.failed_clauses.size(); ++i) {
      if (i) out += ';';
      out += r.failed_clauses[i];
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string range_json(const Range& r) {
  return "{\"lo\": " + fmt(r.lo) + ", \"hi\": " + fmt(r.hi) +
         ", \"step\": " + fmt(r.step) + "}";
}

std::string config_json(const ScanConfig& c) {
  std::string out = "{";
  out += "\"kind\": \"" + std::string(scan_kind_name(c.kind)) + "\"";
  out += ", \"n\": {\"lo\": " + std::to_string(c.n.lo) +
         ", \"hi\": " + std::to_string(c.n.hi) + "}";
  out += ", \"alpha\": " + range_json(c.alpha);
  out += ", \"C\": " + range_json(c.C);
  out += ", \"D\": " + range_json(c.D);
  out += ", \"r_max\": " + fmt(c.r_max);
  out += ", \"grid\": {\"r_max\": " + fmt(c.grid.r_max) +
         ", \"n_radii\": " + std::to_string(c.grid.n_radii) +
         ", \"n_angles\": " + std::to_string(c.grid.n_angles) + "}";
  out += ", \"sign_convention\": \"" +
         std::string(convention_name(c.convention)) + "\"";
  out += ", \"bundle\": \"" + std::string(bundle_name(c.bundle)) + "\"";
  out += ", \"format\": \"" + std::string(format_name(c.format)) + "\"";
  out += ", \"output_path\": \"" + json_escape(c.output_path) + "\"";
  out += "}";
  return out;
}

std::string row_json(const ScanRow& r) {
  std::string out = "{\"n\": " + std::to_string(r.n);
  out += ", \"alpha\": " + fmt(r.alpha);
  if (r.has_params) {
    out += ", \"C\": " + fmt(r.C);
    out += ", \"D\": " + fmt(r.D);
  } else {
    out += ", \"C\": null, \"D\": null";
  }
  out += std::string(", \"condition_holds\": ") +
         (r.condition_holds ? "true" : "false");
  out += std::string(", \"empirical_verdict\": ") +
         (r.empirical_verdict ? "true" : "false");
  out += ", \"worst_margin\": " + fmt(r.worst_margin);
  out += ", \"witness_re\": " + fmt(r.witness_re);
  out += ", \"witness_im\": " + fmt(r.witness_im);
  if (r.has_params)
    out += std::string(", \"nonvanishing_ok\": ") +
           (r.nonvanishing_ok ? "true" : "false");
  else
    out += ", \"nonvanishing_ok\": null";
  out += ", \"failed_clauses\": [";
  for (std::size_t i = 0; i < r.failed_clauses.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(r.failed_clauses[i]) + "\"";
  }
  out += "]}";
  return out;
}

} // namespace

std::string render_json(const ScanResult& result) {
  std::string out = "{\n  \"config\": " + config_json(result.config) + ",\n";
  out += "  \"rows\": [";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += row_json(result.rows[i]);
  }
  out += result.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"summary\": {\"rows\": " + std::to_string(result.summary.rows);
  out += ", \"condition_holds\": " +
         std::to_string(result.summary.condition_holds);
  out += ", \"empirical_true\": " +
         std::to_string(result.summary.empirical_true);
  out += ", \"soundness_violations\": " +
         std::to_string(result.summary.soundness_violations) + "},\n";
  out += std::string("  \"tool_version\": \"") + tool_version + "\"\n}\n";
  return out;
}

void write_output(const ScanResult& result, const std::string& path) {
  const std::string text = result.config.format == OutputFormat::Csv
                               ? render_csv(result)
                               : render_json(result);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(text.data(), std::streamsize(text.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

namespace {

Range range_from_json(const nlohmann::json& j) {
  return Range{j.at("lo").get<double>(), j.at("hi").get<double>(),
               j.at("step").get<double>()};
}

} // namespace

void apply_config_json(ScanConfig& cfg, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    if (!j.is_object())
      throw std::invalid_argument("config JSON must be an object");
    for (const auto& item : j.items()) {
      const std::string& key = item.key();
      const nlohmann::json& val = item.value();
      if (key == "kind") {
        cfg.kind = parse_scan_kind(val.get<std::string>());
      } else if (key == "n") {
        cfg.n = IntRange{val.at("lo").get<int>(), val.at("hi").get<int>()};
      } else if (key == "alpha") {
        cfg.alpha = range_from_json(val);
      } else if (key == "C") {
        cfg.C = range_from_json(val);
      } else if (key == "D") {
        cfg.D = range_from_json(val);
      } else if (key == "r_max") {
        cfg.r_max = val.get<double>();
      } else if (key == "grid") {
        cfg.grid = DiskGrid{val.at("r_max").get<double>(),
                            val.at("n_radii").get<int>(),
                            val.at("n_angles").get<int>()};
      } else if (key == "sign_convention") {
        cfg.convention = parse_convention(val.get<std::string>());
      } else if (key == "bundle") {
        cfg.bundle = parse_bundle(val.get<std::string>());
      } else if (key == "format") {
        cfg.format = parse_format(val.get<std::string>());
      } else if (key == "output_path") {
        cfg.output_path = val.get<std::string>();
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid config JSON: ") +
                                e.what());
  }
}

std::string peek_config_kind(const std::string& json_text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.is_object() && j.contains("kind"))
      return j.at("kind").get<std::string>();
    return "";
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid config JSON: ") +
                                e.what());
  }
}

std::string render_report(const std::vector<std::string>& scan_json_texts) {
  std::vector<std::pair<std::string, std::string>> blocks; // (conv, lines)
  auto block_for = [&](const std::string& conv) -> std::string& {
    for (auto& b : blocks)
      if (b.first == conv) return b.second;
    blocks.emplace_back(conv, std::string());
    return blocks.back().second;
  };

  try {
    for (const std::string& text : scan_json_texts) {
      const nlohmann::json j = nlohmann::json::parse(text);
      const nlohmann::json& cfg = j.at("config");
      const std::string conv = cfg.at("sign_convention").get<std::string>();
      const std::string kind = cfg.at("kind").get<std::string>();
      std::string& lines = block_for(conv);
      for (const nlohmann::json& row : j.at("rows")) {
        std::string prefix = conv + "," + kind + ",";
        prefix += std::to_string(row.at("n").get<int>()) + ",";
        prefix += fmt(row.at("alpha").get<double>()) + ",";
        prefix += row.at("C").is_null() ? std::string()
                                        : fmt(row.at("C").get<double>());
        prefix += ',';
        prefix += row.at("D").is_null() ? std::string()
                                        : fmt(row.at("D").get<double>());
        prefix += ',';
        lines += prefix + "condition_holds," +
                 (row.at("condition_holds").get<bool>() ? "1" : "0") + "\n";
        lines += prefix + "empirical_verdict," +
                 (row.at("empirical_verdict").get<bool>() ? "1" : "0") + "\n";
        lines += prefix + "worst_margin," +
                 fmt(row.at("worst_margin").get<double>()) + "\n";
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed scan file: ") +
                                e.what());
  }

  std::string out = "sign_convention,kind,n,alpha,C,D,metric,value\n";
  for (const auto& b : blocks) out += b.second;
  return out;
}

} // namespace gft
