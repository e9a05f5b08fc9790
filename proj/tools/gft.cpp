#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gft/domains.hpp"
#include "gft/functional.hpp"
#include "gft/laguerre.hpp"
#include "gft/roots.hpp"
#include "gft/scan.hpp"
#include "gft/subordination.hpp"
#include "gft/theorems.hpp"
#include "gft/types.hpp"

namespace {

std::string fmt_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_value(gft::cplx v) {
  if (v.imag() == 0.0) return fmt17(v.real());
  if (v.imag() < 0.0) return fmt17(v.real()) + "-" + fmt17(-v.imag()) + "i";
  return fmt17(v.real()) + "+" + fmt17(v.imag()) + "i";
}

gft::cplx parse_complex(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty complex literal");
  const auto fail = [&raw]() -> gft::cplx {
    throw std::invalid_argument("cannot parse complex literal: " + raw);
  };
  if (t == "i" || t == "+i") return {0.0, 1.0};
  if (t == "-i") return {0.0, -1.0};

  const char* p = t.c_str();
  char* end = nullptr;
  const double first = std::strtod(p, &end);
  if (end == p) return fail();
  if (*end == '\0') return {first, 0.0};
  if (*end == 'i' && end[1] == '\0') return {0.0, first};
  if (*end != '+' && *end != '-') return fail();

  // "a+bi" / "a-bi" with "i" shorthand for a unit coefficient
  if ((end[0] == '+' || end[0] == '-') && end[1] == 'i' && end[2] == '\0')
    return {first, end[0] == '+' ? 1.0 : -1.0};
  const char* q = end;
  char* end2 = nullptr;
  const double second = std::strtod(q, &end2);
  if (end2 == q || *end2 != 'i' || end2[1] != '\0') return fail();
  return {first, second};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(text.data(), std::streamsize(text.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string clauses_json(const gft::ConditionVerdict& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.clauses.size(); ++i) {
    const gft::Clause& cl = v.clauses[i];
    if (i) out += ", ";
    out += "{\"name\": \"" + json_escape(cl.name) + "\"";
    out += ", \"lhs\": " + fmt_shortest(cl.lhs);
    out += ", \"rhs\": " + fmt_shortest(cl.rhs);
    out += std::string(", \"satisfied\": ") +
           (cl.satisfied ? "true" : "false");
    out += std::string(", \"applicable\": ") +
           (cl.applicable ? "true" : "false");
    out += "}";
  }
  return out + "]";
}

void print_clauses(const gft::ConditionVerdict& v) {
  for (const gft::Clause& cl : v.clauses) {
    std::printf("clause %-22s lhs=%.17g rhs=%.17g -> %s\n", cl.name.c_str(),
                cl.lhs, cl.rhs,
                !cl.applicable ? "not applicable"
                               : (cl.satisfied ? "ok" : "fail"));
  }
  std::printf("holds: %s\n", v.holds ? "true" : "false");
}

int finish_condition(const std::string& kind, const std::string& params_json,
                     const gft::ConditionVerdict& v,
                     const std::string& json_path) {
  print_clauses(v);
  if (!json_path.empty()) {
    std::string out = "{\n  \"kind\": \"" + kind + "\",\n";
    out += "  \"params\": " + params_json + ",\n";
    out += std::string("  \"holds\": ") + (v.holds ? "true" : "false") +
           ",\n";
    out += "  \"clauses\": " + clauses_json(v) + ",\n";
    out += std::string("  \"tool_version\": \"") + gft::tool_version +
           "\"\n}\n";
    write_text(json_path, out);
  }
  return v.holds ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized-Laguerre geometric function toolkit"};
  app.require_subcommand(1);

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate M_{n,alpha} (or a derivative) at points");
  int ev_n = 0;
  double ev_a = 0.0;
  int ev_order = 0;
  std::vector<std::string> ev_z;
  eval_cmd->add_option("-n", ev_n, "polynomial degree")->required();
  eval_cmd->add_option("-a", ev_a, "alpha parameter")->required();
  eval_cmd->add_option("-z", ev_z, "evaluation points, e.g. 0.5 or 0.9+0.1i")
      ->required()
      ->expected(-1);
  eval_cmd->add_option("--order", ev_order, "derivative order (default 0)");

  // ---- check ----
  auto* check_cmd =
      app.add_subcommand("check", "Check a condition or a subordination");
  check_cmd->require_subcommand(1);

  int ck_n = 0;
  double ck_a = 0.0;
  double ck_C = 1.0, ck_D = -1.0;
  double ck_rmax = 0.999;
  std::string ck_bundle = "stated";
  std::string ck_json;

  auto* ck1 = check_cmd->add_subcommand(
      "thm1", "Exponential-subordination sufficient condition");
  ck1->add_option("-n", ck_n, "degree")->required();
  ck1->add_option("-a", ck_a, "alpha")->required();
  ck1->add_option("--json", ck_json, "write a JSON report to this path");

  auto* ck2 = check_cmd->add_subcommand(
      "thm2", "Janowski-convexity sufficient condition");
  ck2->add_option("-n", ck_n, "degree")->required();
  ck2->add_option("-a", ck_a, "alpha")->required();
  ck2->add_option("-C", ck_C, "Janowski C")->required();
  ck2->add_option("-D", ck_D, "Janowski D")->required();
  ck2->add_option("--rmax", ck_rmax, "nonvanishing radius (default 0.999)");
  ck2->add_option("--bundle", ck_bundle, "coefficient bundle")
      ->check(CLI::IsMember({"stated", "derived"}));
  ck2->add_option("--json", ck_json, "write a JSON report to this path");

  auto* ck3 = check_cmd->add_subcommand(
      "corollary", "Starlikeness of z M via the shifted convexity condition");
  ck3->add_option("-n", ck_n, "degree")->required();
  ck3->add_option("-a", ck_a, "alpha (> 0)")->required();
  ck3->add_option("-C", ck_C, "Janowski C")->required();
  ck3->add_option("-D", ck_D, "Janowski D")->required();
  ck3->add_option("--rmax", ck_rmax, "nonvanishing radius (default 0.999)");
  ck3->add_option("--bundle", ck_bundle, "coefficient bundle")
      ->check(CLI::IsMember({"stated", "derived"}));
  ck3->add_option("--json", ck_json, "write a JSON report to this path");

  std::string sub_functional = "identity";
  bool sub_prefactor = false;
  std::string sub_domain = "exp";
  double sub_beta = 0.0;
  double sub_grid_rmax = 0.999;
  int sub_radii = 64, sub_angles = 256;
  auto* ck4 = check_cmd->add_subcommand(
      "subordination", "Empirical image-containment check on a disk grid");
  ck4->add_option("-n", ck_n, "degree")->required();
  ck4->add_option("-a", ck_a, "alpha")->required();
  ck4->add_option("--functional", sub_functional, "functional kind")
      ->check(CLI::IsMember({"identity", "starlike", "convexity"}));
  ck4->add_flag("--prefactor-z", sub_prefactor,
                "use F = z M instead of F = M");
  ck4->add_option("--domain", sub_domain, "target domain")
      ->check(CLI::IsMember({"exp", "janowski", "lemniscate", "halfplane"}));
  ck4->add_option("-C", ck_C, "Janowski C (janowski domain)");
  ck4->add_option("-D", ck_D, "Janowski D (janowski domain)");
  ck4->add_option("--beta", sub_beta, "half-plane threshold in [0, 1)");
  ck4->add_option("--grid-rmax", sub_grid_rmax, "grid outer radius");
  ck4->add_option("--radii", sub_radii, "number of radii");
  ck4->add_option("--angles", sub_angles, "number of angles");
  ck4->add_option("--json", ck_json, "write a JSON report to this path");

  // ---- scan ----
  auto* scan_cmd =
      app.add_subcommand("scan", "Parameter sweep writing a CSV/JSON file");
  std::string sc_kind, sc_config, sc_out, sc_format, sc_conv, sc_bundle;
  int sc_nmin = 0, sc_nmax = 0;
  double sc_alo = 0, sc_ahi = 0, sc_astep = 0;
  double sc_clo = 0, sc_chi = 0, sc_cstep = 0;
  double sc_dlo = 0, sc_dhi = 0, sc_dstep = 0;
  double sc_rmax = 0, sc_grmax = 0;
  int sc_radii = 0, sc_angles = 0;
  auto* o_kind = scan_cmd->add_option("--kind", sc_kind, "scan kind")
                     ->check(CLI::IsMember({"thm1", "thm2", "corollary"}));
  auto* o_config =
      scan_cmd->add_option("--config", sc_config, "JSON config file");
  auto* o_out = scan_cmd->add_option("-o,--out", sc_out, "output file path");
  auto* o_format = scan_cmd->add_option("--format", sc_format, "csv or json")
                       ->check(CLI::IsMember({"csv", "json"}));
  auto* o_conv =
      scan_cmd->add_option("--convention", sc_conv, "sign convention")
          ->check(CLI::IsMember({"plusD", "minusD"}));
  auto* o_bundle = scan_cmd->add_option("--bundle", sc_bundle,
                                        "coefficient bundle")
                       ->check(CLI::IsMember({"stated", "derived"}));
  auto* o_nmin = scan_cmd->add_option("--nmin", sc_nmin, "minimum degree");
  auto* o_nmax = scan_cmd->add_option("--nmax", sc_nmax, "maximum degree");
  auto* o_alo = scan_cmd->add_option("--alpha-lo", sc_alo, "alpha lower");
  auto* o_ahi = scan_cmd->add_option("--alpha-hi", sc_ahi, "alpha upper");
  auto* o_astep = scan_cmd->add_option("--alpha-step", sc_astep, "alpha step");
  auto* o_clo = scan_cmd->add_option("--c-lo", sc_clo, "C lower");
  auto* o_chi = scan_cmd->add_option("--c-hi", sc_chi, "C upper");
  auto* o_cstep = scan_cmd->add_option("--c-step", sc_cstep, "C step");
  auto* o_dlo = scan_cmd->add_option("--d-lo", sc_dlo, "D lower");
  auto* o_dhi = scan_cmd->add_option("--d-hi", sc_dhi, "D upper");
  auto* o_dstep = scan_cmd->add_option("--d-step", sc_dstep, "D step");
  auto* o_rmax =
      scan_cmd->add_option("--rmax", sc_rmax, "nonvanishing radius");
  auto* o_grmax =
      scan_cmd->add_option("--grid-rmax", sc_grmax, "grid outer radius");
  auto* o_radii = scan_cmd->add_option("--radii", sc_radii, "grid radii");
  auto* o_angles = scan_cmd->add_option("--angles", sc_angles, "grid angles");

  // ---- report ----
  auto* report_cmd = app.add_subcommand(
      "report", "Tidy CSV projection of one or more JSON scan files");
  std::vector<std::string> rp_inputs;
  std::string rp_out;
  report_cmd->add_option("inputs", rp_inputs, "JSON scan files")
      ->required()
      ->expected(-1);
  report_cmd->add_option("-o,--out", rp_out,
                         "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      const gft::PolynomialSpec spec{ev_n, ev_a};
      validate(spec);
      if (ev_order < 0)
        throw std::invalid_argument("derivative order must be >= 0");
      for (const std::string& zs : ev_z) {
        const gft::cplx z = parse_complex(zs);
        std::printf("%s\n", fmt_value(gft::eval(spec, z, ev_order)).c_str());
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      if (ck1->parsed()) {
        const auto v = gft::thm1_condition(ck_n, ck_a);
        const std::string params = "{\"n\": " + std::to_string(ck_n) +
                                   ", \"alpha\": " + fmt_shortest(ck_a) + "}";
        return finish_condition("thm1", params, v, ck_json);
      }
      if (ck2->parsed() || ck3->parsed()) {
        const gft::JanowskiParams jp{ck_C, ck_D};
        const gft::CoefficientBundle bundle = gft::parse_bundle(ck_bundle);
        const auto v = ck2->parsed()
                           ? gft::thm2_condition(ck_n, ck_a, jp, ck_rmax,
                                                 bundle)
                           : gft::corollary_starlike(ck_n, ck_a, jp, ck_rmax,
                                                     bundle);
        std::string params = "{\"n\": " + std::to_string(ck_n) +
                             ", \"alpha\": " + fmt_shortest(ck_a) +
                             ", \"C\": " + fmt_shortest(ck_C) +
                             ", \"D\": " + fmt_shortest(ck_D) +
                             ", \"r_max\": " + fmt_shortest(ck_rmax) +
                             ", \"bundle\": \"" + ck_bundle + "\"}";
        return finish_condition(ck2->parsed() ? "thm2" : "corollary", params,
                                v, ck_json);
      }
      // subordination
      gft::Functional f;
      f.base = gft::PolynomialSpec{ck_n, ck_a};
      f.prefactor_z = sub_prefactor;
      f.kind = sub_functional == "identity"
                   ? gft::FunctionalKind::Identity
                   : (sub_functional == "starlike"
                          ? gft::FunctionalKind::StarlikeRatio
                          : gft::FunctionalKind::ConvexityRatio);
      gft::TargetDomain dom;
      if (sub_domain == "exp") {
        dom.kind = gft::DomainKind::Exponential;
      } else if (sub_domain == "janowski") {
        dom.kind = gft::DomainKind::Janowski;
        dom.janowski = gft::JanowskiParams{ck_C, ck_D};
      } else if (sub_domain == "lemniscate") {
        dom.kind = gft::DomainKind::Lemniscate;
      } else {
        dom.kind = gft::DomainKind::HalfPlane;
        dom.beta = sub_beta;
      }
      const gft::DiskGrid grid{sub_grid_rmax, sub_radii, sub_angles};
      const gft::SubordinationReport rep =
          gft::check_subordination(f, dom, grid);
      std::printf("verdict: %s\n", rep.verdict ? "true" : "false");
      std::printf("worst_margin: %.17g\n", rep.worst_margin);
      const gft::FunctionalValue wv =
          gft::evaluate_functional(f, rep.witness);
      std::printf("witness: z = %s, f(z) = %s\n",
                  fmt_value(rep.witness).c_str(),
                  wv.defined ? fmt_value(wv.value).c_str() : "undefined");
      std::printf("samples: %ld undefined: %ld\n", rep.samples_checked,
                  rep.undefined_points);
      if (!ck_json.empty()) {
        std::string out = "{\n  \"kind\": \"subordination\",\n";
        out += "  \"params\": {\"n\": " + std::to_string(ck_n) +
               ", \"alpha\": " + fmt_shortest(ck_a) + ", \"functional\": \"" +
               sub_functional + "\", \"prefactor_z\": " +
               (sub_prefactor ? "true" : "false") + ", \"domain\": \"" +
               sub_domain + "\"},\n";
        out += std::string("  \"verdict\": ") +
               (rep.verdict ? "true" : "false") + ",\n";
        out += "  \"worst_margin\": " + fmt_shortest(rep.worst_margin) +
               ",\n";
        out += "  \"witness_re\": " + fmt_shortest(rep.witness.real()) +
               ",\n";
        out += "  \"witness_im\": " + fmt_shortest(rep.witness.imag()) +
               ",\n";
        out += "  \"samples_checked\": " +
               std::to_string(rep.samples_checked) + ",\n";
        out += "  \"undefined_points\": " +
               std::to_string(rep.undefined_points) + ",\n";
        out += std::string("  \"tool_version\": \"") + gft::tool_version +
               "\"\n}\n";
        write_text(ck_json, out);
      }
      return rep.verdict ? 0 : 1;
    }

    if (scan_cmd->parsed()) {
      gft::ScanKind kind = gft::ScanKind::Thm2;
      std::string cfg_text;
      if (o_config->count()) cfg_text = slurp(sc_config);
      if (o_kind->count()) {
        kind = gft::parse_scan_kind(sc_kind);
      } else if (!cfg_text.empty()) {
        const std::string k = gft::peek_config_kind(cfg_text);
        if (!k.empty()) kind = gft::parse_scan_kind(k);
      }
      gft::ScanConfig cfg = gft::default_config(kind);
      if (!cfg_text.empty()) gft::apply_config_json(cfg, cfg_text);
      cfg.kind = kind; // flag wins over the file
      if (o_out->count()) cfg.output_path = sc_out;
      if (o_format->count()) cfg.format = gft::parse_format(sc_format);
      if (o_conv->count()) cfg.convention = gft::parse_convention(sc_conv);
      if (o_bundle->count()) cfg.bundle = gft::parse_bundle(sc_bundle);
      if (o_nmin->count()) cfg.n.lo = sc_nmin;
      if (o_nmax->count()) cfg.n.hi = sc_nmax;
      if (o_alo->count()) cfg.alpha.lo = sc_alo;
      if (o_ahi->count()) cfg.alpha.hi = sc_ahi;
      if (o_astep->count()) cfg.alpha.step = sc_astep;
      if (o_clo->count()) cfg.C.lo = sc_clo;
      if (o_chi->count()) cfg.C.hi = sc_chi;
      if (o_cstep->count()) cfg.C.step = sc_cstep;
      if (o_dlo->count()) cfg.D.lo = sc_dlo;
      if (o_dhi->count()) cfg.D.hi = sc_dhi;
      if (o_dstep->count()) cfg.D.step = sc_dstep;
      if (o_rmax->count()) cfg.r_max = sc_rmax;
      if (o_grmax->count()) cfg.grid.r_max = sc_grmax;
      if (o_radii->count()) cfg.grid.n_radii = sc_radii;
      if (o_angles->count()) cfg.grid.n_angles = sc_angles;
      if (cfg.output_path.empty())
        throw std::invalid_argument(
            "scan requires an output path (--out or config output_path)");

      const gft::ScanResult result = gft::run_scan(cfg);
      gft::write_output(result, cfg.output_path);
      std::printf(
          "scan kind=%s convention=%s bundle=%s rows=%ld "
          "condition_holds=%ld empirical_true=%ld soundness_violations=%ld "
          "-> %s\n",
          gft::scan_kind_name(cfg.kind),
          gft::convention_name(cfg.convention), gft::bundle_name(cfg.bundle),
          result.summary.rows, result.summary.condition_holds,
          result.summary.empirical_true,
          result.summary.soundness_violations, cfg.output_path.c_str());
      return 0;
    }

    if (report_cmd->parsed()) {
      std::vector<std::string> texts;
      texts.reserve(rp_inputs.size());
      for (const std::string& path : rp_inputs) texts.push_back(slurp(path));
      const std::string table = gft::render_report(texts);
      if (rp_out.empty())
        std::fwrite(table.data(), 1, table.size(), stdout);
      else
        write_text(rp_out, table);
      return 0;
    }
  } catch (const gft::ambiguous_root_error& e) {
    std::fprintf(stderr, "error: ambiguous root: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
