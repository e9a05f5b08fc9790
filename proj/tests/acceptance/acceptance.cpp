// Acceptance gate: nine end-to-end criteria, one pass/fail line each.
// Usage: gft_acceptance <path-to-gft-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gft/domains.hpp"
#include "gft/functional.hpp"
#include "gft/grid.hpp"
#include "gft/laguerre.hpp"
#include "gft/scan.hpp"
#include "gft/subordination.hpp"
#include "gft/theorems.hpp"

using gft::cplx;

namespace {

bool within_one_ulp(double a, double b) {
  return a == b || a == std::nextafter(b, a);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

bool run_criterion(int id, const char* name, double budget_ms,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (budget_ms > 0.0 && ms > budget_ms)
    out.fail("exceeded time budget of " + fmt(budget_ms) + " ms");
  std::printf("[%s] criterion %d: %s (%.1f ms)%s%s\n", out.ok ? "PASS" : "FAIL",
              id, name, ms, out.detail.empty() ? "" : " - ",
              out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

gft::TargetDomain exp_domain() {
  gft::TargetDomain d;
  d.kind = gft::DomainKind::Exponential;
  return d;
}

const std::vector<cplx>& probe_points() {
  static const std::vector<cplx> pts = {
      {0.4, 0.3},  {-0.8, 0.1},  {-1.2, 0.0},  {0.0, 0.9},
      {0.5, -0.7}, {-0.3, -0.2}, {0.999, 0.0}, {0.0, 1.5},
  };
  return pts;
}

const std::vector<double>& alpha_set() {
  static const std::vector<double> as = {-0.5, 0.0, 0.3, 1.0, 4.0, 10.0};
  return as;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= double(k);
  return f;
}

void criterion_coefficients(Outcome& out) {
  const auto check_table = [&out](int n, double alpha,
                                  const std::vector<double>& expected) {
    const std::vector<double> got = gft::coefficients({n, alpha});
    if (got.size() != expected.size()) {
      out.fail("coefficient count mismatch at n=" + std::to_string(n));
      return;
    }
    for (std::size_t k = 0; k < got.size(); ++k)
      if (!within_one_ulp(got[k], expected[k]))
        out.fail("c_" + std::to_string(k) + " of (" + std::to_string(n) +
                 ", " + fmt(alpha) + "): got " + fmt(got[k]) + " want " +
                 fmt(expected[k]));
  };
  check_table(1, 3.0, {1.0, -0.25});
  check_table(3, 5.0, {1.0, -0.5, 1.0 / 14.0, -1.0 / 336.0});
  check_table(2, 4.0, {1.0, -0.4, 1.0 / 30.0});
}

void criterion_identities(Outcome& out) {
  double worst_ode = 0.0, worst_shift = 0.0, worst_route = 0.0,
         worst_hermite = 0.0;
  for (double alpha : alpha_set()) {
    for (int n = 0; n <= 15; ++n) {
      const gft::PolynomialSpec spec{n, alpha};
      for (cplx z : probe_points()) {
        const double tol =
            1e-10 * std::pow(std::max(1.0, std::abs(z)), n) * factorial(n);
        const double r = std::abs(gft::ode_residual(spec, z));
        worst_ode = std::max(worst_ode, r / tol);
        if (r > tol)
          out.fail("ode residual " + fmt(r) + " at n=" + std::to_string(n) +
                   " alpha=" + fmt(alpha));
      }
    }
    for (int n = 1; n <= 12; ++n) {
      for (cplx z : probe_points()) {
        const double r =
            std::abs(gft::derivative_identity_residual({n, alpha}, z));
        worst_shift = std::max(worst_shift, r);
        if (r > 1e-10)
          out.fail("derivative identity residual " + fmt(r) +
                   " at n=" + std::to_string(n));
      }
    }
    for (int n = 0; n <= 12; ++n) {
      for (cplx z : probe_points()) {
        const cplx a = gft::eval({n, alpha}, z);
        const cplx b = gft::hypergeometric_eval(n, alpha, z);
        const double tol =
            1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
        const double r = std::abs(a - b);
        worst_route = std::max(worst_route, r / tol);
        if (r > tol)
          out.fail("route disagreement " + fmt(r) +
                   " at n=" + std::to_string(n) + " alpha=" + fmt(alpha));
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (cplx z : probe_points()) {
      const double r = std::abs(gft::hermite_relation_residual(n, z));
      worst_hermite = std::max(worst_hermite, r);
      if (r > 1e-9)
        out.fail("hermite residual " + fmt(r) + " at n=" + std::to_string(n));
    }
  }
  if (out.ok)
    out.note("worst ode/tol " + fmt(worst_ode) + ", shift " +
             fmt(worst_shift) + ", hermite " + fmt(worst_hermite));
}

void criterion_exp_sweep(Outcome& out) {
  const gft::DiskGrid grid{0.999, 64, 256};
  const gft::TargetDomain dom = exp_domain();
  int cells = 0, violations = 0;
  double min_margin = 1e300;
  for (int n = 0; n <= 8; ++n) {
    for (int i = 1; i <= 20; ++i) {
      const double alpha = double(n) + 1.0 + 0.25 * double(i);
      ++cells;
      const gft::ConditionVerdict v = gft::thm1_condition(n, alpha);
      if (!v.holds) {
        ++violations;
        out.fail("condition unexpectedly false at n=" + std::to_string(n) +
                 " alpha=" + fmt(alpha));
        continue;
      }
      const gft::Functional f{gft::FunctionalKind::Identity, {n, alpha},
                              false};
      const gft::SubordinationReport rep =
          gft::check_subordination(f, dom, grid);
      min_margin = std::min(min_margin, rep.worst_margin);
      if (!rep.verdict) {
        ++violations;
        out.fail("verdict false at n=" + std::to_string(n) +
                 " alpha=" + fmt(alpha) +
                 " margin=" + fmt(rep.worst_margin));
      }
    }
  }
  if (out.ok)
    out.note(std::to_string(cells) + " cells, 0 violations, min margin " +
             fmt(min_margin));
  (void)violations;
}

void criterion_counterexample(Outcome& out) {
  const gft::Functional f{gft::FunctionalKind::Identity, {1, 0.05}, false};
  const gft::SubordinationReport rep =
      gft::check_subordination(f, exp_domain(), {0.999, 64, 256});
  if (rep.verdict) out.fail("verdict should be false");
  if (!(rep.worst_margin <= -1.5))
    out.fail("margin " + fmt(rep.worst_margin) + " not beyond -1.5");
  if (out.ok)
    out.note("margin " + fmt(rep.worst_margin) + " at witness (" +
             fmt(rep.witness.real()) + ", " + fmt(rep.witness.imag()) + ")");
}

void criterion_q_residual(Outcome& out) {
  std::mt19937_64 rng(20240817ull);
  const auto uniform = [&rng] {
    return double(rng() >> 11) * 0x1.0p-53;
  };
  const gft::GridPoints pts = gft::sample_disk_soa({0.85, 16, 16});
  long defined = 0, total = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(uniform() * 6.0) % 6;
    const double alpha = -0.9 + 10.9 * uniform();
    const double C = -0.9 + 1.9 * uniform();
    const double D = -0.99 + (C + 0.98) * uniform();
    for (std::size_t i = 0; i < pts.re.size(); ++i) {
      ++total;
      const gft::FunctionalValue r =
          gft::thm2_q_residual(n, alpha, {C, D}, {pts.re[i], pts.im[i]});
      if (!r.defined) continue;
      ++defined;
      const double mag = std::abs(r.value);
      worst = std::max(worst, mag);
      if (mag >= 1e-8)
        out.fail("residual " + fmt(mag) + " at n=" + std::to_string(n) +
                 " alpha=" + fmt(alpha) + " C=" + fmt(C) + " D=" + fmt(D));
    }
  }
  if (defined * 10 < total * 9)
    out.fail("only " + std::to_string(defined) + "/" + std::to_string(total) +
             " points defined");
  if (out.ok)
    out.note("worst residual " + fmt(worst) + ", " + std::to_string(defined) +
             "/" + std::to_string(total) + " defined");
}

void criterion_soundness_scan(Outcome& out) {
  struct Variant {
    gft::CoefficientBundle bundle;
    gft::SignConvention convention;
    long expect_holds;
    long expect_empirical;
    long expect_violations;
  };
  const Variant variants[] = {
      {gft::CoefficientBundle::Stated, gft::SignConvention::PlusD, 0, 83699,
       0},
      {gft::CoefficientBundle::Stated, gft::SignConvention::MinusD, 0, 81807,
       0},
      {gft::CoefficientBundle::Derived, gft::SignConvention::PlusD, 12086,
       83699, 0},
  };
  for (const Variant& v : variants) {
    gft::ScanConfig cfg = gft::default_config(gft::ScanKind::Thm2);
    cfg.bundle = v.bundle;
    cfg.convention = v.convention;
    const gft::ScanResult res = gft::run_scan(cfg);
    const std::string tag = std::string(gft::bundle_name(v.bundle)) + "/" +
                            gft::convention_name(v.convention);
    if (res.summary.rows != 127920)
      out.fail(tag + ": rows " + std::to_string(res.summary.rows));
    if (res.summary.soundness_violations != v.expect_violations)
      out.fail(tag + ": violations " +
               std::to_string(res.summary.soundness_violations));
    if (res.summary.condition_holds != v.expect_holds)
      out.fail(tag + ": holds " + std::to_string(res.summary.condition_holds) +
               " want " + std::to_string(v.expect_holds));
    if (res.summary.empirical_true != v.expect_empirical)
      out.fail(tag + ": empirical " +
               std::to_string(res.summary.empirical_true) + " want " +
               std::to_string(v.expect_empirical));
  }
  if (out.ok)
    out.note("127920 rows per variant, frozen counts reproduced, "
             "0 violations in all three variants");
}

void criterion_starlike_identity(Outcome& out) {
  std::mt19937_64 rng(7ull);
  const auto uniform = [&rng] {
    return double(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<cplx> zs;
  for (double r : {0.3, 0.6, 0.85})
    for (int k = 0; k < 16; ++k) {
      const double t = 2.0 * 3.14159265358979323846 * (k + 0.5) / 16.0;
      zs.push_back({r * std::cos(t), r * std::sin(t)});
    }
  long defined = 0, total = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(uniform() * 5.0) % 5;
    const double alpha = 0.25 + 9.75 * uniform();
    for (cplx z : zs) {
      ++total;
      const gft::FunctionalValue r =
          gft::corollary_identity_residual(n, alpha, z);
      if (!r.defined) continue;
      ++defined;
      const double mag = std::abs(r.value);
      worst = std::max(worst, mag);
      if (mag >= 1e-10)
        out.fail("residual " + fmt(mag) + " at n=" + std::to_string(n) +
                 " alpha=" + fmt(alpha));
    }
  }
  if (defined * 10 < total * 9)
    out.fail("only " + std::to_string(defined) + "/" + std::to_string(total) +
             " points defined");
  if (out.ok)
    out.note("worst residual " + fmt(worst) + ", " + std::to_string(defined) +
             "/" + std::to_string(total) + " defined");
}

void criterion_probes(Outcome& out) {
  const gft::ExpProbeResult ep =
      gft::admissibility_probe_exponential(1, 3.0, 10000);
  if (!(ep.min_abs_psi > ep.bound - 1e-6))
    out.fail("exponential probe min " + fmt(ep.min_abs_psi) +
             " not above bound " + fmt(ep.bound) + " - 1e-6");
  const gft::CaratheodoryProbeResult cp =
      gft::admissibility_probe_caratheodory(2, 3.0, {0.5, -0.5}, 10000,
                                            gft::CoefficientBundle::Derived);
  if (!cp.precondition_ok) out.fail("caratheodory precondition violated");
  if (!(cp.max_re_psi < 0.0))
    out.fail("caratheodory max Re psi " + fmt(cp.max_re_psi) +
             " not negative");
  if (out.ok)
    out.note("exp probe min " + fmt(ep.min_abs_psi) + " vs bound " +
             fmt(ep.bound) + "; disk probe max Re psi " + fmt(cp.max_re_psi));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_determinism(Outcome& out, const char* gft_path) {
  if (!gft_path) {
    out.fail("no gft binary path supplied (argv[1])");
    return;
  }
  char tmpl[] = "/tmp/gft-acceptance-XXXXXX";
  const char* dir = mkdtemp(tmpl);
  if (!dir) {
    out.fail("mkdtemp failed");
    return;
  }
  const std::string base_args =
      " scan --kind thm2 --bundle derived --nmin 1 --nmax 2 "
      "--alpha-lo 0 --alpha-hi 2 --alpha-step 0.5 "
      "--c-lo -1 --c-hi 1 --c-step 0.25 --d-lo -1 --d-hi 1 --d-step 0.25 "
      "--radii 16 --angles 64 ";
  const std::string file_a = std::string(dir) + "/a.csv";
  const std::string file_b = std::string(dir) + "/b.csv";
  const std::string quiet = " >/dev/null 2>&1";
  const std::string cmd_a = "GFT_THREADS=1 '" + std::string(gft_path) + "'" +
                            base_args + "-o '" + file_a + "'" + quiet;
  const std::string cmd_b = "GFT_THREADS=8 '" + std::string(gft_path) + "'" +
                            base_args + "-o '" + file_b + "'" + quiet;
  const int rc_a = std::system(cmd_a.c_str());
  const int rc_b = std::system(cmd_b.c_str());
  if (rc_a == -1 || !WIFEXITED(rc_a) || WEXITSTATUS(rc_a) != 0) {
    out.fail("first scan run failed");
    return;
  }
  if (rc_b == -1 || !WIFEXITED(rc_b) || WEXITSTATUS(rc_b) != 0) {
    out.fail("second scan run failed");
    return;
  }
  const std::string text_a = slurp(file_a);
  const std::string text_b = slurp(file_b);
  if (text_a.empty()) out.fail("first output file empty or unreadable");
  if (text_a != text_b)
    out.fail("outputs differ between GFT_THREADS=1 and GFT_THREADS=8");
  if (out.ok)
    out.note(std::to_string(text_a.size()) + " bytes, byte-identical");
}

} // namespace

int main(int argc, char** argv) {
  const char* gft_path = argc > 1 ? argv[1] : nullptr;
  int passed = 0;
  int total = 0;
  const auto tally = [&](bool ok) {
    ++total;
    if (ok) ++passed;
  };

  tally(run_criterion(1, "coefficient tables match exact rationals", 1.0,
                      criterion_coefficients));
  tally(run_criterion(2, "evaluation identities hold on canonical grids",
                      5000.0, criterion_identities));
  tally(run_criterion(3, "exponential-subordination sweep is sound", 20000.0,
                      criterion_exp_sweep));
  tally(run_criterion(4, "hypothesis-boundary counterexample fails as expected",
                      1000.0, criterion_counterexample));
  tally(run_criterion(5, "convexity-condition algebra residual below 1e-8",
                      10000.0, criterion_q_residual));
  tally(run_criterion(6, "convexity soundness scan reproduces frozen counts",
                      60000.0, criterion_soundness_scan));
  tally(run_criterion(7, "starlike ratio identity residual below 1e-10",
                      2000.0, criterion_starlike_identity));
  tally(run_criterion(8, "boundary admissibility probes stay on side", 5000.0,
                      criterion_probes));
  tally(run_criterion(9, "scan output is byte-identical across thread budgets",
                      0.0, [gft_path](Outcome& out) {
                        criterion_determinism(out, gft_path);
                      }));

  std::printf("acceptance: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
