#include "gft/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gft/grid.hpp"
#include "gft/laguerre.hpp"
#include "gft/roots.hpp"
#include "gft/subordination.hpp"

namespace gft {

namespace {

// Deterministic 64-bit stream for probe offset strata; fixed-seed so probe
// results are reproducible byte-for-byte.
struct SplitMix64 {
  std::uint64_t s;
  explicit SplitMix64(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double u01() { return double(next() >> 11) * 0x1.0p-53; }
};

} // namespace

const char* bundle_name(CoefficientBundle b) {
  return b == CoefficientBundle::Stated ? "stated" : "derived";
}

bool strictly_greater(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs - rhs > 1e-12 * scale;
}

Thm2Coefficients::Thm2Coefficients(int n_, double alpha_,
                                   const JanowskiParams& p_,
                                   CoefficientBundle bundle_)
    : n(n_), alpha(alpha_), p(p_), bundle(bundle_) {
  validate(PolynomialSpec{n, alpha});
  validate(p);
}

double Thm2Coefficients::mu() const {
  return bundle == CoefficientBundle::Stated ? double(n) + 1.0
                                             : 1.0 - double(n);
}

double Thm2Coefficients::K() const { return p.C - p.D; }

double Thm2Coefficients::A() const {
  const double k = K();
  return k * k + p.D * k * (alpha + 1.0);
}

double Thm2Coefficients::B() const {
  return mu() * (1.0 - p.D * p.D) - p.D * K();
}

std::array<cplx, 4> Thm2Coefficients::F(cplx z) const {
  const double k = K(), D = p.D, m = mu();
  const cplx az = alpha + 1.0 - z;
  std::array<cplx, 4> out;
  out[0] = 2.0 * k;
  out[1] = k * k + k * (1.0 + D) * az - m * z * (1.0 + D) * (1.0 + D);
  out[2] = -2.0 * k * k - 2.0 * D * k * az - 2.0 * m * z * (1.0 - D * D);
  out[3] = k * k - k * (1.0 - D) * az - m * z * (1.0 - D) * (1.0 - D);
  return out;
}

std::array<double, 4> Thm2Coefficients::G(double x, double y) const {
  const double k = K(), D = p.D, m = mu();
  std::array<double, 4> out;
  out[0] = 2.0 * k;
  out[1] = k * k + k * (1.0 + D) * (alpha + 1.0 - x) -
           m * x * (1.0 + D) * (1.0 + D);
  out[2] = -2.0 * k * k - 2.0 * D * k * (alpha + 1.0 + y) +
           2.0 * m * y * (1.0 - D * D);
  out[3] = k * k - k * (1.0 - D) * (alpha + 1.0 - x) -
           m * x * (1.0 - D) * (1.0 - D);
  return out;
}

std::array<double, 3> Thm2Coefficients::h() const {
  const double k = K(), D = p.D, m = mu();
  const double a0 = k + k * k + k * (1.0 + D) * (alpha + 1.0);
  const double a1 = -k * (1.0 + D) - m * (1.0 + D) * (1.0 + D);
  const double b0 = k - k * k + k * (1.0 - D) * (alpha + 1.0);
  const double b1 = -k * (1.0 - D) + m * (1.0 - D) * (1.0 - D);
  return {a1 * b1, a0 * b1 + a1 * b0, a0 * b0};
}

double Thm2Coefficients::nu() const {
  const auto hh = h();
  return -hh[1] / (2.0 * hh[0]);
}

ConditionVerdict thm1_condition(int n, double alpha) {
  validate(PolynomialSpec{n, alpha});
  ConditionVerdict v;
  const double lhs = (alpha - 1.0 - double(n)) / std::numbers::e;
  v.clauses.push_back(
      {"hypothesis-positive", lhs, 0.0, strictly_greater(lhs, 0.0), true});
  v.holds = v.clauses.front().satisfied;
  return v;
}

std::vector<Clause> thm2_algebra_clauses(const Thm2Coefficients& tc) {
  std::vector<Clause> clauses;
  const auto hh = tc.h();
  const double h1 = hh[0], h2 = hh[1], h3 = hh[2];
  clauses.push_back(
      {"h1-positive", h1, 0.0, strictly_greater(h1, 0.0), true});

  const double k = tc.K(), D = tc.p.D, m = tc.mu();
  const double alpha = tc.alpha;
  const double selector = k * (1.0 + D) + m * (1.0 + D) * (1.0 + D);
  if (strictly_greater(selector, 0.0)) {
    const double eq4 = 2.0 * k + 2.0 * k * k + k * (1.0 + D) * alpha -
                       m * (1.0 + D) * (1.0 + D);
    clauses.push_back({"eq4", eq4, 0.0, strictly_greater(eq4, 0.0), true});
  } else if (strictly_greater(0.0, selector)) {
    const double eq5 = 2.0 * k + 2.0 * k * k +
                       k * (1.0 + D) * (alpha + 2.0) +
                       m * (1.0 + D) * (1.0 + D);
    clauses.push_back({"eq5", eq5, 0.0, strictly_greater(eq5, 0.0), true});
  } else {
    clauses.push_back({"branch-degenerate", selector, 0.0, false, false});
  }

  const double t1 = tc.B() - tc.A();
  const double t2 = tc.A() + tc.B();
  const double maxsq = std::max(t1 * t1, t2 * t2);
  if (h1 != 0.0) {
    if (std::abs(tc.nu()) < 1.0) {
      const double vertex_min = h3 - (h2 * h2) / (4.0 * h1);
      clauses.push_back({"max-vs-vertex-min", maxsq, vertex_min,
                         strictly_greater(vertex_min, maxsq), true});
    } else {
      const double slope = 2.0 * h1 + h2;
      clauses.push_back({"monotone-slope", slope, 0.0, slope <= 0.0, true});
      const double edge_min = h1 + h2 + h3;
      clauses.push_back({"max-vs-edge-min", maxsq, edge_min,
                         strictly_greater(edge_min, maxsq), true});
    }
  } else {
    clauses.push_back({"max-vs-vertex-min", maxsq, 0.0, false, false});
  }
  return clauses;
}

Clause nonvanishing_clause(const PolynomialSpec& spec, int order,
                           double r_max) {
  const auto dc = derivative_coefficients(coefficients(spec), order);
  const double min_mod =
      dc.empty() ? 0.0 : std::min(min_root_modulus(dc), 1e300);
  const bool ok =
      nonvanishing_in_disk(spec, order, r_max); // may throw ambiguous_root
  return {"nonvanishing-order-" + std::to_string(order), min_mod, r_max, ok,
          true};
}

ConditionVerdict thm2_condition(int n, double alpha, const JanowskiParams& p,
                                double r_max, CoefficientBundle bundle) {
  const Thm2Coefficients tc(n, alpha, p, bundle);
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("r_max must lie in (0, 1)");

  ConditionVerdict v;
  v.clauses = thm2_algebra_clauses(tc);
  for (int order = 1; order <= 2; ++order)
    v.clauses.push_back(
        nonvanishing_clause(PolynomialSpec{n, alpha}, order, r_max));

  v.holds = std::all_of(v.clauses.begin(), v.clauses.end(),
                        [](const Clause& cl) {
                          return !cl.applicable || cl.satisfied;
                        });
  return v;
}

FunctionalValue thm2_q_residual(int n, double alpha, const JanowskiParams& p,
                                cplx z, CoefficientBundle bundle) {
  const Thm2Coefficients tc(n, alpha, p, bundle);
  const PolynomialSpec spec{n, alpha};
  const cplx p1 = eval(spec, z, 1);
  const cplx p2 = eval(spec, z, 2);
  const cplx p3 = eval(spec, z, 3);
  const double k = tc.K(), D = p.D;

  const cplx num = k * p1 + (1.0 - D) * z * p2;
  const cplx den = k * p1 - (1.0 + D) * z * p2;
  const cplx num_d = k * p2 + (1.0 - D) * (p2 + z * p3);
  const cplx den_d = k * p2 - (1.0 + D) * (p2 + z * p3);

  FunctionalValue out;
  if (std::abs(den) < 1e-13) {
    out.defined = false;
    return out;
  }
  const cplx q = num / den;
  const cplx qp = (num_d * den - num * den_d) / (den * den);
  const auto f = tc.F(z);
  out.value = f[0] * z * qp + f[1] * q * q + f[2] * q + f[3];
  out.defined = std::abs(q) <= 30.0 && std::abs(z * qp) <= 1e3;
  return out;
}

ConditionVerdict corollary_starlike(int n, double alpha,
                                    const JanowskiParams& p, double r_max,
                                    CoefficientBundle bundle) {
  validate(PolynomialSpec{n, alpha});
  if (!(alpha > 0.0))
    throw std::invalid_argument(
        "starlikeness transfer requires alpha > 0 (it shifts to alpha - 1)");
  return thm2_condition(n + 1, alpha - 1.0, p, r_max, bundle);
}

FunctionalValue corollary_identity_residual(int n, double alpha, cplx z) {
  validate(PolynomialSpec{n, alpha});
  if (!(alpha > 0.0))
    throw std::invalid_argument(
        "starlikeness transfer requires alpha > 0 (it shifts to alpha - 1)");
  const PolynomialSpec base{n, alpha};
  const PolynomialSpec shifted{n + 1, alpha - 1.0};
  const cplx mv = eval(base, z);
  const cplx mp = eval(base, z, 1);
  const cplx sp = eval(shifted, z, 1);
  const cplx spp = eval(shifted, z, 2);
  FunctionalValue out;
  out.defined = std::abs(mv) > 1e-8 && std::abs(sp) > 1e-13;
  if (!out.defined) return out;
  out.value = (mv + z * mp) / mv - (1.0 + z * spp / sp);
  return out;
}

ExpProbeResult admissibility_probe_exponential(int n, double alpha,
                                               long samples, double m_max) {
  validate(PolynomialSpec{n, alpha});
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(m_max >= 1.0) || !std::isfinite(m_max))
    throw std::invalid_argument("m_max must be finite and >= 1");
  if (!thm1_condition(n, alpha).holds)
    throw std::invalid_argument(
        "probe precondition fails: require alpha - 1 - n > 0");

  const GridPoints zs = sample_disk_soa(DiskGrid{0.999, 4, 8});
  const double step = (m_max - 1.0) / 3.0;
  const double mset[4] = {1.0, 1.0 + step, 1.0 + 2.0 * step, m_max};
  SplitMix64 rng(42);

  ExpProbeResult out;
  out.bound = (alpha - 1.0 - double(n)) / std::numbers::e;
  out.samples = samples;
  out.min_abs_psi = std::numeric_limits<double>::infinity();
  const long lattice = 40L * 4L * long(zs.re.size()); // one full pass

  for (long i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * double(i % 40) / 40.0;
    const double m = mset[(i / 40) % 4];
    const std::size_t zi = std::size_t(i / 160) % zs.re.size();
    const cplx z(zs.re[zi], zs.im[zi]);
    double c = 0.0, beta = 0.0;
    if (i >= lattice) {
      c = 3.0 * rng.u01();
      beta = -3.0 + 6.0 * rng.u01();
    }
    const cplx eit = std::polar(1.0, theta);
    const cplx outer = std::exp(eit); // e^{e^{i theta}}
    const cplx s = m * eit * outer;
    const cplx t = -s + cplx(c, beta) * eit * outer;
    const cplx psi = t + (alpha + 1.0 - z) * s + outer * double(n) * z;
    const double a = std::abs(psi);
    if (a < out.min_abs_psi) {
      out.min_abs_psi = a;
      out.arg_theta = theta;
      out.arg_m = m;
      out.arg_z = z;
    }
  }
  return out;
}

CaratheodoryProbeResult admissibility_probe_caratheodory(
    int n, double alpha, const JanowskiParams& p, long samples,
    CoefficientBundle bundle) {
  const Thm2Coefficients tc(n, alpha, p, bundle);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  constexpr int n_rho = 41;
  constexpr int n_off = 3;
  const double offs[n_off] = {0.0, 0.5, 1.0};
  const long budget = std::max(1L, samples / (n_rho * n_off));
  const int jr = std::max(1, int(std::sqrt(double(budget) / 5.0)));
  const int ka = std::max(1, int(budget / jr));
  const GridPoints xy = sample_disk_soa(DiskGrid{0.9995, jr, ka});

  CaratheodoryProbeResult out;
  out.samples = long(xy.re.size()) * n_rho * n_off;
  out.max_re_psi = -std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < xy.re.size(); ++t) {
    const double x = xy.re[t], y = xy.im[t];
    const auto g = tc.G(x, y);
    const double denom = g[0] + 2.0 * g[1];
    if (!strictly_greater(denom, 0.0)) {
      out.precondition_ok = false;
      out.bad_x = x;
      out.bad_y = y;
      out.bad_value = denom;
      return out;
    }
    for (int i = 0; i < n_rho; ++i) {
      const double rho = -2.0 + 4.0 * double(i) / double(n_rho - 1);
      const double sigma_boundary = -(1.0 + rho * rho) / 2.0;
      for (int o = 0; o < n_off; ++o) {
        const double sigma = sigma_boundary - offs[o];
        const double re_psi =
            g[0] * sigma - g[1] * rho * rho + g[2] * rho + g[3];
        if (re_psi > out.max_re_psi) {
          out.max_re_psi = re_psi;
          out.rho_at_max = rho;
          out.x_at_max = x;
          out.y_at_max = y;
          out.vertex_rho_at_max = g[2] / denom;
        }
      }
    }
  }
  return out;
}

LemniscateSample admissibility_sample_lemniscate(double theta, double m) {
  if (!(std::abs(theta) < std::numbers::pi / 4.0))
    throw std::invalid_argument("require |theta| < pi/4");
  if (!(m >= 1.0))
    throw std::invalid_argument("require m >= 1");
  const double root = std::sqrt(2.0 * std::cos(2.0 * theta));
  LemniscateSample out;
  out.r = root * std::polar(1.0, theta);
  out.s = m * std::polar(1.0, 3.0 * theta) / (2.0 * root);
  const double th = 3.0 * m * m / (8.0 * root);
  out.threshold =
      std::isfinite(th) ? th : std::numeric_limits<double>::max();
  return out;
}

} // namespace gft
