#pragma once

#include <array>
#include <string>
#include <vector>

#include "gft/domains.hpp"
#include "gft/functional.hpp"
#include "gft/types.hpp"

namespace gft {

// Weight convention for the quadratic-form coefficient bundle below. The two
// conventions differ in the integer weight mu carried through the
// second-derivative reduction:
//   Stated  -> mu = n + 1
//   Derived -> mu = 1 - n
// The q-form residual (thm2_q_residual) vanishes identically only under
// Derived; Stated leaves the structured remainder -2 n z A(z)^2 with
// A = (1+D) q + (1-D). Both are kept so the discrepancy stays auditable.
enum class CoefficientBundle { Stated, Derived };

const char* bundle_name(CoefficientBundle b);

// One evaluated inequality; lhs/rhs are both reported so near-boundary cases
// are auditable. Inapplicable clauses (degenerate branches) are excluded from
// the holds conjunction but still listed.
struct Clause {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  bool applicable = true;
};

struct ConditionVerdict {
  bool holds = false;
  std::vector<Clause> clauses;
};

// lhs > rhs with a 1e-12 relative tolerance band (boundary cases fail).
bool strictly_greater(double lhs, double rhs);

// The coefficient bundle of the convexity condition: quadratic-form
// coefficients F1..F4 (functions of z), their real samplings G1..G4 at
// x = Re z, y = Im z, the quadratic H(x) = h1 x^2 + h2 x + h3, and the
// derived scalars A, B, K, nu.
struct Thm2Coefficients {
  Thm2Coefficients(int n, double alpha, const JanowskiParams& p,
                   CoefficientBundle bundle = CoefficientBundle::Stated);

  int n;
  double alpha;
  JanowskiParams p;
  CoefficientBundle bundle;

  double mu() const; // Stated: n+1; Derived: 1-n
  double K() const;  // C - D
  double A() const;  // K^2 + D K (alpha+1)
  double B() const;  // mu (1-D^2) - D K

  std::array<cplx, 4> F(cplx z) const;
  std::array<double, 4> G(double x, double y) const;
  std::array<double, 3> h() const;
  double nu() const; // -h2 / (2 h1); +-inf when h1 == 0
};

// Single clause: (1/e)(alpha - 1 - n) > 0.
ConditionVerdict thm1_condition(int n, double alpha);

// The analytic clauses of the convexity condition (everything except the
// nonvanishing pair): h1-positive, the eq4/eq5 branch, and the max-vs-min
// comparison. Exposed so scans can amortize root finding per (n, alpha).
std::vector<Clause> thm2_algebra_clauses(const Thm2Coefficients& tc);

// Min root modulus of the order-th derivative of M_{n,alpha} against r_max;
// the modulus is clamped to 1e300 when there are no roots. Throws
// ambiguous_root_error inside the guard band.
Clause nonvanishing_clause(const PolynomialSpec& spec, int order,
                           double r_max);

// Convexity sufficient condition. Clauses, in order:
//   h1-positive            h1 > 0
//   eq4 / eq5              selected by the sign of K(1+D) + mu (1+D)^2;
//                          both inapplicable when the selector is 0 (D = -1)
//   max-vs-vertex-min      when |nu| < 1:  max{(B-A)^2, (A+B)^2} < h3 - h2^2/(4 h1)
//   monotone-slope         otherwise: 2 h1 + h2 <= 0
//   max-vs-edge-min        and the same max < h1 + h2 + h3
//   nonvanishing-order-1   min |root of M'|  vs r_max
//   nonvanishing-order-2   min |root of M''| vs r_max
// holds <=> every applicable clause is satisfied. Propagates
// ambiguous_root_error from the nonvanishing checks.
ConditionVerdict thm2_condition(int n, double alpha, const JanowskiParams& p,
                                double r_max,
                                CoefficientBundle bundle = CoefficientBundle::Stated);

// End-to-end algebra audit: builds
//   q = (K phi' + (1-D) z phi'') / (K phi' - (1+D) z phi''),  phi = M_{n,alpha},
// its analytic derivative, and returns F1 z q' + F2 q^2 + F3 q + F4.
// Vanishes identically under the Derived bundle. Points where the quotient is
// ill-conditioned (|q| > 30 or |z q'| > 1e3 or |denominator| < 1e-13) are
// reported undefined; the residual there is numerically meaningless.
FunctionalValue thm2_q_residual(int n, double alpha, const JanowskiParams& p,
                                cplx z,
                                CoefficientBundle bundle = CoefficientBundle::Derived);

// Starlikeness of z M_{n,alpha} via the shift (n, alpha) -> (n+1, alpha-1):
// exactly thm2_condition(n+1, alpha-1, ...). Requires alpha > 0.
ConditionVerdict corollary_starlike(int n, double alpha,
                                    const JanowskiParams& p, double r_max,
                                    CoefficientBundle bundle = CoefficientBundle::Stated);

// (z M_{n,alpha})'(z)/M_{n,alpha}(z) - (1 + z M''_{n+1,alpha-1}/M'_{n+1,alpha-1});
// identically zero. Undefined where |M_{n,alpha}| <= 1e-8 or the shifted
// first derivative is below 1e-13.
FunctionalValue corollary_identity_residual(int n, double alpha, cplx z);

// Boundary-data probe for the exponential target. Deterministic schedule over
// theta in [0, 2pi), m in [1, m_max], z on a coarse disk grid, and the
// constraint-boundary stratum plus fixed-seed admissible offsets; returns the
// minimum of |psi| with psi = t + (alpha+1-z) s + r n z built from
// r = e^{e^{i theta}}, s = m e^{i theta} e^{e^{i theta}},
// t = -s + (c + i beta) e^{i theta} e^{e^{i theta}}, c >= 0.
// Requires thm1_condition(n, alpha) to hold.
struct ExpProbeResult {
  double min_abs_psi = 0.0;
  double bound = 0.0; // (1/e)(alpha - 1 - n)
  long samples = 0;
  double arg_theta = 0.0;
  double arg_m = 0.0;
  cplx arg_z{};
};

ExpProbeResult admissibility_probe_exponential(int n, double alpha,
                                               long samples,
                                               double m_max = 2.0);

// Boundary-data probe for the disk target: samples
// Re psi = G1 sigma - G2 rho^2 + G3 rho + G4 over rho in [-2,2], sigma on and
// below the boundary -(1+rho^2)/2, and (x,y) on a polar grid in the unit
// disk. Reports precondition-violated when G1 + 2 G2 <= 0 at any sampled
// (x,y) (the vertex argument needs positivity); otherwise the maximum of
// Re psi, its maximizer, and the vertex G3/(G1+2G2) at the maximizing (x,y).
struct CaratheodoryProbeResult {
  bool precondition_ok = true;
  double max_re_psi = 0.0;
  double rho_at_max = 0.0;
  double x_at_max = 0.0;
  double y_at_max = 0.0;
  double vertex_rho_at_max = 0.0;
  double bad_x = 0.0, bad_y = 0.0, bad_value = 0.0; // first violation
  long samples = 0;
};

CaratheodoryProbeResult admissibility_probe_caratheodory(
    int n, double alpha, const JanowskiParams& p, long samples,
    CoefficientBundle bundle = CoefficientBundle::Stated);

// Boundary triple generators for the lemniscate target, exposed for future
// probes; nothing in this artifact consumes them beyond tests.
// r = sqrt(2 cos 2theta) e^{i theta}, s = m e^{3 i theta}/(2 sqrt(2 cos 2theta)),
// threshold = 3 m^2 / (8 sqrt(2 cos 2theta)), clamped to DBL_MAX on overflow.
// Requires |theta| < pi/4 and m >= 1.
struct LemniscateSample {
  cplx r{};
  cplx s{};
  double threshold = 0.0;
};

LemniscateSample admissibility_sample_lemniscate(double theta, double m);

} // namespace gft
