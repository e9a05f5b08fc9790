#include "gft/laguerre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gft {

void validate(const PolynomialSpec& spec) {
  if (spec.degree < 0) {
    throw std::invalid_argument("polynomial degree must be >= 0, got " +
                                std::to_string(spec.degree));
  }
  if (!std::isfinite(spec.alpha) || spec.alpha <= -1.0) {
    throw std::invalid_argument("alpha must be finite and > -1, got " +
                                std::to_string(spec.alpha));
  }
}

double pochhammer(double x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer order must be >= 0");
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= x + j;
  return r;
}

std::vector<double> coefficients(const PolynomialSpec& spec) {
  validate(spec);
  const int n = spec.degree;
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    c[k + 1] = -c[k] * (n - k) / ((spec.alpha + 1.0 + k) * (k + 1));
  }
  return c;
}

std::vector<double> derivative_coefficients(std::vector<double> c, int order) {
  for (int d = 0; d < order; ++d) {
    if (c.size() <= 1) return {};
    for (std::size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * k;
    c.pop_back();
  }
  return c;
}

namespace {

cplx horner(const std::vector<double>& c, cplx z) {
  if (c.empty()) return 0.0;
  cplx w = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) w = w * z + c[k];
  return w;
}

} // namespace

cplx eval(const PolynomialSpec& spec, cplx z, int derivative_order) {
  if (derivative_order < 0) {
    throw std::invalid_argument("derivative order must be >= 0");
  }
  return horner(derivative_coefficients(coefficients(spec), derivative_order),
                z);
}

cplx ode_residual(const PolynomialSpec& spec, cplx z) {
  const auto c0 = coefficients(spec);
  const auto c1 = derivative_coefficients(c0, 1);
  const auto c2 = derivative_coefficients(c1, 1);
  return z * horner(c2, z) + (spec.alpha + 1.0 - z) * horner(c1, z) +
         static_cast<double>(spec.degree) * horner(c0, z);
}

cplx derivative_identity_residual(const PolynomialSpec& spec, cplx z) {
  validate(spec);
  if (spec.degree < 1) {
    throw std::invalid_argument(
        "derivative identity needs degree >= 1, got " +
        std::to_string(spec.degree));
  }
  const PolynomialSpec shifted{spec.degree - 1, spec.alpha + 1.0};
  return eval(spec, z, 1) +
         (spec.degree / (1.0 + spec.alpha)) * eval(shifted, z, 0);
}

cplx hypergeometric_eval(int n, double alpha, cplx z) {
  validate(PolynomialSpec{n, alpha});
  // term_k = (-n)_k / ((alpha+1)_k k!) z^k, built multiplicatively.
  cplx sum = 1.0;
  cplx term = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<double>(-n + k) / ((alpha + 1.0 + k) * (k + 1))) * z;
    sum += term;
  }
  return sum;
}

cplx hermite_relation_residual(int n, cplx z) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const PolynomialSpec spec{n, -0.5};
  const cplx lhs = eval(spec, z * z, 0);
  cplx hkm1 = 1.0;     // H_0
  cplx hk = 2.0 * z;   // H_1
  if (2 * n == 0) hk = hkm1;
  for (int k = 1; k < 2 * n; ++k) {
    const cplx next = 2.0 * z * hk - 2.0 * static_cast<double>(k) * hkm1;
    hkm1 = hk;
    hk = next;
  }
  // prefactor (-1)^n n!/(2n)! = (-1)^n / ( (n+1)(n+2)...(2n) )
  double pref = 1.0;
  for (int j = n + 1; j <= 2 * n; ++j) pref /= j;
  if (n % 2 != 0) pref = -pref;
  return lhs - pref * hk;
}

} // namespace gft
