#include "gft/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gft {
namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx w = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) w = w * z + c[k];
  return w;
}

cplx horner_derivative(const std::vector<cplx>& c, cplx z) {
  if (c.size() <= 1) return 0.0;
  cplx w = c.back() * static_cast<double>(c.size() - 1);
  for (std::size_t k = c.size() - 2; k >= 1; --k) {
    w = w * z + c[k] * static_cast<double>(k);
  }
  return w;
}

} // namespace

std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs) {
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) {
    throw std::invalid_argument("roots of the zero polynomial are undefined");
  }
  std::size_t top = coeffs.size();
  while (top > 0 && std::abs(coeffs[top - 1]) <= scale * 1e-300) --top;
  const int deg = static_cast<int>(top) - 1;
  if (deg <= 0) return {};

  if (deg == 1) {
    return {cplx(-coeffs[0] / coeffs[1], 0.0)};
  }
  if (deg == 2) {
    const double a = coeffs[2], b = coeffs[1], c = coeffs[0];
    const cplx disc = std::sqrt(cplx(b * b - 4.0 * a * c, 0.0));
    // The larger-magnitude root first, its mate by Vieta, avoiding
    // cancellation.
    const cplx q = (b >= 0.0) ? (-b - disc) * 0.5 : (-b + disc) * 0.5;
    if (std::abs(q) == 0.0) return {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    return {q / a, c / q};
  }

  // Monic normalization, then simultaneous iteration from the standard
  // (0.4 + 0.9i)^k spiral start.
  std::vector<cplx> c(top);
  for (std::size_t k = 0; k < top; ++k) c[k] = coeffs[k] / coeffs[top - 1];
  std::vector<cplx> w(static_cast<std::size_t>(deg));
  const cplx seed(0.4, 0.9);
  cplx p = 1.0;
  for (int k = 0; k < deg; ++k) {
    p *= seed;
    w[k] = p;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < deg; ++i) {
      cplx den = 1.0;
      for (int j = 0; j < deg; ++j) {
        if (j != i) den *= w[i] - w[j];
      }
      if (std::abs(den) == 0.0) {
        // Coincident iterates: nudge and continue.
        w[i] += cplx(1e-8, 1e-8);
        worst = 1.0;
        continue;
      }
      const cplx step = horner(c, w[i]) / den;
      w[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(w[i])));
    }
    if (worst < 1e-14) break;
  }
  // Newton polish tightens each root to machine residual when simple.
  for (int i = 0; i < deg; ++i) {
    for (int it = 0; it < 3; ++it) {
      const cplx d = horner_derivative(c, w[i]);
      if (std::abs(d) == 0.0) break;
      w[i] -= horner(c, w[i]) / d;
    }
  }
  return w;
}

double min_root_modulus(const std::vector<double>& coeffs) {
  const auto roots = polynomial_roots(coeffs);
  double m = std::numeric_limits<double>::infinity();
  for (const cplx& r : roots) m = std::min(m, std::abs(r));
  return m;
}

} // namespace gft
