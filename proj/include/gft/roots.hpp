#pragma once

#include <stdexcept>
#include <vector>

#include "gft/types.hpp"

namespace gft {

// Raised when a polynomial root sits inside the guard band around a circle
// |z| = r, making an inside/outside call numerically meaningless.
struct ambiguous_root_error : std::runtime_error {
  ambiguous_root_error(double modulus_, double r_, double band_)
      : std::runtime_error("root modulus " + std::to_string(modulus_) +
                           " within " + std::to_string(band_) +
                           " of the circle |z| = " + std::to_string(r_)),
        modulus(modulus_), r(r_), band(band_) {}
  double modulus;
  double r;
  double band;
};

// All complex roots of a real-coefficient polynomial given by ascending-power
// coefficients. Trailing (near-)zero leading coefficients are trimmed
// relative to the largest coefficient. Degree <= 2 uses closed forms; higher
// degrees use a simultaneous (Durand-Kerner) iteration followed by a Newton
// polish. Returns an empty vector for constants. Throws std::invalid_argument
// for an identically-zero polynomial.
std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs);

// Smallest root modulus, +inf when there are no roots.
double min_root_modulus(const std::vector<double>& coeffs);

} // namespace gft
