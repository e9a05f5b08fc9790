#pragma once

#include <vector>

#include "gft/laguerre.hpp"
#include "gft/types.hpp"

namespace gft {

// Functionals of F, where F = M_{n,alpha} or, with the prefactor flag,
// F = z M_{n,alpha}:
//   Identity       M_{n,alpha}(z) itself (prefactor flag not allowed)
//   StarlikeRatio  z F'(z) / F(z)
//   ConvexityRatio 1 + z F''(z) / F'(z)
enum class FunctionalKind { Identity, StarlikeRatio, ConvexityRatio };

struct Functional {
  FunctionalKind kind = FunctionalKind::Identity;
  PolynomialSpec base{};
  bool prefactor_z = false;
};

void validate(const Functional& f);

struct FunctionalValue {
  cplx value{};
  bool defined = true;
};

// Every functional above reduces to w = base + z P(z)/Q(z) with real
// polynomial P, Q (Identity: P = the coefficient tail, Q = 1). This is the
// form the batch kernels consume.
struct RatioForm {
  double base = 0.0;
  std::vector<double> P;
  std::vector<double> Q;
};

RatioForm ratio_form(const Functional& f);

// Denominator floor: the point is undefined when |Q(z)| < 1e-13.
inline constexpr double functional_den_floor = 1e-13;

FunctionalValue evaluate_functional(const Functional& f, cplx z);

} // namespace gft
