#include "gft/functional.hpp"

#include <stdexcept>

#include "gft/kernels.hpp"

namespace gft {
namespace {

std::vector<double> nonempty(std::vector<double> c) {
  if (c.empty()) c.push_back(0.0);
  return c;
}

// Coefficients of z * M (a zero constant term prepended).
std::vector<double> prefixed(const std::vector<double>& c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k];
  return out;
}

} // namespace

void validate(const Functional& f) {
  validate(f.base);
  if (f.kind == FunctionalKind::Identity && f.prefactor_z) {
    throw std::invalid_argument(
        "the identity functional takes no z prefactor");
  }
}

RatioForm ratio_form(const Functional& f) {
  validate(f);
  const std::vector<double> c = coefficients(f.base);
  RatioForm r;
  switch (f.kind) {
    case FunctionalKind::Identity: {
      // M(z) = c0 + z * (c1 + c2 z + ...)
      r.base = c[0];
      r.P = nonempty(std::vector<double>(c.begin() + 1, c.end()));
      r.Q = {1.0};
      break;
    }
    case FunctionalKind::StarlikeRatio: {
      // z F'/F; with F = z M this is 1 + z M'/M, otherwise z M'/M.
      r.base = f.prefactor_z ? 1.0 : 0.0;
      r.P = nonempty(derivative_coefficients(c, 1));
      r.Q = c;
      break;
    }
    case FunctionalKind::ConvexityRatio: {
      // 1 + z F''/F'.
      const std::vector<double> F = f.prefactor_z ? prefixed(c) : c;
      r.base = 1.0;
      r.P = nonempty(derivative_coefficients(F, 2));
      r.Q = nonempty(derivative_coefficients(F, 1));
      break;
    }
  }
  return r;
}

FunctionalValue evaluate_functional(const Functional& f, cplx z) {
  const RatioForm r = ratio_form(f);
  const double zre = z.real();
  const double zim = z.imag();
  double wre = 0.0, wim = 0.0;
  std::uint8_t defined = 0;
  kernels::ratio_eval(r.base, r.P.data(), static_cast<int>(r.P.size()) - 1,
                      r.Q.data(), static_cast<int>(r.Q.size()) - 1, &zre, &zim,
                      1, &wre, &wim, &defined,
                      functional_den_floor * functional_den_floor);
  return {cplx(wre, wim), defined != 0};
}

} // namespace gft
