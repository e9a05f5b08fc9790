#include "gft/kernels.hpp"

#include <cmath>

// Reference kernels. The expression shapes (parenthesization, order of
// operations) are load-bearing: the SIMD variants replicate them lane-wise
// and the equivalence tests require bit-identical results.

namespace gft::kernels {
namespace {

void poly_eval_scalar(const double* c, int deg,
                      const double* zre, const double* zim, std::size_t n,
                      double* wre, double* wim) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = zre[i];
    const double y = zim[i];
    double wr = c[deg];
    double wi = 0.0;
    for (int k = deg - 1; k >= 0; --k) {
      const double t = ((wr * x) - (wi * y)) + c[k];
      wi = (wr * y) + (wi * x);
      wr = t;
    }
    wre[i] = wr;
    wim[i] = wi;
  }
}

void ratio_eval_scalar(double base,
                       const double* pc, int pdeg,
                       const double* qc, int qdeg,
                       const double* zre, const double* zim, std::size_t n,
                       double* wre, double* wim, std::uint8_t* defined,
                       double den_floor) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = zre[i];
    const double y = zim[i];
    double pr = pc[pdeg];
    double pi = 0.0;
    for (int k = pdeg - 1; k >= 0; --k) {
      const double t = ((pr * x) - (pi * y)) + pc[k];
      pi = (pr * y) + (pi * x);
      pr = t;
    }
    double qr = qc[qdeg];
    double qi = 0.0;
    for (int k = qdeg - 1; k >= 0; --k) {
      const double t = ((qr * x) - (qi * y)) + qc[k];
      qi = (qr * y) + (qi * x);
      qr = t;
    }
    const double den = (qr * qr) + (qi * qi);
    defined[i] = den >= den_floor ? 1 : 0;
    const double tr = ((pr * qr) + (pi * qi)) / den;
    const double ti = ((pi * qr) - (pr * qi)) / den;
    wre[i] = base + ((x * tr) - (y * ti));
    wim[i] = (x * ti) + (y * tr);
  }
}

void disk_margin_scalar(const double* wre, const double* wim, std::size_t n,
                        double center, double radius, double* margin) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = wre[i] - center;
    const double dy = wim[i];
    margin[i] = radius - std::sqrt((dx * dx) + (dy * dy));
  }
}

void halfplane_margin_scalar(const double* wre, std::size_t n,
                             double threshold, double* margin) {
  for (std::size_t i = 0; i < n; ++i) {
    margin[i] = wre[i] - threshold;
  }
}

} // namespace

const Table& scalar_table() {
  static const Table t{poly_eval_scalar, ratio_eval_scalar,
                       disk_margin_scalar, halfplane_margin_scalar};
  return t;
}

} // namespace gft::kernels
