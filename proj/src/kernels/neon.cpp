#include "gft/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON variants: 2 lanes, mirroring the scalar reference op-for-op
// (vmulq/vsubq/vaddq/vdivq/vsqrtq, never vfmaq). Written to the same
// bit-equivalence contract as the AVX2 variants.

namespace gft::kernels {
namespace {

void poly_eval_neon(const double* c, int deg,
                    const double* zre, const double* zim, std::size_t n,
                    double* wre, double* wim) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(zre + i);
    const float64x2_t y = vld1q_f64(zim + i);
    float64x2_t wr = vdupq_n_f64(c[deg]);
    float64x2_t wi = vdupq_n_f64(0.0);
    for (int k = deg - 1; k >= 0; --k) {
      const float64x2_t t = vaddq_f64(
          vsubq_f64(vmulq_f64(wr, x), vmulq_f64(wi, y)), vdupq_n_f64(c[k]));
      wi = vaddq_f64(vmulq_f64(wr, y), vmulq_f64(wi, x));
      wr = t;
    }
    vst1q_f64(wre + i, wr);
    vst1q_f64(wim + i, wi);
  }
  if (i < n) {
    scalar_table().poly_eval(c, deg, zre + i, zim + i, n - i, wre + i, wim + i);
  }
}

void ratio_eval_neon(double base,
                     const double* pc, int pdeg,
                     const double* qc, int qdeg,
                     const double* zre, const double* zim, std::size_t n,
                     double* wre, double* wim, std::uint8_t* defined,
                     double den_floor) {
  const float64x2_t vbase = vdupq_n_f64(base);
  const float64x2_t vfloor = vdupq_n_f64(den_floor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(zre + i);
    const float64x2_t y = vld1q_f64(zim + i);
    float64x2_t pr = vdupq_n_f64(pc[pdeg]);
    float64x2_t pi = vdupq_n_f64(0.0);
    for (int k = pdeg - 1; k >= 0; --k) {
      const float64x2_t t = vaddq_f64(
          vsubq_f64(vmulq_f64(pr, x), vmulq_f64(pi, y)), vdupq_n_f64(pc[k]));
      pi = vaddq_f64(vmulq_f64(pr, y), vmulq_f64(pi, x));
      pr = t;
    }
    float64x2_t qr = vdupq_n_f64(qc[qdeg]);
    float64x2_t qi = vdupq_n_f64(0.0);
    for (int k = qdeg - 1; k >= 0; --k) {
      const float64x2_t t = vaddq_f64(
          vsubq_f64(vmulq_f64(qr, x), vmulq_f64(qi, y)), vdupq_n_f64(qc[k]));
      qi = vaddq_f64(vmulq_f64(qr, y), vmulq_f64(qi, x));
      qr = t;
    }
    const float64x2_t den = vaddq_f64(vmulq_f64(qr, qr), vmulq_f64(qi, qi));
    const uint64x2_t ok = vcgeq_f64(den, vfloor);
    defined[i + 0] = vgetq_lane_u64(ok, 0) ? 1 : 0;
    defined[i + 1] = vgetq_lane_u64(ok, 1) ? 1 : 0;
    const float64x2_t tr =
        vdivq_f64(vaddq_f64(vmulq_f64(pr, qr), vmulq_f64(pi, qi)), den);
    const float64x2_t ti =
        vdivq_f64(vsubq_f64(vmulq_f64(pi, qr), vmulq_f64(pr, qi)), den);
    vst1q_f64(wre + i, vaddq_f64(vbase, vsubq_f64(vmulq_f64(x, tr),
                                                  vmulq_f64(y, ti))));
    vst1q_f64(wim + i, vaddq_f64(vmulq_f64(x, ti), vmulq_f64(y, tr)));
  }
  if (i < n) {
    scalar_table().ratio_eval(base, pc, pdeg, qc, qdeg, zre + i, zim + i,
                              n - i, wre + i, wim + i, defined + i, den_floor);
  }
}

void disk_margin_neon(const double* wre, const double* wim, std::size_t n,
                      double center, double radius, double* margin) {
  const float64x2_t vc = vdupq_n_f64(center);
  const float64x2_t vr = vdupq_n_f64(radius);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(wre + i), vc);
    const float64x2_t dy = vld1q_f64(wim + i);
    const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    vst1q_f64(margin + i, vsubq_f64(vr, vsqrtq_f64(d2)));
  }
  if (i < n) {
    scalar_table().disk_margin(wre + i, wim + i, n - i, center, radius,
                               margin + i);
  }
}

void halfplane_margin_neon(const double* wre, std::size_t n, double threshold,
                           double* margin) {
  const float64x2_t vt = vdupq_n_f64(threshold);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(margin + i, vsubq_f64(vld1q_f64(wre + i), vt));
  }
  if (i < n) {
    scalar_table().halfplane_margin(wre + i, n - i, threshold, margin + i);
  }
}

} // namespace

const Table* neon_table() {
  static const Table t{poly_eval_neon, ratio_eval_neon, disk_margin_neon,
                       halfplane_margin_neon};
  return &t;
}

} // namespace gft::kernels

#else

namespace gft::kernels {
const Table* neon_table() { return nullptr; }
} // namespace gft::kernels

#endif
