#include "gft/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

// AVX2 variants: 4 lanes, per-lane arithmetic identical to the scalar
// reference (mul/sub/add/div/sqrt only, never FMA). Tails of fewer than 4
// points fall through to the scalar table.

namespace gft::kernels {
namespace {

void poly_eval_avx2(const double* c, int deg,
                    const double* zre, const double* zim, std::size_t n,
                    double* wre, double* wim) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(zre + i);
    const __m256d y = _mm256_loadu_pd(zim + i);
    __m256d wr = _mm256_set1_pd(c[deg]);
    __m256d wi = _mm256_setzero_pd();
    for (int k = deg - 1; k >= 0; --k) {
      const __m256d t = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(wr, x), _mm256_mul_pd(wi, y)),
          _mm256_set1_pd(c[k]));
      wi = _mm256_add_pd(_mm256_mul_pd(wr, y), _mm256_mul_pd(wi, x));
      wr = t;
    }
    _mm256_storeu_pd(wre + i, wr);
    _mm256_storeu_pd(wim + i, wi);
  }
  if (i < n) {
    scalar_table().poly_eval(c, deg, zre + i, zim + i, n - i, wre + i, wim + i);
  }
}

void ratio_eval_avx2(double base,
                     const double* pc, int pdeg,
                     const double* qc, int qdeg,
                     const double* zre, const double* zim, std::size_t n,
                     double* wre, double* wim, std::uint8_t* defined,
                     double den_floor) {
  const __m256d vbase = _mm256_set1_pd(base);
  const __m256d vfloor = _mm256_set1_pd(den_floor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(zre + i);
    const __m256d y = _mm256_loadu_pd(zim + i);
    __m256d pr = _mm256_set1_pd(pc[pdeg]);
    __m256d pi = _mm256_setzero_pd();
    for (int k = pdeg - 1; k >= 0; --k) {
      const __m256d t = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(pr, x), _mm256_mul_pd(pi, y)),
          _mm256_set1_pd(pc[k]));
      pi = _mm256_add_pd(_mm256_mul_pd(pr, y), _mm256_mul_pd(pi, x));
      pr = t;
    }
    __m256d qr = _mm256_set1_pd(qc[qdeg]);
    __m256d qi = _mm256_setzero_pd();
    for (int k = qdeg - 1; k >= 0; --k) {
      const __m256d t = _mm256_add_pd(
          _mm256_sub_pd(_mm256_mul_pd(qr, x), _mm256_mul_pd(qi, y)),
          _mm256_set1_pd(qc[k]));
      qi = _mm256_add_pd(_mm256_mul_pd(qr, y), _mm256_mul_pd(qi, x));
      qr = t;
    }
    const __m256d den =
        _mm256_add_pd(_mm256_mul_pd(qr, qr), _mm256_mul_pd(qi, qi));
    const __m256d ok = _mm256_cmp_pd(den, vfloor, _CMP_GE_OQ);
    const int mask = _mm256_movemask_pd(ok);
    defined[i + 0] = (mask & 1) ? 1 : 0;
    defined[i + 1] = (mask & 2) ? 1 : 0;
    defined[i + 2] = (mask & 4) ? 1 : 0;
    defined[i + 3] = (mask & 8) ? 1 : 0;
    const __m256d tr = _mm256_div_pd(
        _mm256_add_pd(_mm256_mul_pd(pr, qr), _mm256_mul_pd(pi, qi)), den);
    const __m256d ti = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(pi, qr), _mm256_mul_pd(pr, qi)), den);
    _mm256_storeu_pd(
        wre + i,
        _mm256_add_pd(vbase, _mm256_sub_pd(_mm256_mul_pd(x, tr),
                                           _mm256_mul_pd(y, ti))));
    _mm256_storeu_pd(
        wim + i,
        _mm256_add_pd(_mm256_mul_pd(x, ti), _mm256_mul_pd(y, tr)));
  }
  if (i < n) {
    scalar_table().ratio_eval(base, pc, pdeg, qc, qdeg, zre + i, zim + i,
                              n - i, wre + i, wim + i, defined + i, den_floor);
  }
}

void disk_margin_avx2(const double* wre, const double* wim, std::size_t n,
                      double center, double radius, double* margin) {
  const __m256d vc = _mm256_set1_pd(center);
  const __m256d vr = _mm256_set1_pd(radius);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(wre + i), vc);
    const __m256d dy = _mm256_loadu_pd(wim + i);
    const __m256d d2 =
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(margin + i, _mm256_sub_pd(vr, _mm256_sqrt_pd(d2)));
  }
  if (i < n) {
    scalar_table().disk_margin(wre + i, wim + i, n - i, center, radius,
                               margin + i);
  }
}

void halfplane_margin_avx2(const double* wre, std::size_t n, double threshold,
                           double* margin) {
  const __m256d vt = _mm256_set1_pd(threshold);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(margin + i,
                     _mm256_sub_pd(_mm256_loadu_pd(wre + i), vt));
  }
  if (i < n) {
    scalar_table().halfplane_margin(wre + i, n - i, threshold, margin + i);
  }
}

} // namespace

const Table* avx2_table() {
  static const Table t{poly_eval_avx2, ratio_eval_avx2, disk_margin_avx2,
                       halfplane_margin_avx2};
  return &t;
}

} // namespace gft::kernels

#else

namespace gft::kernels {
const Table* avx2_table() { return nullptr; }
} // namespace gft::kernels

#endif
