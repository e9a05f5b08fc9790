#pragma once

#include <cstddef>
#include <cstdint>

// Batch kernels over structure-of-arrays complex data. Every operation has a
// scalar reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected at runtime. All variants perform the same arithmetic in
// the same per-lane order with no FMA contraction, so results are
// bit-identical across ISAs; tests assert this.

namespace gft::kernels {

enum class Isa { Auto, Scalar, Avx2, Neon };

// ISA in effect for subsequent kernel calls. Resolution order: explicit
// force_isa() > GFT_SIMD env var (auto|scalar|avx2|neon) > CPU detection.
Isa active_isa();
// Test hook; throws std::invalid_argument if the ISA is unavailable here.
void force_isa(Isa isa);
bool isa_available(Isa isa);
const char* isa_name(Isa isa);

// w = p(z) for a real-coefficient polynomial, Horner form.
// coeff holds c_0..c_deg (ascending powers), deg >= 0.
void poly_eval(const double* coeff, int deg,
               const double* zre, const double* zim, std::size_t n,
               double* wre, double* wim);

// w = base + z * P(z)/Q(z); defined[i] = 0 when |Q(z_i)|^2 < den_floor
// (w is unspecified at undefined lanes).
void ratio_eval(double base,
                const double* pc, int pdeg,
                const double* qc, int qdeg,
                const double* zre, const double* zim, std::size_t n,
                double* wre, double* wim, std::uint8_t* defined,
                double den_floor);

// margin[i] = radius - |w_i - center| for a disk centered on the real axis.
void disk_margin(const double* wre, const double* wim, std::size_t n,
                 double center, double radius, double* margin);

// margin[i] = Re w_i - threshold.
void halfplane_margin(const double* wre, std::size_t n,
                      double threshold, double* margin);

// Per-ISA tables, linked unconditionally; unavailable ISAs hold null entries.
struct Table {
  void (*poly_eval)(const double*, int, const double*, const double*,
                    std::size_t, double*, double*);
  void (*ratio_eval)(double, const double*, int, const double*, int,
                     const double*, const double*, std::size_t,
                     double*, double*, std::uint8_t*, double);
  void (*disk_margin)(const double*, const double*, std::size_t,
                      double, double, double*);
  void (*halfplane_margin)(const double*, std::size_t, double, double*);
};

const Table& scalar_table();
const Table* avx2_table(); // null unless compiled for x86-64
const Table* neon_table(); // null unless compiled for aarch64

} // namespace gft::kernels
