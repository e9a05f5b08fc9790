#include "gft/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace gft::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  const char* env = std::getenv("GFT_SIMD");
  if (env != nullptr && std::strlen(env) > 0 &&
      std::strcmp(env, "auto") != 0) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2))
      return Isa::Avx2;
    if (std::strcmp(env, "neon") == 0 && isa_available(Isa::Neon))
      return Isa::Neon;
    // Unknown or unavailable request: fall back to the reference kernels.
    return Isa::Scalar;
  }
  if (avx2_table() != nullptr && cpu_has_avx2()) return Isa::Avx2;
  if (neon_table() != nullptr) return Isa::Neon;
  return Isa::Scalar;
}

struct State {
  std::atomic<const Table*> table{nullptr};
  std::atomic<Isa> isa{Isa::Auto};
};

State& state() {
  static State s;
  return s;
}

const Table& resolved() {
  const Table* t = state().table.load(std::memory_order_acquire);
  if (t == nullptr) {
    const Isa isa = detect();
    force_isa(isa);
    t = state().table.load(std::memory_order_acquire);
  }
  return *t;
}

} // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Auto: return true;
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2_table() != nullptr && cpu_has_avx2();
    case Isa::Neon: return neon_table() != nullptr;
  }
  return false;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Auto: return "auto";
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

void force_isa(Isa isa) {
  if (isa == Isa::Auto) {
    state().table.store(nullptr, std::memory_order_release);
    state().isa.store(Isa::Auto, std::memory_order_release);
    resolved();
    return;
  }
  if (!isa_available(isa)) {
    throw std::invalid_argument(std::string("kernel ISA unavailable: ") +
                                isa_name(isa));
  }
  const Table* t = &scalar_table();
  if (isa == Isa::Avx2) t = avx2_table();
  if (isa == Isa::Neon) t = neon_table();
  state().isa.store(isa, std::memory_order_release);
  state().table.store(t, std::memory_order_release);
}

Isa active_isa() {
  resolved();
  return state().isa.load(std::memory_order_acquire);
}

void poly_eval(const double* coeff, int deg,
               const double* zre, const double* zim, std::size_t n,
               double* wre, double* wim) {
  resolved().poly_eval(coeff, deg, zre, zim, n, wre, wim);
}

void ratio_eval(double base, const double* pc, int pdeg,
                const double* qc, int qdeg,
                const double* zre, const double* zim, std::size_t n,
                double* wre, double* wim, std::uint8_t* defined,
                double den_floor) {
  resolved().ratio_eval(base, pc, pdeg, qc, qdeg, zre, zim, n, wre, wim,
                        defined, den_floor);
}

void disk_margin(const double* wre, const double* wim, std::size_t n,
                 double center, double radius, double* margin) {
  resolved().disk_margin(wre, wim, n, center, radius, margin);
}

void halfplane_margin(const double* wre, std::size_t n, double threshold,
                      double* margin) {
  resolved().halfplane_margin(wre, n, threshold, margin);
}

} // namespace gft::kernels
