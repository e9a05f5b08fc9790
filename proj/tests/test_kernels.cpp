#include <cstdlib>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "gft/kernels.hpp"

using namespace gft::kernels;

namespace {

// Raw 53-bit mantissa mapping; distribution adapters are not portable across
// standard libraries, the raw stream is.
double u01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double sym(std::mt19937_64& rng) { return 2.0 * u01(rng) - 1.0; }

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Batch {
  std::vector<double> re, im;
};

Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  Batch b;
  b.re.resize(n);
  b.im.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.re[i] = sym(rng);
    b.im[i] = sym(rng);
  }
  return b;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar table is always available") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(scalar_table().poly_eval != nullptr);
}

TEST_CASE("poly_eval scalar reference values") {
  // p(z) = 1 - z/2 at z = 0.5 -> 0.75; at z = i -> 1 - i/2
  const double c[] = {1.0, -0.5};
  const double zre[] = {0.5, 0.0};
  const double zim[] = {0.0, 1.0};
  double wre[2], wim[2];
  scalar_table().poly_eval(c, 1, zre, zim, 2, wre, wim);
  CHECK(wre[0] == 0.75);
  CHECK(wim[0] == 0.0);
  CHECK(wre[1] == 1.0);
  CHECK(wim[1] == -0.5);
}

TEST_CASE("ratio_eval matches naive quotient arithmetic") {
  // w = base + z P/Q with P = 2, Q = 1 + z: at z = 1, w = 3 + 1*2/2 = 4
  const double p[] = {2.0};
  const double q[] = {1.0, 1.0};
  const double zre[] = {1.0};
  const double zim[] = {0.0};
  double wre, wim;
  std::uint8_t defined;
  scalar_table().ratio_eval(3.0, p, 0, q, 1, zre, zim, 1, &wre, &wim,
                            &defined, 1e-26);
  CHECK(defined == 1);
  CHECK(wre == 4.0);
  CHECK(wim == 0.0);
}

TEST_CASE("ratio_eval flags small denominators") {
  const double p[] = {1.0};
  const double q[] = {-1.0, 1.0}; // Q(z) = z - 1
  const double zre[] = {1.0, 0.0};
  const double zim[] = {0.0, 0.0};
  double wre[2], wim[2];
  std::uint8_t defined[2];
  scalar_table().ratio_eval(0.0, p, 0, q, 1, zre, zim, 2, wre, wim, defined,
                            1e-26);
  CHECK(defined[0] == 0);
  CHECK(defined[1] == 1);
  CHECK(wre[1] == 0.0); // 0 + 0 * (1/-1)
}

TEST_CASE("margin kernels") {
  const double wre[] = {1.0, 4.0};
  const double wim[] = {0.0, 3.0};
  double margin[2];
  scalar_table().disk_margin(wre, wim, 2, 0.0, 6.0, margin);
  CHECK(margin[0] == 5.0);
  CHECK(margin[1] == 1.0); // 6 - |4+3i| = 1
  scalar_table().halfplane_margin(wre, 2, 0.5, margin);
  CHECK(margin[0] == 0.5);
  CHECK(margin[1] == 3.5);
}

#if defined(__x86_64__)
TEST_CASE("avx2 variants are bit-identical to scalar") {
  if (!isa_available(Isa::Avx2)) return; // CPU without AVX2
  const Table& s = scalar_table();
  const Table& v = *avx2_table();
  std::mt19937_64 rng(0x51a3c0de);

  // Sizes straddle the 4-lane width to exercise the scalar tail.
  for (std::size_t n : {std::size_t(1), std::size_t(3), std::size_t(4),
                        std::size_t(5), std::size_t(8), std::size_t(67)}) {
    for (int deg = 0; deg <= 8; ++deg) {
      std::vector<double> c(std::size_t(deg) + 1);
      for (double& x : c) x = sym(rng);
      const Batch z = random_batch(rng, n);

      std::vector<double> wre_s(n), wim_s(n), wre_v(n), wim_v(n);
      s.poly_eval(c.data(), deg, z.re.data(), z.im.data(), n, wre_s.data(),
                  wim_s.data());
      v.poly_eval(c.data(), deg, z.re.data(), z.im.data(), n, wre_v.data(),
                  wim_v.data());
      CHECK(bit_equal(wre_s, wre_v));
      CHECK(bit_equal(wim_s, wim_v));

      std::vector<double> qc(std::size_t(deg) + 1);
      for (double& x : qc) x = sym(rng);
      std::vector<double> r_s(n), ri_s(n), r_v(n), ri_v(n);
      std::vector<std::uint8_t> d_s(n), d_v(n);
      const double base = sym(rng);
      s.ratio_eval(base, c.data(), deg, qc.data(), deg, z.re.data(),
                   z.im.data(), n, r_s.data(), ri_s.data(), d_s.data(),
                   1e-26);
      v.ratio_eval(base, c.data(), deg, qc.data(), deg, z.re.data(),
                   z.im.data(), n, r_v.data(), ri_v.data(), d_v.data(),
                   1e-26);
      CHECK(d_s == d_v);
      for (std::size_t i = 0; i < n; ++i) {
        if (!d_s[i]) continue; // unspecified lanes
        CHECK(r_s[i] == r_v[i]);
        CHECK(ri_s[i] == ri_v[i]);
      }

      std::vector<double> m_s(n), m_v(n);
      const double center = sym(rng), radius = 1.0 + u01(rng);
      s.disk_margin(z.re.data(), z.im.data(), n, center, radius, m_s.data());
      v.disk_margin(z.re.data(), z.im.data(), n, center, radius, m_v.data());
      CHECK(bit_equal(m_s, m_v));
      const double thr = sym(rng);
      s.halfplane_margin(z.re.data(), n, thr, m_s.data());
      v.halfplane_margin(z.re.data(), n, thr, m_v.data());
      CHECK(bit_equal(m_s, m_v));
    }
  }
}
#endif

TEST_CASE("force_isa switches the dispatch and rejects unavailable ISAs") {
  const Isa before = active_isa();
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  if (!isa_available(Isa::Neon)) {
    CHECK_THROWS_AS(force_isa(Isa::Neon), std::invalid_argument);
    CHECK(active_isa() == Isa::Scalar); // unchanged after the throw
  }
  force_isa(Isa::Auto);
  CHECK(active_isa() == before);
}

TEST_CASE("GFT_SIMD environment override") {
  setenv("GFT_SIMD", "scalar", 1);
  force_isa(Isa::Auto); // re-detect under the override
  CHECK(active_isa() == Isa::Scalar);
  unsetenv("GFT_SIMD");
  force_isa(Isa::Auto);
  CHECK((active_isa() == Isa::Scalar || active_isa() == Isa::Avx2 ||
         active_isa() == Isa::Neon));
}

TEST_CASE("isa_name round trip") {
  CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
  CHECK(std::string(isa_name(Isa::Avx2)) == "avx2");
  CHECK(std::string(isa_name(Isa::Neon)) == "neon");
}

} // TEST_SUITE
