#pragma once

#include <cstdint>
#include <vector>

#include "gft/domains.hpp"
#include "gft/functional.hpp"
#include "gft/grid.hpp"

namespace gft {

// Empirical result of sampling a functional's image against a target region.
// verdict <=> worst_margin > 0 and undefined_points == 0; the witness is the
// grid point attaining the worst margin (ties broken by lexicographically
// smallest (Re z, Im z), making reports independent of evaluation order).
// When every point is undefined: worst_margin = -1 and witness (0,0).
struct SubordinationReport {
  bool verdict = false;
  double worst_margin = 0.0;
  cplx witness{};
  long samples_checked = 0;
  long undefined_points = 0;
};

// Functional values over a fixed point set, kernel-evaluated once and
// reusable against many regions (the scanner's hot path).
struct GridValues {
  std::vector<double> wre;
  std::vector<double> wim;
  std::vector<std::uint8_t> defined;
  long undefined_count = 0;
};

GridValues evaluate_grid(const Functional& f, const GridPoints& pts);

SubordinationReport reduce_margins(const GridValues& vals,
                                   const GridPoints& pts,
                                   const RegionDescriptor& region);

SubordinationReport reduce_margins(const GridValues& vals,
                                   const GridPoints& pts,
                                   const TargetDomain& domain);

// Sampling certificate for f(D) inside the target domain on the given grid.
// Requires f(0) = 1 within 1e-12 (every target here passes through 1);
// throws std::invalid_argument("normalization-violation ...") otherwise.
SubordinationReport check_subordination(const Functional& f,
                                        const TargetDomain& domain,
                                        const DiskGrid& grid);

// True iff the derivative_order-th derivative of M_{n,alpha} has no root of
// modulus <= r_max. Orders above the degree give the zero polynomial and
// return false. Any root with modulus within 1e-6 of r_max throws
// ambiguous_root_error.
bool nonvanishing_in_disk(const PolynomialSpec& spec, int derivative_order,
                          double r_max);

inline constexpr double nonvanishing_guard_band = 1e-6;

} // namespace gft
