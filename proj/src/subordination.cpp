#include "gft/subordination.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gft/kernels.hpp"
#include "gft/roots.hpp"

namespace gft {
namespace {

SubordinationReport reduce_margin_buffer(const std::vector<double>& margin,
                                         const GridValues& vals,
                                         const GridPoints& pts) {
  SubordinationReport rep;
  rep.samples_checked = static_cast<long>(margin.size());
  rep.undefined_points = vals.undefined_count;
  bool have = false;
  double best = 0.0;
  double bre = 0.0, bim = 0.0;
  for (std::size_t i = 0; i < margin.size(); ++i) {
    if (!vals.defined[i]) continue;
    const double m = margin[i];
    const double re = pts.re[i];
    const double im = pts.im[i];
    const bool better =
        !have || m < best ||
        (m == best && (re < bre || (re == bre && im < bim)));
    if (better) {
      have = true;
      best = m;
      bre = re;
      bim = im;
    }
  }
  if (!have) {
    rep.worst_margin = -1.0;
    rep.witness = cplx(0.0, 0.0);
    rep.verdict = false;
    return rep;
  }
  rep.worst_margin = best;
  rep.witness = cplx(bre, bim);
  rep.verdict = best > 0.0 && rep.undefined_points == 0;
  return rep;
}

} // namespace

GridValues evaluate_grid(const Functional& f, const GridPoints& pts) {
  const RatioForm r = ratio_form(f);
  const std::size_t n = pts.re.size();
  GridValues vals;
  vals.wre.resize(n);
  vals.wim.resize(n);
  vals.defined.resize(n);
  kernels::ratio_eval(r.base, r.P.data(), static_cast<int>(r.P.size()) - 1,
                      r.Q.data(), static_cast<int>(r.Q.size()) - 1,
                      pts.re.data(), pts.im.data(), n, vals.wre.data(),
                      vals.wim.data(), vals.defined.data(),
                      functional_den_floor * functional_den_floor);
  vals.undefined_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!vals.defined[i]) ++vals.undefined_count;
  }
  return vals;
}

SubordinationReport reduce_margins(const GridValues& vals,
                                   const GridPoints& pts,
                                   const RegionDescriptor& region) {
  const std::size_t n = vals.wre.size();
  std::vector<double> margin(n);
  switch (region.shape) {
    case RegionDescriptor::Shape::Disk:
      kernels::disk_margin(vals.wre.data(), vals.wim.data(), n, region.center,
                           region.radius, margin.data());
      break;
    case RegionDescriptor::Shape::HalfPlane:
      kernels::halfplane_margin(vals.wre.data(), n, region.threshold,
                                margin.data());
      break;
    case RegionDescriptor::Shape::Point:
      for (std::size_t i = 0; i < n; ++i) {
        const double dx = vals.wre[i] - region.center;
        const double dy = vals.wim[i];
        margin[i] = -std::sqrt((dx * dx) + (dy * dy));
      }
      break;
  }
  return reduce_margin_buffer(margin, vals, pts);
}

SubordinationReport reduce_margins(const GridValues& vals,
                                   const GridPoints& pts,
                                   const TargetDomain& domain) {
  validate(domain);
  const std::size_t n = vals.wre.size();
  switch (domain.kind) {
    case DomainKind::Janowski:
      return reduce_margins(vals, pts, janowski_region(domain.janowski));
    case DomainKind::HalfPlane: {
      RegionDescriptor r;
      r.shape = RegionDescriptor::Shape::HalfPlane;
      r.threshold = domain.beta;
      return reduce_margins(vals, pts, r);
    }
    case DomainKind::Exponential: {
      std::vector<double> margin(n);
      for (std::size_t i = 0; i < n; ++i) {
        margin[i] =
            exp_domain_contains(cplx(vals.wre[i], vals.wim[i])).margin;
      }
      return reduce_margin_buffer(margin, vals, pts);
    }
    case DomainKind::Lemniscate: {
      std::vector<double> margin(n);
      for (std::size_t i = 0; i < n; ++i) {
        margin[i] =
            lemniscate_contains(cplx(vals.wre[i], vals.wim[i])).margin;
      }
      return reduce_margin_buffer(margin, vals, pts);
    }
  }
  return {};
}

SubordinationReport check_subordination(const Functional& f,
                                        const TargetDomain& domain,
                                        const DiskGrid& grid) {
  validate(f);
  validate(domain);
  validate(grid);
  const FunctionalValue at0 = evaluate_functional(f, cplx(0.0, 0.0));
  if (!at0.defined || std::abs(at0.value - cplx(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument(
        "normalization-violation: functional value at z=0 must equal 1");
  }
  const GridPoints pts = sample_disk_soa(grid);
  const GridValues vals = evaluate_grid(f, pts);
  return reduce_margins(vals, pts, domain);
}

bool nonvanishing_in_disk(const PolynomialSpec& spec, int derivative_order,
                          double r_max) {
  validate(spec);
  if (derivative_order < 1) {
    throw std::invalid_argument("derivative order must be >= 1");
  }
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw std::invalid_argument("r_max must lie in (0,1), got " +
                                std::to_string(r_max));
  }
  if (derivative_order > spec.degree) return false; // identically zero
  const auto dc =
      derivative_coefficients(coefficients(spec), derivative_order);
  if (dc.size() <= 1) return true; // nonzero constant
  const auto roots = polynomial_roots(dc);
  bool clear = true;
  for (const cplx& root : roots) {
    const double m = std::abs(root);
    if (std::abs(m - r_max) <= nonvanishing_guard_band) {
      throw ambiguous_root_error(m, r_max, nonvanishing_guard_band);
    }
    if (m < r_max) clear = false;
  }
  return clear;
}

} // namespace gft
