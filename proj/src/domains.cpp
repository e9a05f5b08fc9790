#include "gft/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gft {

void validate(const JanowskiParams& p) {
  if (!(std::isfinite(p.C) && std::isfinite(p.D)) ||
      !(-1.0 <= p.D && p.D < p.C && p.C <= 1.0)) {
    throw std::invalid_argument("Janowski parameters need -1 <= D < C <= 1, got C=" +
                                std::to_string(p.C) + " D=" + std::to_string(p.D));
  }
}

void validate(const TargetDomain& d) {
  switch (d.kind) {
    case DomainKind::Janowski:
      validate(d.janowski);
      break;
    case DomainKind::HalfPlane:
      if (!(0.0 <= d.beta && d.beta < 1.0)) {
        throw std::invalid_argument("half-plane beta needs 0 <= beta < 1, got " +
                                    std::to_string(d.beta));
      }
      break;
    case DomainKind::Exponential:
    case DomainKind::Lemniscate:
      break;
  }
}

RegionDescriptor janowski_region(const JanowskiParams& p) {
  validate(p);
  return janowski_image(p.C, p.D);
}

RegionDescriptor janowski_image(double C, double Dp) {
  RegionDescriptor r;
  if (Dp == -1.0) {
    r.shape = RegionDescriptor::Shape::HalfPlane;
    r.threshold = (1.0 - C) / 2.0;
    return r;
  }
  if (Dp == 1.0) {
    r.shape = RegionDescriptor::Shape::HalfPlane;
    r.threshold = (1.0 + C) / 2.0;
    return r;
  }
  if (C == Dp) {
    r.shape = RegionDescriptor::Shape::Point;
    r.center = 1.0;
    return r;
  }
  r.shape = RegionDescriptor::Shape::Disk;
  const double den = 1.0 - Dp * Dp;
  r.center = (1.0 - C * Dp) / den;
  r.radius = std::abs(C - Dp) / den;
  return r;
}

double region_margin(const RegionDescriptor& r, cplx w) {
  switch (r.shape) {
    case RegionDescriptor::Shape::Disk:
      return r.radius - std::abs(w - cplx(r.center, 0.0));
    case RegionDescriptor::Shape::HalfPlane:
      return w.real() - r.threshold;
    case RegionDescriptor::Shape::Point:
      return -std::abs(w - cplx(r.center, 0.0));
  }
  return 0.0;
}

MembershipVerdict exp_domain_contains(cplx w) {
  if (w == cplx(0.0, 0.0)) return {false, -1.0};
  const double margin = 1.0 - std::abs(std::log(w));
  return {margin > 0.0, margin};
}

MembershipVerdict janowski_contains(const JanowskiParams& p, cplx w) {
  const double margin = region_margin(janowski_region(p), w);
  return {margin > 0.0, margin};
}

MembershipVerdict lemniscate_contains(cplx w) {
  const double margin = std::min(w.real(), 1.0 - std::abs(w * w - 1.0));
  return {margin > 0.0, margin};
}

MembershipVerdict halfplane_contains(double beta, cplx w) {
  if (!(0.0 <= beta && beta < 1.0)) {
    throw std::invalid_argument("half-plane beta needs 0 <= beta < 1, got " +
                                std::to_string(beta));
  }
  const double margin = w.real() - beta;
  return {margin > 0.0, margin};
}

MembershipVerdict domain_contains(const TargetDomain& d, cplx w) {
  switch (d.kind) {
    case DomainKind::Exponential: return exp_domain_contains(w);
    case DomainKind::Janowski: return janowski_contains(d.janowski, w);
    case DomainKind::Lemniscate: return lemniscate_contains(w);
    case DomainKind::HalfPlane: return halfplane_contains(d.beta, w);
  }
  return {false, 0.0};
}

} // namespace gft
