#pragma once

#include "gft/types.hpp"

namespace gft {

// Parameters of the disk-image family (1+Cz)/(1+Dz); -1 <= D < C <= 1.
struct JanowskiParams {
  double C = 1.0;
  double D = -1.0;
};

void validate(const JanowskiParams& p);

struct MembershipVerdict {
  bool inside = false;
  double margin = 0.0; // positive iff strictly inside
};

enum class DomainKind { Exponential, Janowski, Lemniscate, HalfPlane };

struct TargetDomain {
  DomainKind kind = DomainKind::Exponential;
  JanowskiParams janowski{};
  double beta = 0.0; // HalfPlane only; 0 <= beta < 1
};

void validate(const TargetDomain& d);

// Image of the unit disk under (1+Cz)/(1+Dz), possibly degenerate. The disk
// case always has its center on the real axis.
struct RegionDescriptor {
  enum class Shape { Disk, HalfPlane, Point };
  Shape shape = Shape::Disk;
  double center = 1.0;    // Disk / Point
  double radius = 0.0;    // Disk
  double threshold = 0.0; // HalfPlane: Re w > threshold
};

// Region for valid Janowski parameters: a disk for D > -1 with center
// (1-CD)/(1-D^2) and radius (C-D)/(1-D^2); the half-plane Re w > (1-C)/2 for
// D = -1.
RegionDescriptor janowski_region(const JanowskiParams& p);

// Same construction without the D < C ordering requirement, for probing the
// mirrored sign convention (effective parameters (C, -D)): C = Dp collapses
// to the point {1}; Dp = -1 and Dp = +1 give the half-planes
// Re w > (1-C)/2 and Re w > (1+C)/2.
RegionDescriptor janowski_image(double C, double Dp);

// Signed margin of w against a region; positive iff strictly inside.
double region_margin(const RegionDescriptor& r, cplx w);

// |Log w| < 1 with the principal branch; w = 0 reports {false, -1}.
MembershipVerdict exp_domain_contains(cplx w);

MembershipVerdict janowski_contains(const JanowskiParams& p, cplx w);

// Right loop of |w^2 - 1| < 1: margin = min(Re w, 1 - |w^2 - 1|).
MembershipVerdict lemniscate_contains(cplx w);

// Re w > beta, 0 <= beta < 1.
MembershipVerdict halfplane_contains(double beta, cplx w);

MembershipVerdict domain_contains(const TargetDomain& d, cplx w);

} // namespace gft
