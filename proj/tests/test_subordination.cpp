#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "gft/roots.hpp"
#include "gft/subordination.hpp"

using gft::cplx;
using gft::DiskGrid;
using gft::Functional;
using gft::FunctionalKind;
using gft::GridPoints;
using gft::GridValues;
using gft::RegionDescriptor;
using gft::TargetDomain;

namespace {

TargetDomain exp_domain() {
  TargetDomain d;
  d.kind = gft::DomainKind::Exponential;
  return d;
}

Functional identity(int n, double alpha) {
  return {FunctionalKind::Identity, {n, alpha}, false};
}

} // namespace

TEST_SUITE("subordination") {

TEST_CASE("identity image sits inside the exponential domain") {
  for (const auto& na : {std::pair<int, double>{1, 3.0},
                         {2, 4.0},
                         {3, 5.0}}) {
    const auto rep =
        gft::check_subordination(identity(na.first, na.second), exp_domain(),
                                 DiskGrid{});
    CHECK(rep.verdict);
    CHECK(rep.worst_margin > 0.0);
    CHECK(rep.samples_checked == 16384);
    CHECK(rep.undefined_points == 0);
  }
}

TEST_CASE("small alpha fails with a boundary witness") {
  const auto rep =
      gft::check_subordination(identity(1, 0.05), exp_domain(), DiskGrid{});
  CHECK_FALSE(rep.verdict);
  CHECK(rep.worst_margin == -2.0247198104272428);
  CHECK(rep.witness == cplx(0.999, 0.0));
  CHECK(rep.samples_checked == 16384);
  CHECK(rep.undefined_points == 0);
}

TEST_CASE("power-of-two refinement keeps the witness") {
  const auto coarse =
      gft::check_subordination(identity(1, 0.05), exp_domain(), DiskGrid{});
  const auto fine = gft::check_subordination(identity(1, 0.05), exp_domain(),
                                             DiskGrid{0.999, 128, 512});
  CHECK(fine.samples_checked == 65536);
  CHECK(fine.worst_margin == coarse.worst_margin);
  CHECK(fine.witness == coarse.witness);
}

TEST_CASE("constant functional picks the lexicographic witness") {
  // Every margin equals 1, so the reported witness is the smallest grid
  // point in (Re, Im) order: the theta = pi point of the outer ring.
  const auto rep =
      gft::check_subordination(identity(0, 2.0), exp_domain(), DiskGrid{});
  CHECK(rep.verdict);
  CHECK(rep.worst_margin == 1.0);
  CHECK(rep.witness.real() == -0.999);
  CHECK(rep.witness.imag() == 1.2234221523482057e-16);
}

TEST_CASE("half-plane and janowski targets") {
  TargetDomain hp;
  hp.kind = gft::DomainKind::HalfPlane;
  hp.beta = 0.25;
  const auto rep = gft::check_subordination(identity(1, 3.0), hp, DiskGrid{});
  CHECK(rep.verdict);
  // Worst point is z = 0.999: margin = (1 - 0.999/4) - 1/4.
  CHECK(std::abs(rep.worst_margin - 0.50025) <= 1e-15);
  CHECK(rep.witness == cplx(0.999, 0.0));

  TargetDomain jw;
  jw.kind = gft::DomainKind::Janowski;
  jw.janowski = {0.5, -0.5};
  CHECK(gft::check_subordination(identity(1, 3.0), jw, DiskGrid{}).verdict);
}

TEST_CASE("normalization violations are rejected") {
  const Functional star{FunctionalKind::StarlikeRatio, {1, 3.0}, false};
  CHECK_THROWS_WITH_AS(
      gft::check_subordination(star, exp_domain(), DiskGrid{0.9, 4, 8}),
      "normalization-violation: functional value at z=0 must equal 1",
      std::invalid_argument);
}

TEST_CASE("reduce_margins tie-breaking is lexicographic") {
  GridPoints pts;
  pts.re = {0.5, -0.2, 0.5};
  pts.im = {0.3, 0.1, -0.2};
  RegionDescriptor hp;
  hp.shape = RegionDescriptor::Shape::HalfPlane;
  hp.threshold = 0.0;

  GridValues vals;
  vals.wre = {0.1, 0.9, 0.1};
  vals.wim = {0.0, 0.0, 0.0};
  vals.defined = {1, 1, 1};
  vals.undefined_count = 0;
  const auto im_tie = gft::reduce_margins(vals, pts, hp);
  CHECK(im_tie.worst_margin == 0.1);
  CHECK(im_tie.witness == cplx(0.5, -0.2));

  vals.wre = {0.1, 0.1, 0.9};
  const auto re_tie = gft::reduce_margins(vals, pts, hp);
  CHECK(re_tie.witness == cplx(-0.2, 0.1));
}

TEST_CASE("undefined points block the verdict") {
  GridPoints pts;
  pts.re = {0.1, 0.2, 0.3};
  pts.im = {0.0, 0.0, 0.0};
  RegionDescriptor hp;
  hp.shape = RegionDescriptor::Shape::HalfPlane;
  hp.threshold = 0.0;

  GridValues vals;
  vals.wre = {5.0, 7.0, 9.0};
  vals.wim = {0.0, 0.0, 0.0};
  vals.defined = {1, 0, 1};
  vals.undefined_count = 1;
  const auto rep = gft::reduce_margins(vals, pts, hp);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.worst_margin == 5.0); // undefined lane is skipped
  CHECK(rep.undefined_points == 1);

  vals.defined = {0, 0, 0};
  vals.undefined_count = 3;
  const auto empty = gft::reduce_margins(vals, pts, hp);
  CHECK_FALSE(empty.verdict);
  CHECK(empty.worst_margin == -1.0);
  CHECK(empty.witness == cplx(0.0, 0.0));
  CHECK(empty.undefined_points == 3);
}

TEST_CASE("nonvanishing_in_disk") {
  CHECK(gft::nonvanishing_in_disk({2, 3.0}, 1, 0.999));  // root at 5
  CHECK(gft::nonvanishing_in_disk({2, 3.0}, 2, 0.999));  // nonzero constant
  CHECK_FALSE(gft::nonvanishing_in_disk({2, 3.0}, 3, 0.999)); // zero poly
  CHECK_FALSE(gft::nonvanishing_in_disk({3, -0.9}, 1, 0.999));
  CHECK(gft::nonvanishing_in_disk({3, -0.9}, 1, 0.5));

  CHECK_THROWS_AS(gft::nonvanishing_in_disk({3, -0.9}, 1, 0.65086232),
                  gft::ambiguous_root_error);
  CHECK_THROWS_AS(gft::nonvanishing_in_disk({2, 3.0}, 0, 0.999),
                  std::invalid_argument);
  CHECK_THROWS_AS(gft::nonvanishing_in_disk({2, 3.0}, 1, 1.0),
                  std::invalid_argument);
}

} // TEST_SUITE
