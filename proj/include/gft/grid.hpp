#pragma once

#include <vector>

#include "gft/types.hpp"

namespace gft {

// Deterministic polar sampling of the open unit disk:
// points r_j e^{i theta_k} with r_j = r_max (j+1)/n_radii (j outer loop) and
// theta_k = 2 pi k / n_angles (k inner loop). The canonical grid is
// (0.999, 64, 256). Refining by integer factors preserves existing points.
struct DiskGrid {
  double r_max = 0.999;
  int n_radii = 64;
  int n_angles = 256;
};

void validate(const DiskGrid& grid);

// Exactly n_radii * n_angles points in the fixed j-outer, k-inner order.
std::vector<cplx> sample_disk(const DiskGrid& grid);

// Same points split into structure-of-arrays form for the batch kernels.
struct GridPoints {
  std::vector<double> re;
  std::vector<double> im;
};

GridPoints sample_disk_soa(const DiskGrid& grid);

} // namespace gft
