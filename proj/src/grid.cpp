#include "gft/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gft {

void validate(const DiskGrid& grid) {
  if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) {
    throw std::invalid_argument("grid r_max must lie in (0,1), got " +
                                std::to_string(grid.r_max));
  }
  if (grid.n_radii < 1 || grid.n_angles < 1) {
    throw std::invalid_argument("grid needs n_radii >= 1 and n_angles >= 1");
  }
}

GridPoints sample_disk_soa(const DiskGrid& grid) {
  validate(grid);
  const std::size_t n =
      static_cast<std::size_t>(grid.n_radii) * grid.n_angles;
  GridPoints pts;
  pts.re.resize(n);
  pts.im.resize(n);
  std::size_t i = 0;
  for (int j = 0; j < grid.n_radii; ++j) {
    const double r = grid.r_max * (j + 1) / grid.n_radii;
    for (int k = 0; k < grid.n_angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / grid.n_angles;
      pts.re[i] = r * std::cos(theta);
      pts.im[i] = r * std::sin(theta);
      ++i;
    }
  }
  return pts;
}

std::vector<cplx> sample_disk(const DiskGrid& grid) {
  const GridPoints pts = sample_disk_soa(grid);
  std::vector<cplx> out(pts.re.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = cplx(pts.re[i], pts.im[i]);
  }
  return out;
}

} // namespace gft
