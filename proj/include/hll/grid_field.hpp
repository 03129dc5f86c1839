#ifndef HLL_GRID_FIELD_HPP
#define HLL_GRID_FIELD_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "hll/disk_point.hpp"

namespace hll {

// Tensor-product polar grid. Flattened index is i_r * n_theta + i_theta
// (radius outer, angle inner).
struct PolarGrid {
  std::vector<double> radii;
  std::vector<double> angles;

  // n_r radii equally spaced on [0, r_max] (both ends included) and n_theta
  // angles 2 pi j / n_theta.
  static PolarGrid uniform(int n_r, int n_theta, double r_max);

  std::size_t size() const { return radii.size() * angles.size(); }
  std::complex<double> point(std::size_t index) const;
};

struct GridField {
  PolarGrid grid;
  std::vector<std::complex<double>> values;
};

// Samples f at every grid point, in grid order. Throws if a point is closer
// than `gap` to the unit circle.
GridField sample(const PolarGrid& grid, const std::function<std::complex<double>(const DiskPoint&)>& f,
                 double gap = kDefaultBoundaryGap);

// CSV with header "r,theta,re,im", one row per grid point, 17 significant digits.
void write_csv(std::ostream& out, const GridField& field);

}  // namespace hll

#endif  // HLL_GRID_FIELD_HPP
