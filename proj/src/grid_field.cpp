#include "hll/grid_field.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hll {

DiskPoint::DiskPoint(std::complex<double> z, double gap) : z_(z), abs_(std::abs(z)) {
  if (!std::isfinite(abs_) || !(abs_ < 1.0 - gap)) {
    throw std::invalid_argument("point lies outside the admissible disk |z| < 1 - gap");
  }
  one_minus_abs2_ = (1.0 - abs_) * (1.0 + abs_);
}

PolarGrid PolarGrid::uniform(int n_r, int n_theta, double r_max) {
  if (n_r < 2 || n_theta < 1) throw std::invalid_argument("polar grid needs n_r >= 2, n_theta >= 1");
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("polar grid needs 0 < r_max < 1");
  PolarGrid g;
  g.radii.resize(static_cast<std::size_t>(n_r));
  g.angles.resize(static_cast<std::size_t>(n_theta));
  for (int i = 0; i < n_r; ++i) g.radii[i] = r_max * i / (n_r - 1);
  for (int j = 0; j < n_theta; ++j) g.angles[j] = 2.0 * std::numbers::pi * j / n_theta;
  return g;
}

std::complex<double> PolarGrid::point(std::size_t index) const {
  const std::size_t nt = angles.size();
  return std::polar(radii[index / nt], angles[index % nt]);
}

GridField sample(const PolarGrid& grid, const std::function<std::complex<double>(const DiskPoint&)>& f,
                 double gap) {
  GridField field{grid, {}};
  field.values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    field.values.push_back(f(DiskPoint(grid.point(i), gap)));
  }
  return field;
}

void write_csv(std::ostream& out, const GridField& field) {
  if (field.values.size() != field.grid.size()) {
    throw std::invalid_argument("grid field has inconsistent value count");
  }
  const auto saved = out.precision();
  out << std::setprecision(17);
  out << "r,theta,re,im\n";
  const std::size_t nt = field.grid.angles.size();
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    out << field.grid.radii[i / nt] << ',' << field.grid.angles[i % nt] << ','
        << field.values[i].real() << ',' << field.values[i].imag() << '\n';
  }
  out.precision(saved);
}

}  // namespace hll
