#ifndef HLL_DISK_POINT_HPP
#define HLL_DISK_POINT_HPP

#include <complex>

namespace hll {

inline constexpr double kDefaultBoundaryGap = 1e-6;

// A point of the open unit disk kept at least `gap` away from the boundary.
// 1 - |z|^2 is stored once, factored as (1 - |z|)(1 + |z|).
class DiskPoint {
 public:
  explicit DiskPoint(std::complex<double> z, double gap = kDefaultBoundaryGap);

  std::complex<double> z() const { return z_; }
  double abs() const { return abs_; }
  double abs2() const { return abs_ * abs_; }
  double one_minus_abs2() const { return one_minus_abs2_; }

 private:
  std::complex<double> z_;
  double abs_;
  double one_minus_abs2_;
};

}  // namespace hll

#endif  // HLL_DISK_POINT_HPP
