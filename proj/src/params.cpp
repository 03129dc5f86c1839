#include "hll/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hll {

namespace {

void check_nu(double nu) {
  if (!std::isfinite(nu) || !(nu > 0.5 + kLevelGuard)) {
    throw std::invalid_argument(
        "nu must be a finite number greater than 1/2 (no discrete spectrum), got " +
        std::to_string(nu));
  }
}

}  // namespace

ModelParams::ModelParams(double nu, int m)
    : nu_(nu),
      m_(m),
      beta_(2.0 * nu),
      alpha_(2.0 * (nu - m) - 1.0),
      epsilon_(4.0 * m * (2.0 * nu - m - 1.0)) {}

ModelParams make_params(double nu, int m) {
  check_nu(nu);
  if (m < 0) {
    throw std::invalid_argument("level index must be a non-negative integer");
  }
  if (m > max_level(nu)) {
    throw std::invalid_argument("level index out of range: m = " + std::to_string(m) +
                                " is not < nu - 1/2 = " + std::to_string(nu - 0.5));
  }
  return ModelParams(nu, m);
}

int max_level(double nu) {
  check_nu(nu);
  // strict inequality m < nu - 1/2, with the guard band pulling exact
  // half-integers nu = n + 1/2 down to n - 1
  return static_cast<int>(std::ceil(nu - 0.5 - kLevelGuard)) - 1;
}

}  // namespace hll
