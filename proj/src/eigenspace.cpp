#include "hll/eigenspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hll/specfun.hpp"

namespace hll {
namespace {

void check_index(int k) {
  if (k < 0) throw std::invalid_argument("basis index must be non-negative");
}

// Binary powering; stays in Cartesian form.
std::complex<double> ipow(std::complex<double> z, int n) {
  std::complex<double> result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

double log_rho(const ModelParams& params, int k) {
  const int m = params.m();
  const double a = params.alpha();
  const int lo = std::min(m, k);
  const int hi = std::max(m, k);
  return std::log(std::numbers::pi / a) + log_gamma_ratio(hi + 1.0, lo + 1.0) +
         log_gamma_ratio(a + 1.0 + lo, a + 1.0 + hi);
}

}  // namespace

std::complex<double> phi(const ModelParams& params, int k, const DiskPoint& z) {
  check_index(k);
  const int m = params.m();
  const int lo = std::min(m, k);
  const int d = std::abs(m - k);
  const std::complex<double> angular = k <= m ? ipow(std::conj(z.z()), d) : ipow(z.z(), d);
  const double t = 1.0 - 2.0 * z.abs2();
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(z.one_minus_abs2(), -m) * jacobi(lo, d, params.alpha(), t) * angular;
}

double rho(const ModelParams& params, int k) {
  check_index(k);
  return std::exp(log_rho(params, k));
}

std::complex<double> big_phi(const ModelParams& params, int k, const DiskPoint& z) {
  return phi(params, k, z) * std::exp(-0.5 * log_rho(params, k));
}

std::complex<double> big_phi_alt(const ModelParams& params, int k, const DiskPoint& z) {
  check_index(k);
  const int m = params.m();
  const double a = params.alpha();
  std::complex<double> angular;
  if (k <= m) {
    angular = ipow(std::conj(z.z()), m - k);
  } else {
    if (z.abs() == 0.0) return {0.0, 0.0};
    angular = ipow(1.0 / std::conj(z.z()), k - m);
  }
  const double log_norm = 0.5 * (std::log(a / std::numbers::pi) + log_gamma_ratio(k + 1.0, m + 1.0) +
                                 log_gamma_ratio(a + 1.0 + m, a + 1.0 + k));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double t = 1.0 - 2.0 * z.abs2();
  return sign * std::exp(log_norm) * std::pow(z.one_minus_abs2(), -m) *
         jacobi(k, static_cast<double>(m - k), a, t) * angular;
}

std::complex<double> kernel(const ModelParams& params, const DiskPoint& z, const DiskPoint& w) {
  // |z conj(w)| < 1 keeps q in the right half-plane, so the principal
  // branch of q^(-2 nu) is continuous on D x D and equals 1 on the diagonal
  // limit z = w = 0.
  const std::complex<double> q = 1.0 - z.z() * std::conj(w.z());
  const double q2 = std::norm(q);
  const double a = z.one_minus_abs2() * w.one_minus_abs2();
  const double ratio = std::min(a / q2, 1.0);
  const int m = params.m();
  const std::complex<double> power = std::exp(-2.0 * params.nu() * std::log(q));
  return params.alpha() / std::numbers::pi * power * std::pow(ratio, -m) *
         jacobi(m, 0.0, params.alpha(), 2.0 * ratio - 1.0);
}

double kernel_diag(const ModelParams& params, const DiskPoint& z) {
  return params.alpha() / std::numbers::pi * std::pow(z.one_minus_abs2(), -2.0 * params.nu());
}

MercerSum mercer_kernel(const ModelParams& params, const DiskPoint& z, const DiskPoint& w, double tol,
                        int max_terms) {
  if (max_terms < 16) throw std::invalid_argument("Mercer sum needs max_terms >= 16");
  MercerSum out;
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> previous(0.0, 0.0);
  int k = 0;
  for (int limit = 16;; limit = std::min(2 * limit, max_terms)) {
    for (; k < limit; ++k) sum += big_phi(params, k, z) * std::conj(big_phi(params, k, w));
    if (limit > 16 && std::abs(sum - previous) < 0.1 * tol * std::max(1.0, std::abs(sum))) {
      out.converged = true;
      break;
    }
    if (limit == max_terms) break;
    previous = sum;
  }
  out.value = sum;
  out.terms = k;
  return out;
}

GridField basis_field(const ModelParams& params, int k, const PolarGrid& grid) {
  return sample(grid, [&](const DiskPoint& p) { return big_phi(params, k, p); });
}

}  // namespace hll
