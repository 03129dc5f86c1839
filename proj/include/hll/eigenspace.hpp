#ifndef HLL_EIGENSPACE_HPP
#define HLL_EIGENSPACE_HPP

#include <complex>

#include "hll/disk_point.hpp"
#include "hll/grid_field.hpp"
#include "hll/params.hpp"

namespace hll {

// Orthogonal basis of the level-m eigenspace:
//
//   phi_k(z) = (-1)^min(m,k) (1-|z|^2)^-m  w_k(z)  P_min(m,k)^(|m-k|, alpha)(1 - 2|z|^2)
//
// with w_k(z) = conj(z)^(m-k) for k <= m and z^(k-m) for k > m. The angular
// factor is formed as an integer power in Cartesian form, so z = 0 needs no
// special casing.
std::complex<double> phi(const ModelParams& params, int k, const DiskPoint& z);

// Squared norm of phi_k in L^2(D, (1-|z|^2)^(2 nu - 2) dmu):
//   pi / alpha * max! Gamma(alpha + 1 + min) / (min! Gamma(alpha + 1 + max)),
// evaluated in log space.
double rho(const ModelParams& params, int k);

// phi_k / sqrt(rho_k).
std::complex<double> big_phi(const ModelParams& params, int k, const DiskPoint& z);

// The same orthonormal function written with a degree-k Jacobi polynomial
// whose first parameter m - k may be a negative integer:
//
//   (-1)^k sqrt(alpha/pi) sqrt(k! Gamma(alpha+1+m) / (m! Gamma(alpha+1+k)))
//     (1-|z|^2)^-m conj(z)^(m-k) P_k^(m-k, alpha)(1 - 2|z|^2)
//
// For k > m the power conj(z)^(m-k) is negative and is taken literally; the
// Jacobi factor vanishes like |z|^(2(k-m)) and compensates it. At z = 0 the
// limit (zero) is returned.
std::complex<double> big_phi_alt(const ModelParams& params, int k, const DiskPoint& z);

// Reproducing kernel of the level-m eigenspace.
//
//   alpha/pi (1 - z conj(w))^(-2 nu) (|1 - z conj(w)|^2 / ((1-|z|^2)(1-|w|^2)))^m
//     P_m^(0, alpha)(2 (1-|z|^2)(1-|w|^2) / |1 - z conj(w)|^2 - 1)
std::complex<double> kernel(const ModelParams& params, const DiskPoint& z, const DiskPoint& w);

// kernel(z, z) = alpha/pi (1 - |z|^2)^(-2 nu); strictly positive.
double kernel_diag(const ModelParams& params, const DiskPoint& z);

// Truncated Mercer sum  sum_{k<K} Phi_k(z) conj(Phi_k(w)), K doubled from
// 16 until two successive sums differ by less than 0.1 * tol relative to
// the sum, or K reaches max_terms.
struct MercerSum {
  std::complex<double> value;
  int terms = 0;
  bool converged = false;
};

MercerSum mercer_kernel(const ModelParams& params, const DiskPoint& z, const DiskPoint& w, double tol,
                        int max_terms = 4096);

// Phi_k sampled on a polar grid.
GridField basis_field(const ModelParams& params, int k, const PolarGrid& grid);

}  // namespace hll

#endif  // HLL_EIGENSPACE_HPP
