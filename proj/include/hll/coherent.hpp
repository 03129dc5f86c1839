#ifndef HLL_COHERENT_HPP
#define HLL_COHERENT_HPP

#include <complex>

#include "hll/disk_point.hpp"
#include "hll/params.hpp"

namespace hll {

// psi_{nu,m;k}(xi) = sqrt(k! / Gamma(alpha + 1 + k)) xi^(nu-m) e^(-xi/2) L_k^(alpha)(xi),
// orthonormal in L^2((0, inf), dxi/xi). Throws for xi <= 0.
double psi_basis(const ModelParams& params, int k, double xi);

struct TruncationSpec {
  int max_terms = 4096;
  double target_tol = 1e-14;
};

struct SeriesValue {
  std::complex<double> value;
  int terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

// Coherent-state wavefunction Psi_z(xi) summed from its expansion in the
// psi basis,
//
//   (1-|z|^2)^(nu-m) sum_k c_k(z) psi_k(xi),
//
// with c_k = (-1)^k sqrt(k! Gamma(alpha+1+m) / (m! Gamma(alpha+1+k))) conj(z)^(m-k)
// P_k^(m-k, alpha)(1-2|z|^2) for k <= m, and for k > m the equivalent
//
//   c_k = (-1)^m sqrt(m! Gamma(alpha+1+k) / (k! Gamma(alpha+1+m))) z^(k-m) P_m^(k-m, alpha)(1-2|z|^2)
//
// which has no negative powers. K doubles from 64 up to max_terms; the sum
// is accepted once the largest of the last 8 terms is below
// target_tol * |partial sum|. Throws std::runtime_error("not converged ...")
// otherwise.
SeriesValue coherent_series(const ModelParams& params, const DiskPoint& z, double xi,
                            const TruncationSpec& trunc = {});

// Closed form of the same wavefunction:
//
//   (-1)^m sqrt(m! / Gamma(2 nu - m)) |1-z|^(2m) (1-z)^(-2 nu) (1-|z|^2)^(nu-m)
//     xi^(nu-m) exp(-(xi/2)(1+z)/(1-z)) L_m^(alpha)(xi (1-|z|^2) / |1-z|^2)
//
// Re(1-z) > 0 on the disk, so the principal power is continuous there.
std::complex<double> coherent_closed(const ModelParams& params, const DiskPoint& z, double xi);

// Re((1+z)/(1-z)) = (1-|z|^2)/|1-z|^2, the real decay rate of Psi_z is half
// of it. Throws if it is not strictly positive.
double coherent_decay_rate(const DiskPoint& z);

// <Psi_z, Psi_z> in L^2(dxi/xi) from the closed form, by a Laguerre rule in
// u = xi (1-|z|^2)/|1-z|^2, which is exact for order > m.
double coherent_norm2(const ModelParams& params, const DiskPoint& z, int order = 64);

}  // namespace hll

#endif  // HLL_COHERENT_HPP
