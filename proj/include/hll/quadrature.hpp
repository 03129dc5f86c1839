#ifndef HLL_QUADRATURE_HPP
#define HLL_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "hll/disk_point.hpp"
#include "hll/grid_field.hpp"
#include "hll/params.hpp"

namespace hll {

// Gauss rule for  int_0^inf f(x) x^alpha e^(-x) dx ~ sum_i w_i f(x_i).
struct HalfLineRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

// Generalized Gauss-Laguerre rule. Nodes come from the eigenvalues of the
// Laguerre Jacobi matrix (Golub-Welsch), are polished by Newton steps on the
// recurrence, and weights are taken from the Christoffel function
// 1 / sum_k q_k(x_i)^2 so that tiny weights keep their relative accuracy.
HalfLineRule gauss_laguerre(double alpha, int n);

// Shared, immutable copy of gauss_laguerre(alpha, n). Thread-safe.
const HalfLineRule& cached_gauss_laguerre(double alpha, int n);

// sum_i w_i f(x_i). The caller has already divided the weight x^alpha e^-x
// out of the integrand. A non-finite sample raises std::runtime_error
// naming the node index.
std::complex<double> integrate_halfline(const HalfLineRule& rule,
                                        const std::function<std::complex<double>(double)>& f);

// Gauss rule on [0, 1] for the weight (1 - u)^gamma; one_minus_nodes holds
// 1 - u_i.
struct UnitIntervalRule {
  double gamma = 0.0;
  std::vector<double> nodes;
  std::vector<double> one_minus_nodes;
  std::vector<double> weights;
};

UnitIntervalRule gauss_jacobi_unit(double gamma, int n);

// Product rule on the disk for  int f(z) (1 - |z|^2)^(2 nu - 2) dmu(z).
//
// With r_max == 1 the radial variable u = r^2 uses a Gauss-Jacobi rule for
// the weight (1 - u)^(2 nu - 2 - 2m) on the full interval, and the remaining
// (1 - u)^(2m) is folded into the weights. Level-m integrands
// |F|^2 (1 - |z|^2)^(2 nu - 2) behave like (1 - u)^(alpha - 1) times a
// polynomial, so this is exact for them.
//
// With r_max < 1 a Gauss-Legendre rule on [0, r_max^2] is used and the whole
// weight is folded in.
//
// The angular rule is the uniform trapezoid, exact for e^(ik theta),
// |k| < n_theta.
struct DiskRule {
  int n_r = 0;
  int n_theta = 0;
  double r_max = 1.0;
  double weight_exponent = 0.0;  // 2 nu - 2
  int level = 0;                 // m used to shape the radial rule
  PolarGrid grid;
  std::vector<DiskPoint> points;  // grid order
  std::vector<double> weights;    // grid order

  std::size_t size() const { return points.size(); }
};

DiskRule disk_rule(const ModelParams& params, int n_r, int n_theta, double r_max = 1.0);

// Analytic value of int_{|z| <= r_max} (1 - |z|^2)^(2 nu - 2) dmu.
double disk_weight_mass(double nu, double r_max);

// sum_i w_i f_i over samples taken in rule order.
std::complex<double> integrate_disk(const DiskRule& rule, std::span<const std::complex<double>> samples);

// <f, g> = sum_i w_i conj(f_i) g_i
std::complex<double> inner_product(const DiskRule& rule, std::span<const std::complex<double>> f,
                                   std::span<const std::complex<double>> g);

// "node,weight" CSV, 17 significant digits.
void write_rule_csv(std::ostream& out, const HalfLineRule& rule);

}  // namespace hll

#endif  // HLL_QUADRATURE_HPP
