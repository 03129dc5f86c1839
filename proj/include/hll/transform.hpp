#ifndef HLL_TRANSFORM_HPP
#define HLL_TRANSFORM_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hll/disk_point.hpp"
#include "hll/grid_field.hpp"
#include "hll/params.hpp"
#include "hll/quadrature.hpp"
#include "hll/radial.hpp"

namespace hll {

// Integral kernel of W_{nu,m}:
//
//   W[phi](z) = int_0^inf Wk(z, xi) phi(xi) dxi / xi,
//
//   Wk(z, xi) = (-1)^m sqrt(alpha m! / (pi Gamma(2 nu - m)))
//               ((1-|z|^2)/|1-z|^2)^(-m) (1-z)^(-2 nu)
//               xi^(nu-m) exp(-(xi/2)(1+z)/(1-z)) L_m^(alpha)(xi (1-|z|^2)/|1-z|^2)
//
// which is sqrt(kernel_diag(z)) times the coherent-state wavefunction, so
// that W[psi_k] = Phi_k.
std::complex<double> transform_kernel(const ModelParams& params, const DiskPoint& z, double xi);

struct TransformRequest {
  ModelParams params;
  RadialFunction input;
  PolarGrid grid;
  int quad_order = 128;
  bool check_order = true;  // compare against order 2n
  double gap = kDefaultBoundaryGap;
};

struct PointValues {
  std::vector<std::complex<double>> values;
  // Indices whose value moved by more than 1e-8 (relative to the largest
  // value) when the half-line order was doubled.
  std::vector<std::size_t> unconverged;
  double max_order_change = 0.0;
};

struct TransformResult {
  GridField field;
  std::vector<std::size_t> unconverged;
  double max_order_change = 0.0;
};

// W[phi] at the given points. Inputs with an exact factorization
// xi^a e^(-c xi) g(xi) are integrated on the rotated ray xi = t / P,
// P = (1+z)/(2(1-z)) + c, with a Laguerre rule of parameter nu - m - 1 + a
// (exact when g is a polynomial of degree below 2n - m). Other inputs use
// the real axis with u = sigma xi, sigma = (1-|z|^2)/(2|1-z|^2) + b, b from
// the decay tag. The input decay tag must be admissible.
PointValues transform_points(const ModelParams& params, const RadialFunction& input,
                             std::span<const DiskPoint> points, int order = 128, bool check_order = true);

TransformResult bargmann_transform(const TransformRequest& req);

// The m = 0 member written on its own:
//   sqrt((2 nu - 1)/(pi Gamma(2 nu))) (1-z)^(-2 nu) int xi^nu exp(-(xi/2)(1+z)/(1-z)) phi(xi) dxi/xi
std::vector<std::complex<double>> second_bargmann(double nu, const RadialFunction& input,
                                                  std::span<const DiskPoint> points, int order = 128);

GridField second_bargmann(double nu, const RadialFunction& input, const PolarGrid& grid, int order = 128,
                          double gap = kDefaultBoundaryGap);

enum class AdjointMethod {
  // Expands the kernel in its defining series,
  //   W*F(xi) = sum_j psi_j(xi) <Phi_j, F>,
  // with the disk inner products taken by the rule for j < n_theta / 2
  // (beyond that the angular rule aliases). Trailing coefficients below
  // coefficient_tol * ||F|| are dropped.
  spectral,
  // Applies the rule directly to conj(Wk(z, xi)) F(z). Wk(., xi) is not
  // square integrable near z = 1, so this converges only algebraically in
  // n_theta; refining n_r alone does not help.
  direct,
};

struct AdjointOptions {
  AdjointMethod method = AdjointMethod::spectral;
  double coefficient_tol = 1e-13;
  int max_terms = 0;  // 0: n_theta / 2
};

// phi_hat(xi) = int_D conj(Wk(z, xi)) F(z) (1-|z|^2)^(2 nu - 2) dmu(z), with F
// sampled on the rule grid. Throws std::invalid_argument on a grid mismatch.
std::vector<std::complex<double>> adjoint_reconstruct(const ModelParams& params, const GridField& field,
                                                      std::span<const double> xi_targets, const DiskRule& rule,
                                                      const AdjointOptions& options = {});

// Samples W[phi] at the rule nodes (rule order), for use with
// adjoint_reconstruct and disk inner products.
GridField transform_on_rule(const ModelParams& params, const RadialFunction& input, const DiskRule& rule,
                            int order = 128);

using Matrix = std::vector<std::vector<std::complex<double>>>;

struct IsometryReport {
  Matrix input_gram;   // L^2(dxi/xi)
  Matrix output_gram;  // L^{2,nu}(D)
  std::vector<double> input_norms;
  std::vector<double> output_norms;
  double input_identity_deviation = 0.0;   // max |G_in - I|
  double output_identity_deviation = 0.0;  // max |G_out - I|
  double mismatch = 0.0;                   // max |G_out - G_in|
};

IsometryReport isometry_check(const ModelParams& params, std::span<const RadialFunction> inputs,
                              const DiskRule& rule, int order = 128);

using DiskFunction = std::function<std::complex<double>(std::complex<double>)>;

struct EigenResidualReport {
  double max_residual = 0.0;
  double epsilon_used = 0.0;
  double stencil_h = 0.0;
  int points_checked = 0;
};

// Applies
//   H_nu = -4 (1-|z|^2) [ (1-|z|^2) d^2/dz dzbar - 2 nu zbar d/dzbar ]
// by central differences (5-point stencil) and reports
// max |H_nu F - eps F| / max(1, |F|). Points need |z| <= 0.8. When the
// residual exceeds `tol` the step is halved and a Richardson combination
// is used; if halving makes the residual grow, std::runtime_error is thrown
// (rounding dominates the stencil).
EigenResidualReport eigen_residual(const ModelParams& params, const DiskFunction& f,
                                   std::span<const DiskPoint> points, double h = 1e-4, double tol = 1e-4);

// max |dF/dzbar| / max(1, |F|) by central differences, extrapolated from
// steps h and h / 2.
double dbar_residual(const DiskFunction& f, std::span<const DiskPoint> points, double h = 1e-4);

}  // namespace hll

#endif  // HLL_TRANSFORM_HPP
