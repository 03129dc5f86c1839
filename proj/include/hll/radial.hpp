#ifndef HLL_RADIAL_HPP
#define HLL_RADIAL_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "hll/params.hpp"

namespace hll {

// Declared bound |f(xi)| <= C xi^a e^(-b xi) on (0, inf).
struct DecayTag {
  double a = 0.0;
  double b = 0.0;
};

// Exact factorization f(xi) = xi^power e^(-rate xi) factor(xi) with `factor`
// entire. When present, integrals against f are taken on a rotated contour
// where the factor is evaluated at complex arguments.
struct AnalyticForm {
  double power = 0.0;
  double rate = 0.0;
  std::function<std::complex<double>(std::complex<double>)> factor;
};

// A real function on (0, inf), the domain side of the transform.
class RadialFunction {
 public:
  RadialFunction(std::string name, std::function<double(double)> eval, DecayTag decay,
                 std::optional<AnalyticForm> analytic = std::nullopt);

  // Throws std::domain_error for xi <= 0 or non-finite xi.
  double operator()(double xi) const;

  const std::string& name() const { return name_; }
  const DecayTag& decay() const { return decay_; }
  const std::optional<AnalyticForm>& analytic() const { return analytic_; }

 private:
  std::string name_;
  std::function<double(double)> eval_;
  DecayTag decay_;
  std::optional<AnalyticForm> analytic_;
};

// Throws std::invalid_argument unless a > 0 and 0 < b < 1/2.
void check_admissible(const DecayTag& decay);

// Spot-checks the declared decay: log|f| - a log(xi) + b xi sampled on
// xi = 2^j, j = -6 .. 9, may not rise more than `slack` (natural log units)
// above its largest value on xi <= 16. Throws std::invalid_argument naming
// the offending xi.
void check_decay(const RadialFunction& f, double slack = 20.0);

// psi_{nu,m;k}.
RadialFunction psi_input(const ModelParams& params, int k);

// sum_k coeffs[k] psi_{nu,m;k}.
RadialFunction combo_input(const ModelParams& params, std::span<const double> coeffs);

// xi^a e^(-b xi); requires a > 0 and 0 < b < 1/2.
RadialFunction powerexp_input(double a, double b);

// The identically zero input.
RadialFunction zero_input();

// <f, g> in L^2((0, inf), dxi/xi). Exact factorizations are used when both
// inputs carry one (then the rule is exact for polynomial factors);
// otherwise the decay tags pick the Laguerre weight.
double l2_inner(const RadialFunction& f, const RadialFunction& g, int order = 128);

}  // namespace hll

#endif  // HLL_RADIAL_HPP
