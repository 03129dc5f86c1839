#include "hll/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hll/coherent.hpp"
#include "hll/quadrature.hpp"
#include "hll/specfun.hpp"

namespace hll {

RadialFunction::RadialFunction(std::string name, std::function<double(double)> eval, DecayTag decay,
                               std::optional<AnalyticForm> analytic)
    : name_(std::move(name)), eval_(std::move(eval)), decay_(decay), analytic_(std::move(analytic)) {}

double RadialFunction::operator()(double xi) const {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("radial functions live on xi > 0");
  return eval_(xi);
}

void check_admissible(const DecayTag& decay) {
  if (!(decay.a > 0.0) || !std::isfinite(decay.a)) {
    throw std::invalid_argument("inadmissible decay: need power a > 0");
  }
  if (!(decay.b > 0.0 && decay.b < 0.5)) {
    std::ostringstream msg;
    msg << "inadmissible decay bound: need 0 < b < 1/2, got b = " << decay.b;
    throw std::invalid_argument(msg.str());
  }
}

void check_decay(const RadialFunction& f, double slack) {
  const DecayTag& d = f.decay();
  double reference = -std::numeric_limits<double>::infinity();
  for (int j = -6; j <= 9; ++j) {
    const double xi = std::ldexp(1.0, j);
    const double value = std::abs(f(xi));
    if (value == 0.0) continue;
    const double g = std::log(value) - d.a * std::log(xi) + d.b * xi;
    if (xi <= 16.0) {
      reference = std::max(reference, g);
    } else if (g > reference + slack) {
      std::ostringstream msg;
      msg << "declared decay (a = " << d.a << ", b = " << d.b << ") of '" << f.name() << "' fails at xi = " << xi;
      throw std::invalid_argument(msg.str());
    }
  }
}

RadialFunction psi_input(const ModelParams& params, int k) {
  if (k < 0) throw std::invalid_argument("basis index must be non-negative");
  const double a = params.alpha();
  const double log_norm = 0.5 * log_gamma_ratio(k + 1.0, k + a + 1.0);
  AnalyticForm form{params.nu() - params.m(), 0.5, [k, a, log_norm](std::complex<double> x) {
                      return std::exp(log_norm) * laguerre(k, a, x);
                    }};
  return RadialFunction(
      "psi:" + std::to_string(k), [params, k](double xi) { return psi_basis(params, k, xi); },
      DecayTag{params.nu() - params.m(), 0.25}, std::move(form));
}

RadialFunction combo_input(const ModelParams& params, std::span<const double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("combination needs at least one coefficient");
  std::vector<double> c(coeffs.begin(), coeffs.end());
  std::vector<double> norms(c.size());
  const double a = params.alpha();
  for (std::size_t k = 0; k < c.size(); ++k) norms[k] = std::exp(0.5 * log_gamma_ratio(k + 1.0, k + a + 1.0));
  AnalyticForm form{params.nu() - params.m(), 0.5, [c, norms, a](std::complex<double> x) {
                      std::complex<double> s(0.0, 0.0);
                      for (std::size_t k = 0; k < c.size(); ++k) {
                        if (c[k] != 0.0) s += c[k] * norms[k] * laguerre(static_cast<int>(k), a, x);
                      }
                      return s;
                    }};
  std::ostringstream name;
  name << "combo:";
  for (std::size_t k = 0; k < c.size(); ++k) name << (k ? "," : "") << c[k];
  return RadialFunction(
      name.str(),
      [params, c](double xi) {
        const std::vector<double> psi = laguerre_functions(params.alpha(), xi, static_cast<int>(c.size()));
        double s = 0.0;
        for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * psi[k];
        return s;
      },
      DecayTag{params.nu() - params.m(), 0.25}, std::move(form));
}

RadialFunction powerexp_input(double a, double b) {
  const DecayTag tag{a, b};
  check_admissible(tag);
  std::ostringstream name;
  name << "powerexp:" << a << ',' << b;
  return RadialFunction(
      name.str(), [a, b](double xi) { return std::exp(a * std::log(xi) - b * xi); }, tag,
      AnalyticForm{a, b, [](std::complex<double>) { return std::complex<double>(1.0, 0.0); }});
}

RadialFunction zero_input() {
  return RadialFunction(
      "zero", [](double) { return 0.0; }, DecayTag{1.0, 0.25},
      AnalyticForm{1.0, 0.25, [](std::complex<double>) { return std::complex<double>(0.0, 0.0); }});
}

double l2_inner(const RadialFunction& f, const RadialFunction& g, int order) {
  const auto& ff = f.analytic();
  const auto& gf = g.analytic();
  if (ff && gf) {
    // int xi^(pf+pg-1) e^(-(rf+rg) xi) F(xi) G(xi) dxi with u = (rf+rg) xi.
    const double p = ff->power + gf->power;
    const double s = ff->rate + gf->rate;
    const HalfLineRule& rule = cached_gauss_laguerre(p - 1.0, order);
    const auto sum = integrate_halfline(rule, [&](double u) {
      const std::complex<double> x(u / s, 0.0);
      return std::complex<double>((ff->factor(x) * gf->factor(x)).real(), 0.0);
    });
    return std::exp(-p * std::log(s)) * sum.real();
  }
  const double p = f.decay().a + g.decay().a;
  const double s = f.decay().b + g.decay().b;
  const HalfLineRule& rule = cached_gauss_laguerre(p - 1.0, order);
  const auto sum = integrate_halfline(rule, [&](double u) {
    const double xi = u / s;
    const double fg = f(xi) * g(xi);
    if (fg == 0.0) return std::complex<double>(0.0, 0.0);
    return std::complex<double>(fg * std::exp(u - p * std::log(u)), 0.0);
  });
  return sum.real();
}

}  // namespace hll
