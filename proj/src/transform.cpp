#include "hll/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hll/coherent.hpp"
#include "hll/eigenspace.hpp"
#include "hll/specfun.hpp"

namespace hll {
namespace {

constexpr double kOrderChangeTol = 1e-8;

// log of sqrt(alpha m! / (pi Gamma(2 nu - m)))
double log_transform_constant(const ModelParams& params) {
  const int m = params.m();
  return 0.5 * (std::log(params.alpha() / std::numbers::pi) + log_gamma_ratio(m + 1.0, 2.0 * params.nu() - m));
}

// log of |1-z|^(2m) (1-|z|^2)^(-m) (1-z)^(-2 nu) times the constant.
std::complex<double> log_point_prefactor(const ModelParams& params, const DiskPoint& z) {
  const int m = params.m();
  const std::complex<double> one_minus = 1.0 - z.z();
  return log_transform_constant(params) + m * (std::log(std::norm(one_minus)) - std::log(z.one_minus_abs2())) -
         2.0 * params.nu() * std::log(one_minus);
}

double level_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// int_0^inf xi^(nu-m-1) e^(-Q xi) L_m(kappa xi) phi(xi) dxi on the ray
// xi = t / P. Re P > 0 keeps the ray inside the sector where the integrand
// decays, so rotating the contour does not change the value.
std::complex<double> rotated_integral(const ModelParams& params, const AnalyticForm& form, std::complex<double> q,
                                      double kappa, int order) {
  const int m = params.m();
  const double s = params.nu() - m - 1.0 + form.power;
  const std::complex<double> p = q + form.rate;
  const HalfLineRule& rule = cached_gauss_laguerre(s, order);
  std::complex<double> sum(0.0, 0.0);
  for (int i = 0; i < rule.order(); ++i) {
    const std::complex<double> x = rule.nodes[i] / p;
    sum += rule.weights[i] * laguerre(m, params.alpha(), kappa * x) * form.factor(x);
  }
  return sum * std::exp(-(s + 1.0) * std::log(p));
}

// Same integral on the real axis, u = sigma xi.
std::complex<double> real_axis_integral(const ModelParams& params, const RadialFunction& input,
                                        std::complex<double> q, double kappa, int order) {
  const int m = params.m();
  const double s = params.nu() - m - 1.0 + input.decay().a;
  const double sigma = q.real() + input.decay().b;
  const HalfLineRule& rule = cached_gauss_laguerre(s, order);
  std::complex<double> sum(0.0, 0.0);
  for (int i = 0; i < rule.order(); ++i) {
    const double u = rule.nodes[i];
    const double xi = u / sigma;
    const double f = input(xi);
    if (f == 0.0) continue;
    if (!std::isfinite(f)) {
      std::ostringstream msg;
      msg << "input '" << input.name() << "' is not finite at half-line node " << i << " (xi = " << xi << ")";
      throw std::runtime_error(msg.str());
    }
    const std::complex<double> log_w = (params.nu() - m - 1.0) * std::log(xi) - q * xi + u - s * std::log(u);
    sum += rule.weights[i] * std::exp(log_w) * laguerre(m, params.alpha(), kappa * xi) * f;
  }
  return sum / sigma;
}

std::complex<double> transform_at(const ModelParams& params, const RadialFunction& input, const DiskPoint& z,
                                  int order) {
  const double kappa = coherent_decay_rate(z);
  const std::complex<double> q = 0.5 * (1.0 + z.z()) / (1.0 - z.z());
  const std::complex<double> integral = input.analytic() ? rotated_integral(params, *input.analytic(), q, kappa, order)
                                                         : real_axis_integral(params, input, q, kappa, order);
  return level_sign(params.m()) * std::exp(log_point_prefactor(params, z)) * integral;
}

void check_rule_grid(const GridField& field, const DiskRule& rule) {
  if (field.values.size() != rule.size() || field.grid.radii != rule.grid.radii ||
      field.grid.angles != rule.grid.angles) {
    throw std::invalid_argument("field is not sampled on the quadrature rule grid");
  }
}

void check_stencil_point(const DiskPoint& z) {
  if (z.abs() > 0.8) throw std::invalid_argument("finite-difference checks need |z| <= 0.8");
}

struct Stencil {
  std::complex<double> f, fx, fy, fxx, fyy;
};

Stencil differences(const DiskFunction& f, std::complex<double> z, double h) {
  const std::complex<double> i(0.0, 1.0);
  const auto c = f(z);
  const auto xp = f(z + h), xm = f(z - h), yp = f(z + i * h), ym = f(z - i * h);
  return {c, (xp - xm) / (2.0 * h), (yp - ym) / (2.0 * h), (xp - 2.0 * c + xm) / (h * h),
          (yp - 2.0 * c + ym) / (h * h)};
}

std::complex<double> apply_operator(double nu, std::complex<double> z, const Stencil& s) {
  const double w = 1.0 - std::norm(z);
  const std::complex<double> dzdzbar = 0.25 * (s.fxx + s.fyy);
  const std::complex<double> dzbar = 0.5 * (s.fx + std::complex<double>(0.0, 1.0) * s.fy);
  return -4.0 * w * (w * dzdzbar - 2.0 * nu * std::conj(z) * dzbar);
}

double max_residual(const ModelParams& params, const DiskFunction& f, std::span<const DiskPoint> points, double h,
                    bool richardson) {
  double worst = 0.0;
  for (const DiskPoint& p : points) {
    const Stencil s = differences(f, p.z(), h);
    std::complex<double> hf = apply_operator(params.nu(), p.z(), s);
    if (richardson) {
      const Stencil s2 = differences(f, p.z(), 0.5 * h);
      hf = (4.0 * apply_operator(params.nu(), p.z(), s2) - hf) / 3.0;
    }
    worst = std::max(worst, std::abs(hf - params.epsilon() * s.f) / std::max(1.0, std::abs(s.f)));
  }
  return worst;
}

}  // namespace

std::complex<double> transform_kernel(const ModelParams& params, const DiskPoint& z, double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("xi must be a finite positive number");
  const double kappa = coherent_decay_rate(z);
  const std::complex<double> q = 0.5 * (1.0 + z.z()) / (1.0 - z.z());
  const std::complex<double> log_value = log_point_prefactor(params, z) + (params.nu() - params.m()) * std::log(xi) - q * xi;
  return level_sign(params.m()) * std::exp(log_value) * laguerre(params.m(), params.alpha(), kappa * xi);
}

PointValues transform_points(const ModelParams& params, const RadialFunction& input,
                             std::span<const DiskPoint> points, int order, bool check_order) {
  check_admissible(input.decay());
  if (order < 1) throw std::invalid_argument("half-line order must be positive");
  PointValues out;
  out.values.reserve(points.size());
  for (const DiskPoint& z : points) out.values.push_back(transform_at(params, input, z, order));
  if (!check_order) return out;

  std::vector<double> change(points.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::complex<double> fine = transform_at(params, input, points[i], 2 * order);
    change[i] = std::abs(fine - out.values[i]);
    scale = std::max(scale, std::abs(fine));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double rel = scale > 0.0 ? change[i] / scale : change[i];
    out.max_order_change = std::max(out.max_order_change, rel);
    if (rel > kOrderChangeTol) out.unconverged.push_back(i);
  }
  return out;
}

TransformResult bargmann_transform(const TransformRequest& req) {
  std::vector<DiskPoint> points;
  points.reserve(req.grid.size());
  for (std::size_t i = 0; i < req.grid.size(); ++i) points.emplace_back(req.grid.point(i), req.gap);
  PointValues pv = transform_points(req.params, req.input, points, req.quad_order, req.check_order);
  return {GridField{req.grid, std::move(pv.values)}, std::move(pv.unconverged), pv.max_order_change};
}

std::vector<std::complex<double>> second_bargmann(double nu, const RadialFunction& input,
                                                  std::span<const DiskPoint> points, int order) {
  make_params(nu, 0);
  check_admissible(input.decay());
  const double log_c = 0.5 * (std::log((2.0 * nu - 1.0) / std::numbers::pi) - std::lgamma(2.0 * nu));
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const DiskPoint& z : points) {
    const std::complex<double> one_minus = 1.0 - z.z();
    const std::complex<double> q = 0.5 * (1.0 + z.z()) / one_minus;
    std::complex<double> integral(0.0, 0.0);
    if (const auto& form = input.analytic()) {
      // int xi^(nu+a-1) e^(-(q+c) xi) g(xi) dxi
      const double s = nu - 1.0 + form->power;
      const std::complex<double> p = q + form->rate;
      const HalfLineRule& rule = cached_gauss_laguerre(s, order);
      for (int i = 0; i < rule.order(); ++i) integral += rule.weights[i] * form->factor(rule.nodes[i] / p);
      integral *= std::exp(-(s + 1.0) * std::log(p));
    } else {
      const double s = nu - 1.0 + input.decay().a;
      const double sigma = q.real() + input.decay().b;
      const HalfLineRule& rule = cached_gauss_laguerre(s, order);
      for (int i = 0; i < rule.order(); ++i) {
        const double u = rule.nodes[i];
        const double xi = u / sigma;
        const double f = input(xi);
        if (f == 0.0) continue;
        integral += rule.weights[i] * f * std::exp((nu - 1.0) * std::log(xi) - q * xi + u - s * std::log(u));
      }
      integral /= sigma;
    }
    out.push_back(std::exp(log_c - 2.0 * nu * std::log(one_minus)) * integral);
  }
  return out;
}

GridField second_bargmann(double nu, const RadialFunction& input, const PolarGrid& grid, int order, double gap) {
  std::vector<DiskPoint> points;
  points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) points.emplace_back(grid.point(i), gap);
  return GridField{grid, second_bargmann(nu, input, points, order)};
}

GridField transform_on_rule(const ModelParams& params, const RadialFunction& input, const DiskRule& rule,
                            int order) {
  PointValues pv = transform_points(params, input, rule.points, order, false);
  return GridField{rule.grid, std::move(pv.values)};
}

std::vector<std::complex<double>> adjoint_reconstruct(const ModelParams& params, const GridField& field,
                                                      std::span<const double> xi_targets, const DiskRule& rule,
                                                      const AdjointOptions& options) {
  check_rule_grid(field, rule);
  for (double xi : xi_targets) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("reconstruction points need xi > 0");
  }
  std::vector<std::complex<double>> out(xi_targets.size());

  if (options.method == AdjointMethod::direct) {
    for (std::size_t t = 0; t < xi_targets.size(); ++t) {
      std::complex<double> sum(0.0, 0.0);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        if (field.values[i] == 0.0) continue;
        sum += rule.weights[i] * std::conj(transform_kernel(params, rule.points[i], xi_targets[t])) * field.values[i];
      }
      out[t] = sum;
    }
    return out;
  }

  const double norm = std::sqrt(inner_product(rule, field.values, field.values).real());
  if (norm == 0.0) return out;
  const int cap = options.max_terms > 0 ? options.max_terms : rule.n_theta / 2;
  std::vector<std::complex<double>> coeffs;
  std::vector<std::complex<double>> basis(rule.size());
  for (int j = 0; j < cap; ++j) {
    for (std::size_t i = 0; i < rule.size(); ++i) basis[i] = big_phi(params, j, rule.points[i]);
    coeffs.push_back(inner_product(rule, basis, field.values));
  }
  while (!coeffs.empty() && std::abs(coeffs.back()) < options.coefficient_tol * norm) coeffs.pop_back();
  for (std::size_t t = 0; t < xi_targets.size(); ++t) {
    const std::vector<double> psi =
        laguerre_functions(params.alpha(), xi_targets[t], static_cast<int>(coeffs.size()));
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) sum += coeffs[j] * psi[j];
    out[t] = sum;
  }
  return out;
}

IsometryReport isometry_check(const ModelParams& params, std::span<const RadialFunction> inputs, const DiskRule& rule,
                              int order) {
  const std::size_t n = inputs.size();
  std::vector<GridField> images;
  images.reserve(n);
  for (const RadialFunction& f : inputs) images.push_back(transform_on_rule(params, f, rule, order));

  IsometryReport rep;
  rep.input_gram.assign(n, std::vector<std::complex<double>>(n));
  rep.output_gram.assign(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rep.input_gram[i][j] = l2_inner(inputs[i], inputs[j], order);
      rep.output_gram[i][j] = inner_product(rule, images[i].values, images[j].values);
      const double delta = i == j ? 1.0 : 0.0;
      rep.input_identity_deviation = std::max(rep.input_identity_deviation, std::abs(rep.input_gram[i][j] - delta));
      rep.output_identity_deviation =
          std::max(rep.output_identity_deviation, std::abs(rep.output_gram[i][j] - delta));
      rep.mismatch = std::max(rep.mismatch, std::abs(rep.output_gram[i][j] - rep.input_gram[i][j]));
    }
    rep.input_norms.push_back(std::sqrt(std::max(0.0, rep.input_gram[i][i].real())));
    rep.output_norms.push_back(std::sqrt(std::max(0.0, rep.output_gram[i][i].real())));
  }
  return rep;
}

EigenResidualReport eigen_residual(const ModelParams& params, const DiskFunction& f,
                                   std::span<const DiskPoint> points, double h, double tol) {
  if (!(h > 0.0)) throw std::invalid_argument("stencil step must be positive");
  for (const DiskPoint& p : points) check_stencil_point(p);
  EigenResidualReport rep;
  rep.epsilon_used = params.epsilon();
  rep.points_checked = static_cast<int>(points.size());
  rep.stencil_h = h;
  rep.max_residual = max_residual(params, f, points, h, false);
  if (rep.max_residual > tol) {
    const double halved = max_residual(params, f, points, 0.5 * h, false);
    if (halved > rep.max_residual) {
      std::ostringstream msg;
      msg << "finite-difference step too small: residual grows from " << rep.max_residual << " to " << halved
          << " when h is halved";
      throw std::runtime_error(msg.str());
    }
    rep.max_residual = max_residual(params, f, points, h, true);
    rep.stencil_h = 0.5 * h;
  }
  return rep;
}

double dbar_residual(const DiskFunction& f, std::span<const DiskPoint> points, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("stencil step must be positive");
  double worst = 0.0;
  for (const DiskPoint& p : points) {
    check_stencil_point(p);
    const Stencil s = differences(f, p.z(), h);
    const Stencil s2 = differences(f, p.z(), 0.5 * h);
    const std::complex<double> i(0.0, 1.0);
    // the O(h^2) terms do not cancel for holomorphic f, so extrapolate
    const std::complex<double> dzbar = (4.0 * 0.5 * (s2.fx + i * s2.fy) - 0.5 * (s.fx + i * s.fy)) / 3.0;
    worst = std::max(worst, std::abs(dzbar) / std::max(1.0, std::abs(s.f)));
  }
  return worst;
}

}  // namespace hll
