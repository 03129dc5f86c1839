#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hll/coherent.hpp"
#include "hll/eigenspace.hpp"
#include "hll/params.hpp"
#include "hll/quadrature.hpp"
#include "hll/radial.hpp"
#include "hll/report.hpp"
#include "hll/specfun.hpp"
#include "hll/transform.hpp"

namespace hll {
namespace {

using C = std::complex<double>;

class Rows {
 public:
  explicit Rows(const VerifyConfig& config) : config_(config) {}

  void add(const std::string& name, double value, double tolerance) {
    const auto it = config_.tolerances.find(name);
    if (it != config_.tolerances.end()) tolerance = it->second;
    rows_.push_back({name, value, tolerance, value <= tolerance});
  }

  std::vector<CheckRow> take() {
    std::set<std::string> names;
    for (const auto& r : rows_) names.insert(r.check);
    for (const auto& [name, tol] : config_.tolerances) {
      if (!names.count(name)) throw std::invalid_argument("tolerance override names no check in this suite: " + name);
    }
    return std::move(rows_);
  }

 private:
  const VerifyConfig& config_;
  std::vector<CheckRow> rows_;
};

double rel_err(double value, double ref) { return std::abs(value - ref) / std::max(std::abs(ref), 1e-300); }

// Generalized binomial coefficient binom(x, n) for integer n >= 0.
long double binom(long double x, int n) {
  long double r = 1.0L;
  for (int i = 1; i <= n; ++i) r *= (x - n + i) / i;
  return r;
}

long double laguerre_oracle(int k, long double a, long double x) {
  long double s = 0.0L, pw = 1.0L, fact = 1.0L;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      pw *= x;
      fact *= j;
    }
    s += ((j % 2) ? -1.0L : 1.0L) * binom(k + a, k - j) * pw / fact;
  }
  return s;
}

long double jacobi_oracle(int k, long double a, long double b, long double t) {
  long double s = 0.0L;
  for (int j = 0; j <= k; ++j) {
    s += binom(k + a, k - j) * binom(k + b, j) * std::pow((t - 1.0L) / 2.0L, j) * std::pow((t + 1.0L) / 2.0L, k - j);
  }
  return s;
}

long double gauss2f1_oracle(int k, long double b, long double c, long double y) {
  long double s = 1.0L, term = 1.0L;
  for (int j = 0; j < k; ++j) {
    term *= (-k + j) * (b + j) / ((c + j) * (j + 1)) * y;
    s += term;
  }
  return s;
}

std::vector<int> levels(const VerifyConfig& config) {
  if (config.m) {
    make_params(config.nu, *config.m);
    return {*config.m};
  }
  std::vector<int> out;
  for (int m = 0; m <= max_level(config.nu); ++m) out.push_back(m);
  return out;
}

DiskRule rule_for(const VerifyConfig& config, const ModelParams& p) {
  return disk_rule(p, config.disk_n_r, config.disk_n_theta, std::min(config.disk_r_max, 1.0));
}

std::vector<DiskPoint> points_within(double radius) {
  const C samples[] = {C(0.0, 0.0), C(0.3, 0.0), std::polar(0.5, std::numbers::pi / 3), C(-0.7, 0.0),
                       C(0.0, 0.8), C(0.2, -0.6), std::polar(0.75, 2.5), C(0.55, 0.1)};
  std::vector<DiskPoint> out;
  for (C z : samples) {
    if (std::abs(z) <= radius) out.emplace_back(z);
  }
  return out;
}

void specfun_checks(const VerifyConfig& config, Rows& rows) {
  std::vector<double> alphas = {0.5, 1.0, 4.2};
  for (int m : levels(config)) alphas.push_back(make_params(config.nu, m).alpha());

  double lag = 0.0, jac = 0.0, g2f1 = 0.0, sym = 0.0, id624 = 0.0, kummer = 0.0;
  for (double a : alphas) {
    for (int k = 0; k <= 12; ++k) {
      for (double x : {0.1, 1.5, 3.0, 7.7, 15.0}) {
        const long double ref = laguerre_oracle(k, a, x);
        lag = std::max(lag, static_cast<double>(std::abs(laguerre(k, a, x) - ref) / std::max(std::abs(ref), 1.0L)));
      }
      for (double b : {0.0, 0.5, 2.0}) {
        for (double t : {-0.9, -0.3, 0.0, 0.5, 0.9}) {
          const long double ref = jacobi_oracle(k, b, a, t);
          jac = std::max(jac, static_cast<double>(std::abs(jacobi(k, b, a, t) - ref) / std::max(std::abs(ref), 1.0L)));
          const double lhs = jacobi(k, b, a, t);
          const double rhs = ((k % 2) ? -1.0 : 1.0) * jacobi(k, a, b, -t);
          sym = std::max(sym, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0));
        }
      }
    }
    for (int m = 1; m <= 6; ++m) {
      for (int s = 1; s <= m; ++s) {
        for (double t : {-0.8, -0.2, 0.3, 0.95}) {
          const double lhs = std::exp(log_gamma_ratio(m + 1.0, m - s + 1.0)) * jacobi(m, -s, a, t);
          const double rhs = std::exp(log_gamma_ratio(m + a + 1.0, m - s + a + 1.0)) * std::pow((t - 1.0) / 2.0, s) *
                             jacobi(m - s, s, a, t);
          id624 = std::max(id624, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
        }
      }
    }
    for (int m = 0; m <= 8; ++m) {
      for (double x : {0.2, 1.5, 6.0}) {
        const double lhs = kummer1f1_terminating(m, 1.0 + a, x);
        const double rhs = std::exp(log_gamma_ratio(m + 1.0, 1.0) + log_gamma_ratio(1.0 + a, 1.0 + a + m)) * laguerre(m, a, x);
        kummer = std::max(kummer, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
      }
    }
    for (int k = 0; k <= 12; ++k) {
      for (double b : {-2.0, 0.7, 3.0}) {
        for (double y : {-1.1, 0.4}) {
          const long double ref = gauss2f1_oracle(k, b, 1.0 + a, y);
          g2f1 = std::max(g2f1, static_cast<double>(std::abs(gauss2f1_terminating(k, b, 1.0 + a, y) - ref) /
                                                    std::max(std::abs(ref), 1.0L)));
        }
      }
    }
  }
  rows.add("laguerre_series_oracle", lag, 1e-11);
  rows.add("jacobi_series_oracle", jac, 1e-11);
  rows.add("gauss2f1_series_oracle", g2f1, 1e-13);
  rows.add("jacobi_symmetry", sym, 1e-12);
  rows.add("jacobi_negative_parameter_identity", id624, 1e-10);
  rows.add("kummer_laguerre_reduction", kummer, 1e-10);

  double bgf = 0.0;
  for (int m : levels(config)) {
    const double a = make_params(config.nu, m).alpha();
    const double b = -m;
    for (double lambda : {-0.7, 0.3, 0.7}) {
      for (double y : {-2.5, 0.4}) {
        for (double xi : {0.5, 3.0}) {
          double lhs = 0.0, lp = 1.0;
          for (int k = 0; k < 200; ++k) {
            lhs += lp * gauss2f1_terminating(k, b, 1.0 + a, y) * laguerre(k, a, xi);
            lp *= lambda;
          }
          const double d = 1.0 - lambda + y * lambda;
          const double arg = xi * y * lambda / ((1.0 - lambda) * d);
          const double rhs = std::pow(1.0 - lambda, b - 1.0 - a) / std::pow(d, b) *
                             std::exp(-xi * lambda / (1.0 - lambda)) * kummer1f1_terminating(m, 1.0 + a, arg);
          bgf = std::max(bgf, rel_err(lhs, rhs));
        }
      }
    }
  }
  rows.add("bilateral_generating_function", bgf, 1e-8);

  double lgr = 0.0;
  for (double p : {0.3, 2.5, 7.5, 1e3, 1e5}) {
    for (int n : {1, 5, 40}) {
      double ref = 0.0;
      for (int i = 0; i < n; ++i) ref += std::log(p + i);
      lgr = std::max(lgr, rel_err(log_gamma_ratio(p + n, p), ref));
      lgr = std::max(lgr, rel_err(log_gamma_ratio(p, p + n), -ref));
    }
  }
  rows.add("log_gamma_ratio_recurrence", lgr, 1e-13);

  double moments = 0.0;
  for (double a : alphas) {
    for (int n : {16, 64}) {
      const HalfLineRule& rule = cached_gauss_laguerre(a, n);
      for (int j = 0; j < 2 * n; ++j) {
        const double lg = std::lgamma(a + 1.0 + j);
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::exp(std::log(rule.weights[i]) + j * std::log(rule.nodes[i]) - lg);
        moments = std::max(moments, std::abs(s - 1.0));
      }
    }
  }
  rows.add("gauss_laguerre_moments", moments, 1e-11);

  double mass = 0.0;
  for (int m : levels(config)) {
    const ModelParams p = make_params(config.nu, m);
    const DiskRule rule = rule_for(config, p);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    mass = std::max(mass, rel_err(total, disk_weight_mass(config.nu, rule.r_max)));
    if (rule.r_max == 1.0) {
      for (int q = 1; q <= 3; ++q) {
        std::vector<C> f(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i) f[i] = std::pow(rule.points[i].one_minus_abs2(), q);
        mass = std::max(mass, rel_err(integrate_disk(rule, f).real(), std::numbers::pi / (q + 2.0 * config.nu - 1.0)));
      }
    }
  }
  rows.add("disk_rule_mass", mass, 1e-10);
}

void eigenspace_checks(const VerifyConfig& config, Rows& rows) {
  double eps = 0.0, gram = 0.0, norms = 0.0, dual = 0.0, herm = 0.0, diag = 0.0, mercer_d = 0.0, mercer_o = 0.0;
  double monotone = 0.0, repro = 0.0, eig = 0.0;
  const auto eval_points = points_within(0.8);
  for (int m : levels(config)) {
    const ModelParams p = make_params(config.nu, m);
    eps = std::max(eps, std::abs(p.epsilon() - 4.0 * m * (2.0 * config.nu - m - 1.0)));
    const DiskRule rule = rule_for(config, p);
    std::vector<std::vector<C>> basis(9), raw(9);
    for (int k = 0; k <= 8; ++k) {
      for (const DiskPoint& z : rule.points) {
        basis[k].push_back(big_phi(p, k, z));
        raw[k].push_back(phi(p, k, z));
      }
    }
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        gram = std::max(gram, std::abs(inner_product(rule, basis[j], basis[k]) - (j == k ? 1.0 : 0.0)));
      }
      norms = std::max(norms, rel_err(inner_product(rule, raw[j], raw[j]).real(), rho(p, j)));
    }

    const PolarGrid grid = PolarGrid::uniform(20, 32, 0.95);
    for (int k = 0; k <= 10; ++k) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const DiskPoint z(grid.point(i));
        const C a = big_phi(p, k, z);
        dual = std::max(dual, std::abs(a - big_phi_alt(p, k, z)) / (1.0 + std::abs(a)));
      }
    }

    const auto mercer_points = points_within(0.6);
    for (const DiskPoint& z : mercer_points) {
      for (const DiskPoint& w : mercer_points) {
        const C kzw = kernel(p, z, w);
        herm = std::max(herm, std::abs(kzw - std::conj(kernel(p, w, z))) / std::abs(kzw));
        const MercerSum s = mercer_kernel(p, z, w, 1e-6);
        mercer_o = std::max(mercer_o, std::abs(s.value - kzw) / std::abs(kzw) + (s.converged ? 0.0 : 1.0));
      }
      diag = std::max(diag, rel_err(kernel(p, z, z).real(), kernel_diag(p, z)));
      const MercerSum s = mercer_kernel(p, z, z, 1e-6);
      mercer_d = std::max(mercer_d, rel_err(s.value.real(), kernel_diag(p, z)) + (s.converged ? 0.0 : 1.0));
      double partial = 0.0;
      for (int k = 0; k < 256; ++k) {
        const double next = partial + std::norm(big_phi(p, k, z));
        monotone = std::max(monotone, partial - next);
        partial = next;
      }
    }

    for (const DiskPoint& z : points_within(0.5)) {
      std::vector<C> kz(rule.size());
      for (std::size_t i = 0; i < rule.size(); ++i) kz[i] = kernel(p, z, rule.points[i]);
      for (int k = 0; k <= 5; ++k) {
        C s(0.0, 0.0);
        for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * kz[i] * basis[k][i];
        repro = std::max(repro, std::abs(s - big_phi(p, k, z)));
      }
    }

    for (int k : {0, 1, 3, 6}) {
      const auto rep = eigen_residual(p, [&](C z) { return big_phi(p, k, DiskPoint(z)); }, eval_points);
      eig = std::max(eig, rep.max_residual);
    }
  }
  rows.add("epsilon_formula", eps, 0.0);
  rows.add("orthonormality", gram, 1e-7);
  rows.add("norm_formula", norms, 1e-8);
  rows.add("dual_form_agreement", dual, 1e-10);
  rows.add("kernel_hermitian", herm, 1e-12);
  rows.add("kernel_diagonal", diag, 1e-12);
  rows.add("mercer_diagonal", mercer_d, 1e-6);
  rows.add("mercer_offdiagonal", mercer_o, 1e-6);
  rows.add("mercer_monotone", monotone, 0.0);
  rows.add("reproducing_property", repro, 1e-6);
  rows.add("eigen_equation_basis", eig, 1e-4);

  // Level 0 is the weighted Bergman space of holomorphic functions.
  const ModelParams p0 = make_params(config.nu, 0);
  double mono = 0.0;
  for (const DiskPoint& z : eval_points) {
    for (int k = 0; k <= 8; ++k) {
      const double c = std::sqrt((2.0 * config.nu - 1.0) / std::numbers::pi) *
                       std::exp(0.5 * (log_gamma_ratio(2.0 * config.nu + k, 2.0 * config.nu) - std::lgamma(k + 1.0)));
      const C ref = c * std::pow(z.z(), k);
      mono = std::max(mono, std::abs(big_phi(p0, k, z) - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  rows.add("bergman_monomial", mono, 1e-12);
  double dbar = 0.0;
  for (int k = 0; k <= 8; ++k) {
    dbar = std::max(dbar, dbar_residual([&](C z) { return big_phi(p0, k, DiskPoint(z)); }, eval_points));
  }
  rows.add("bergman_dbar", dbar, 1e-6);
}

void coherent_checks(const VerifyConfig& config, Rows& rows) {
  double psi_gram = 0.0, series = 0.0, origin = 0.0, norm = 0.0, coeff = 0.0;
  double bad_rate = 0.0;
  const C zs[] = {C(0.0, 0.0), C(0.3, 0.0), std::polar(0.5, std::numbers::pi / 3), C(-0.7, 0.0)};
  for (int m : levels(config)) {
    const ModelParams p = make_params(config.nu, m);
    std::vector<RadialFunction> psis;
    for (int k = 0; k <= 8; ++k) psis.push_back(psi_input(p, k));
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        psi_gram = std::max(psi_gram, std::abs(l2_inner(psis[j], psis[k], config.quad_order) - (j == k ? 1.0 : 0.0)));
      }
    }

    const HalfLineRule& nodes = cached_gauss_laguerre(p.alpha(), 32);
    const HalfLineRule& rule = cached_gauss_laguerre(p.alpha(), config.quad_order);
    for (C zc : zs) {
      const DiskPoint z(zc);
      double sup = 0.0, diff = 0.0;
      for (double xi : nodes.nodes) {
        const C closed = coherent_closed(p, z, xi);
        diff = std::max(diff, std::abs(coherent_series(p, z, xi).value - closed));
        sup = std::max(sup, std::abs(closed));
      }
      series = std::max(series, diff / std::max(1.0, sup));
      norm = std::max(norm, std::abs(coherent_norm2(p, z) - 1.0));
      if (!(coherent_decay_rate(z) > 0.0)) bad_rate += 1.0;

      // <Psi_z, psi_k> sqrt(K(z,z)) against Phi_k(z)
      // with u = sigma xi, sigma the combined decay rate of the integrand
      const double root_diag = std::sqrt(kernel_diag(p, z));
      const double sigma = 0.5 * coherent_decay_rate(z) + 0.5;
      for (int k = 0; k <= 8; ++k) {
        const C ip = integrate_halfline(rule, [&](double u) {
          const double xi = u / sigma;
          return std::conj(coherent_closed(p, z, xi)) * psi_basis(p, k, xi) *
                 std::exp(u - (p.alpha() + 1.0) * std::log(u));
        });
        coeff = std::max(coeff, std::abs(std::abs(ip) * root_diag - std::abs(big_phi(p, k, z))));
      }
    }
    const DiskPoint zero(C(0.0, 0.0));
    for (double xi : nodes.nodes) {
      const double ref = ((m % 2) ? -1.0 : 1.0) * psi_basis(p, m, xi);
      origin = std::max(origin, std::abs(coherent_series(p, zero, xi).value - ref));
      origin = std::max(origin, std::abs(coherent_closed(p, zero, xi) - ref));
    }
  }
  rows.add("psi_orthonormality", psi_gram, 1e-12);
  rows.add("decay_rate_positive", bad_rate, 0.0);
  rows.add("series_vs_closed", series, 1e-8);
  rows.add("series_at_origin", origin, 1e-12);
  rows.add("coherent_normalization", norm, 1e-8);
  rows.add("expansion_coefficients", coeff, 1e-8);
}

void transform_checks(const VerifyConfig& config, Rows& rows) {
  const auto eval_points = points_within(0.8);
  double corr = 0.0, in_gram = 0.0, out_gram = 0.0, combo = 0.0, zero = 0.0, order = 0.0, eig = 0.0;
  double roundtrip = 0.0, rec_norm = 0.0;
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(0.1 * std::pow(200.0, i / 40.0));

  for (int m : levels(config)) {
    const ModelParams p = make_params(config.nu, m);
    const DiskRule rule = rule_for(config, p);
    std::vector<RadialFunction> psis;
    for (int k = 0; k <= 8; ++k) psis.push_back(psi_input(p, k));

    for (int k = 0; k <= 8; ++k) {
      const PointValues pv = transform_points(p, psis[k], eval_points, config.quad_order);
      order = std::max(order, pv.max_order_change);
      for (std::size_t i = 0; i < eval_points.size(); ++i) {
        corr = std::max(corr, std::abs(pv.values[i] - big_phi(p, k, eval_points[i])));
      }
    }

    const IsometryReport iso = isometry_check(p, psis, rule, config.quad_order);
    in_gram = std::max(in_gram, iso.input_identity_deviation);
    out_gram = std::max(out_gram, iso.output_identity_deviation);

    const double c[] = {0.6, 0.8};
    const RadialFunction mix = combo_input(p, c);
    const GridField image = transform_on_rule(p, mix, rule, config.quad_order);
    combo = std::max(combo, std::abs(std::sqrt(inner_product(rule, image.values, image.values).real()) - 1.0));
    const GridField none = transform_on_rule(p, zero_input(), rule, config.quad_order);
    zero = std::max(zero, std::sqrt(inner_product(rule, none.values, none.values).real()));

    for (int k : {0, 2, 5}) {
      const auto rep = eigen_residual(
          p,
          [&](C z) {
            const DiskPoint q(z);
            return transform_points(p, psis[k], std::span(&q, 1), config.quad_order, false).values[0];
          },
          eval_points);
      eig = std::max(eig, rep.max_residual);
    }

    const double half = std::sqrt(0.5);
    const double h[] = {half, half};
    const std::vector<RadialFunction> span_inputs = {psis[0], psis[1], psis[4], combo_input(p, h)};
    for (const RadialFunction& f : span_inputs) {
      const GridField field = transform_on_rule(p, f, rule, config.quad_order);
      const auto rec = adjoint_reconstruct(p, field, xs, rule);
      for (std::size_t i = 0; i < xs.size(); ++i) roundtrip = std::max(roundtrip, std::abs(rec[i] - f(xs[i])));
    }
    const GridField field = transform_on_rule(p, span_inputs[3], rule, config.quad_order);
    const HalfLineRule& hr = cached_gauss_laguerre(p.alpha(), 64);
    const auto rec = adjoint_reconstruct(p, field, hr.nodes, rule);
    double n2 = 0.0;
    for (int i = 0; i < hr.order(); ++i) {
      n2 += hr.weights[i] * std::norm(rec[i]) * std::exp(hr.nodes[i] - (p.alpha() + 1.0) * std::log(hr.nodes[i]));
    }
    rec_norm = std::max(rec_norm, std::abs(std::sqrt(n2) - 1.0));
  }
  rows.add("basis_correspondence", corr, 1e-8);
  rows.add("input_gram", in_gram, 1e-6);
  rows.add("output_gram", out_gram, 1e-6);
  rows.add("combo_norm", combo, 1e-6);
  rows.add("zero_input_norm", zero, 0.0);
  rows.add("order_doubling", order, 1e-10);
  rows.add("eigen_equation_image", eig, 1e-4);
  rows.add("resolution_of_identity", roundtrip, 1e-4);
  rows.add("reconstruction_norm", rec_norm, 1e-5);

  // Level 0: the second Bargmann transform.
  const ModelParams p0 = make_params(config.nu, 0);
  double agree = 0.0, laplace = 0.0, dbar = 0.0, constant = 0.0;
  for (int k = 0; k <= 8; ++k) {
    const RadialFunction f = psi_input(p0, k);
    const auto general = transform_points(p0, f, eval_points, config.quad_order, false).values;
    const auto special = second_bargmann(config.nu, f, eval_points, config.quad_order);
    for (std::size_t i = 0; i < eval_points.size(); ++i) {
      agree = std::max(agree, std::abs(general[i] - special[i]) / std::max(1.0, std::abs(special[i])));
      // int e^(-p xi) xi^a L_k(xi) dxi = Gamma(a+k+1)/k! (p-1)^k p^(-a-k-1), p = 1/(1-z)
      const C z = eval_points[i].z();
      const double a = p0.alpha();
      const C pp = 1.0 / (1.0 - z);
      const C laplace_value = std::exp(0.5 * (std::log(a / std::numbers::pi) + log_gamma_ratio(k + a + 1.0, k + 1.0) -
                                              std::lgamma(a + 1.0))) *
                              std::pow(1.0 - z, -2.0 * config.nu) * std::pow(pp - 1.0, k) *
                              std::exp(-(a + k + 1.0) * std::log(pp));
      laplace = std::max(laplace, std::abs(special[i] - laplace_value) / std::max(1.0, std::abs(laplace_value)));
    }
  }
  for (const RadialFunction& f : {psi_input(p0, 3), powerexp_input(2.0, 0.3)}) {
    dbar = std::max(dbar, dbar_residual(
                              [&](C z) {
                                const DiskPoint q(z);
                                return second_bargmann(config.nu, f, std::span(&q, 1), config.quad_order)[0];
                              },
                              eval_points));
  }
  constant = eigen_residual(p0, [](C) { return C(1.0, 0.0); }, eval_points).max_residual;
  rows.add("second_bargmann_agreement", agree, 1e-12);
  rows.add("laplace_laguerre_oracle", laplace, 1e-10);
  rows.add("holomorphy_dbar", dbar, 1e-6);
  rows.add("constant_residual", constant, 1e-6);

  const DiskRule rule0 = rule_for(config, p0);
  GridField off{rule0.grid, {}};
  for (const DiskPoint& z : rule0.points) off.values.push_back(std::conj(big_phi(p0, 1, z)));
  const auto rec = adjoint_reconstruct(p0, off, xs, rule0);
  double rec_sup = 0.0;
  for (const C& v : rec) rec_sup = std::max(rec_sup, std::abs(v));
  const double f_norm = std::sqrt(inner_product(rule0, off.values, off.values).real());
  rows.add("orthocomplement_ratio", rec_sup / f_norm, 1e-3);
}

}  // namespace

void write_report(std::ostream& out, const std::vector<CheckRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "check,value,tolerance,pass\n";
  out << std::scientific << std::setprecision(6);
  for (const CheckRow& r : rows) {
    out << r.check << ',' << r.value << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

std::vector<CheckRow> run_suite(std::string_view suite, const VerifyConfig& config) {
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  make_params(config.nu, 0);
  if (config.m) make_params(config.nu, *config.m);
  if (config.quad_order < 8) throw std::invalid_argument("quadrature order must be at least 8");
  for (const auto& [name, tol] : config.tolerances) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance for " + name + " must be positive");
  }
  Rows rows(config);
  const bool all = suite == "all";
  if (all || suite == "specfun") specfun_checks(config, rows);
  if (all || suite == "eigenspace") eigenspace_checks(config, rows);
  if (all || suite == "coherent") coherent_checks(config, rows);
  if (all || suite == "transform") transform_checks(config, rows);
  return rows.take();
}

}  // namespace hll
