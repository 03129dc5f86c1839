#include "hll/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hll {

namespace {

// Orthonormal three-term recurrence
//   b_{k+1} q_{k+1} = (x - a_k) q_k - b_k q_{k-1},   q_0 = 1 / sqrt(mass)
// with diag = a_0..a_{n-1}, off = b_1..b_{n-1}.
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> off;
  double mass = 1.0;
};

struct GaussNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
};

constexpr double kRescale = 1e100;

// p_n(x) / p_n'(x) for the monic polynomial of the recurrence.
double newton_ratio(const Recurrence& rc, double x) {
  const std::size_t n = rc.diag.size();
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double b2 = k == 0 ? 0.0 : rc.off[k - 1] * rc.off[k - 1];
    const double p_next = (x - rc.diag[k]) * p - b2 * p_prev;
    const double d_next = p + (x - rc.diag[k]) * d - b2 * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::abs(p) > kRescale || std::abs(d) > kRescale) {
      p_prev /= kRescale;
      p /= kRescale;
      d_prev /= kRescale;
      d /= kRescale;
    }
  }
  return p / d;
}

// ln sum_{k<n} q_k(x)^2 for the orthonormal polynomials.
double log_christoffel_sum(const Recurrence& rc, double x) {
  const std::size_t n = rc.diag.size();
  double q_prev = 0.0;
  double q = 1.0 / std::sqrt(rc.mass);
  double sum = q * q;
  double log_scale = 0.0;  // true q = q * exp(log_scale)
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double b_k = k == 0 ? 0.0 : rc.off[k - 1];
    const double q_next = ((x - rc.diag[k]) * q - b_k * q_prev) / rc.off[k];
    q_prev = q;
    q = q_next;
    sum += q * q;
    if (std::abs(q) > kRescale) {
      q_prev /= kRescale;
      q /= kRescale;
      sum /= kRescale * kRescale;
      log_scale += std::log(kRescale);
    }
  }
  return std::log(sum) + 2.0 * log_scale;
}

GaussNodes golub_welsch(const Recurrence& rc, const std::string& what) {
  const Eigen::Index n = static_cast<Eigen::Index>(rc.diag.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(rc.diag.data(), n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i + 1 < n; ++i) sub[i] = rc.off[static_cast<std::size_t>(i)];

  GaussNodes out;
  if (n == 1) {
    out.nodes = {rc.diag[0]};
    out.weights = {rc.mass};
    return out;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Golub-Welsch eigen-solver did not converge for " + what);
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  out.nodes.assign(ev.data(), ev.data() + n);

  for (Eigen::Index i = 0; i < n; ++i) {
    double& x = out.nodes[static_cast<std::size_t>(i)];
    const double lo = i > 0 ? ev[i - 1] : -std::numeric_limits<double>::infinity();
    const double hi = i + 1 < n ? ev[i + 1] : std::numeric_limits<double>::infinity();
    for (int it = 0; it < 3; ++it) {
      const double step = newton_ratio(rc, x);
      const double candidate = x - step;
      if (!std::isfinite(candidate) || candidate <= lo || candidate >= hi) break;
      x = candidate;
      if (std::abs(step) <= 1e-16 * std::abs(x)) break;
    }
  }

  out.weights.resize(out.nodes.size());
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    out.weights[i] = std::exp(-log_christoffel_sum(rc, out.nodes[i]));
  }
  return out;
}

// Jacobi weight (1 - x)^a (1 + x)^b on [-1, 1].
Recurrence jacobi_recurrence(double a, double b, int n) {
  Recurrence rc;
  rc.diag.resize(static_cast<std::size_t>(n));
  rc.off.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    rc.diag[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    rc.off[k - 1] = std::sqrt(num / den);
  }
  rc.mass = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                     std::lgamma(ab + 2.0));
  return rc;
}

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be at least 1");
}

}  // namespace

HalfLineRule gauss_laguerre(double alpha, int n) {
  check_order(n);
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("Laguerre weight exponent must exceed -1");
  }
  Recurrence rc;
  rc.diag.resize(static_cast<std::size_t>(n));
  rc.off.resize(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n; ++k) rc.diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) rc.off[k - 1] = std::sqrt(k * (k + alpha));
  rc.mass = std::tgamma(alpha + 1.0);
  if (!std::isfinite(rc.mass)) rc.mass = std::exp(std::lgamma(alpha + 1.0));

  auto g = golub_welsch(rc, "Gauss-Laguerre (alpha=" + std::to_string(alpha) +
                                ", n=" + std::to_string(n) + ")");
  return HalfLineRule{alpha, std::move(g.nodes), std::move(g.weights)};
}

const HalfLineRule& cached_gauss_laguerre(double alpha, int n) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, std::unique_ptr<const HalfLineRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{alpha, n}];
  if (!slot) slot = std::make_unique<const HalfLineRule>(gauss_laguerre(alpha, n));
  return *slot;
}

std::complex<double> integrate_halfline(const HalfLineRule& rule,
                                        const std::function<std::complex<double>(double)>& f) {
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::complex<double> v = f(rule.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::runtime_error("non-finite integrand sample at half-line node " + std::to_string(i));
    }
    sum += rule.weights[i] * v;
  }
  return sum;
}

UnitIntervalRule gauss_jacobi_unit(double gamma, int n) {
  check_order(n);
  if (!(gamma > -1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("Jacobi weight exponent must exceed -1");
  }
  auto g = golub_welsch(jacobi_recurrence(gamma, 0.0, n),
                        "Gauss-Jacobi (gamma=" + std::to_string(gamma) + ", n=" + std::to_string(n) + ")");
  UnitIntervalRule rule;
  rule.gamma = gamma;
  const double scale = std::pow(2.0, -gamma - 1.0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    rule.nodes.push_back(0.5 * (1.0 + g.nodes[i]));
    rule.one_minus_nodes.push_back(0.5 * (1.0 - g.nodes[i]));
    rule.weights.push_back(scale * g.weights[i]);
  }
  return rule;
}

double disk_weight_mass(double nu, double r_max) {
  const double p = 2.0 * nu - 1.0;
  if (r_max >= 1.0) return std::numbers::pi / p;
  // pi int_0^{r^2} (1-u)^(p-1) du
  return -std::numbers::pi * std::expm1(p * std::log1p(-r_max * r_max)) / p;
}

DiskRule disk_rule(const ModelParams& params, int n_r, int n_theta, double r_max) {
  if (n_r < 4 || n_theta < 4) throw std::invalid_argument("disk rule needs n_r, n_theta >= 4");
  if (!(r_max > 0.0 && r_max <= 1.0)) throw std::invalid_argument("disk rule needs 0 < r_max <= 1");

  DiskRule rule;
  rule.n_r = n_r;
  rule.n_theta = n_theta;
  rule.r_max = r_max;
  rule.weight_exponent = params.beta() - 2.0;
  rule.level = params.m();

  // radial weights for int_0^{u_max} f(u) (1-u)^(2 nu - 2) du
  std::vector<double> u, one_minus_u, w;
  if (r_max >= 1.0) {
    const int m = params.m();
    auto jr = gauss_jacobi_unit(rule.weight_exponent - 2.0 * m, n_r);
    u = jr.nodes;
    one_minus_u = jr.one_minus_nodes;
    for (std::size_t i = 0; i < u.size(); ++i) {
      w.push_back(jr.weights[i] * std::pow(one_minus_u[i], 2.0 * m));
    }
  } else {
    const double u_max = r_max * r_max;
    auto lr = gauss_jacobi_unit(0.0, n_r);
    for (std::size_t i = 0; i < lr.nodes.size(); ++i) {
      const double ui = u_max * lr.nodes[i];
      u.push_back(ui);
      one_minus_u.push_back(1.0 - ui);
      w.push_back(u_max * lr.weights[i] * std::pow(1.0 - ui, rule.weight_exponent));
    }
  }

  rule.grid.radii.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) rule.grid.radii[i] = std::sqrt(u[i]);
  rule.grid.angles.resize(static_cast<std::size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) rule.grid.angles[j] = 2.0 * std::numbers::pi * j / n_theta;

  // dmu = r dr dtheta = (1/2) du dtheta
  const double angular = 2.0 * std::numbers::pi / n_theta;
  rule.points.reserve(rule.grid.size());
  rule.weights.reserve(rule.grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (int j = 0; j < n_theta; ++j) {
      rule.points.emplace_back(std::polar(rule.grid.radii[i], rule.grid.angles[j]), 0.0);
      rule.weights.push_back(0.5 * w[i] * angular);
    }
  }
  return rule;
}

std::complex<double> integrate_disk(const DiskRule& rule, std::span<const std::complex<double>> samples) {
  if (samples.size() != rule.size()) throw std::invalid_argument("sample count does not match disk rule");
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) sum += rule.weights[i] * samples[i];
  return sum;
}

std::complex<double> inner_product(const DiskRule& rule, std::span<const std::complex<double>> f,
                                   std::span<const std::complex<double>> g) {
  if (f.size() != rule.size() || g.size() != rule.size()) {
    throw std::invalid_argument("sample count does not match disk rule");
  }
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += rule.weights[i] * std::conj(f[i]) * g[i];
  return sum;
}

void write_rule_csv(std::ostream& out, const HalfLineRule& rule) {
  const auto saved = out.precision();
  out << std::setprecision(17) << "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out << rule.nodes[i] << ',' << rule.weights[i] << '\n';
  }
  out.precision(saved);
}

}  // namespace hll
