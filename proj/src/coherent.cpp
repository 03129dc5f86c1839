#include "hll/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hll/quadrature.hpp"
#include "hll/specfun.hpp"

namespace hll {
namespace {

void check_xi(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("xi must be a finite positive number");
}

}  // namespace

double psi_basis(const ModelParams& params, int k, double xi) {
  check_xi(xi);
  if (k < 0) throw std::invalid_argument("basis index must be non-negative");
  return laguerre_functions(params.alpha(), xi, k + 1).back();
}

SeriesValue coherent_series(const ModelParams& params, const DiskPoint& z, double xi,
                            const TruncationSpec& trunc) {
  check_xi(xi);
  if (trunc.max_terms < 1 || !(trunc.target_tol > 0.0)) {
    throw std::invalid_argument("truncation needs max_terms >= 1 and target_tol > 0");
  }
  const int m = params.m();
  const double a = params.alpha();
  const double t = 1.0 - 2.0 * z.abs2();
  const double r = z.abs();
  const std::complex<double> unit = r > 0.0 ? z.z() / r : std::complex<double>(1.0, 0.0);
  const double log_r = r > 0.0 ? std::log(r) : 0.0;

  std::vector<std::complex<double>> terms;
  std::complex<double> sum(0.0, 0.0);
  std::complex<double> phase(1.0, 0.0);  // unit^(k-m) for k >= m
  SeriesValue out;
  int limit = std::min(64, trunc.max_terms);
  int k = 0;
  for (;;) {
    const std::vector<double> psi = laguerre_functions(a, xi, limit);
    for (; k < limit; ++k) {
      std::complex<double> c;
      if (k < m) {
        const double log_norm = 0.5 * (log_gamma_ratio(k + 1.0, m + 1.0) + log_gamma_ratio(a + 1.0 + m, a + 1.0 + k));
        std::complex<double> w(1.0, 0.0);
        for (int j = 0; j < m - k; ++j) w *= std::conj(z.z());
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c = sign * std::exp(log_norm) * jacobi(k, static_cast<double>(m - k), a, t) * w;
      } else if (k == m || r > 0.0) {
        const double log_norm =
            0.5 * (log_gamma_ratio(a + 1.0 + k, a + 1.0 + m) + log_gamma_ratio(m + 1.0, k + 1.0)) +
            (k - m) * log_r;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        c = sign * std::exp(log_norm) * jacobi(m, static_cast<double>(k - m), a, t) * phase;
        phase *= unit;
      } else {
        c = 0.0;
      }
      const std::complex<double> term = c * psi[k];
      terms.push_back(term);
      sum += term;
    }
    double last = 0.0;
    for (int j = std::max(0, k - 8); j < k; ++j) last = std::max(last, std::abs(terms[j]));
    const double tail = r < 1.0 ? last / (1.0 - r) : last;
    out.terms_used = k;
    out.tail_bound = tail * std::pow(z.one_minus_abs2(), params.nu() - m);
    if (last <= trunc.target_tol * std::abs(sum)) {
      out.converged = true;
      break;
    }
    if (limit >= trunc.max_terms) break;
    limit = std::min(2 * limit, trunc.max_terms);
  }
  if (!out.converged) {
    throw std::runtime_error("coherent series not converged after " + std::to_string(out.terms_used) +
                             " terms (|z| = " + std::to_string(r) + ")");
  }
  out.value = sum * std::pow(z.one_minus_abs2(), params.nu() - m);
  return out;
}

double coherent_decay_rate(const DiskPoint& z) {
  const double rate = z.one_minus_abs2() / std::norm(1.0 - z.z());
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::domain_error("Re((1+z)/(1-z)) must be positive");
  }
  return rate;
}

std::complex<double> coherent_closed(const ModelParams& params, const DiskPoint& z, double xi) {
  check_xi(xi);
  const int m = params.m();
  const double nu = params.nu();
  const std::complex<double> one_minus = 1.0 - z.z();
  const double kappa = coherent_decay_rate(z);
  const std::complex<double> q = 0.5 * (1.0 + z.z()) / one_minus;
  const std::complex<double> log_value = 0.5 * log_gamma_ratio(m + 1.0, 2.0 * nu - m) +
                                         m * std::log(std::norm(one_minus)) - 2.0 * nu * std::log(one_minus) +
                                         (nu - m) * std::log(z.one_minus_abs2()) + (nu - m) * std::log(xi) -
                                         q * xi;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_value) * laguerre(m, params.alpha(), kappa * xi);
}

double coherent_norm2(const ModelParams& params, const DiskPoint& z, int order) {
  const double kappa = coherent_decay_rate(z);
  const double a = params.alpha();
  const HalfLineRule& rule = cached_gauss_laguerre(a, order);
  const auto sum = integrate_halfline(rule, [&](double u) {
    const double value = std::norm(coherent_closed(params, z, u / kappa));
    return std::complex<double>(value * std::exp(u - (a + 1.0) * std::log(u)), 0.0);
  });
  return sum.real();
}

}  // namespace hll
