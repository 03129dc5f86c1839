#include "hll/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hll {

namespace {

void check_degree(int k) {
  if (k < 0) throw std::invalid_argument("polynomial degree must be non-negative");
}

bool is_negative_integer(double x) { return x < 0.0 && x == std::floor(x); }

template <typename T>
T laguerre_recurrence(int k, double alpha, T x) {
  if (k == 0) return T(1.0);
  T prev(1.0);
  T cur = T(1.0 + alpha) - x;
  for (int n = 1; n < k; ++n) {
    T next = ((T(2.0 * n + 1.0 + alpha) - x) * cur - (n + alpha) * prev) / double(n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

void check_laguerre_args(int k, double alpha) {
  check_degree(k);
  if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre parameter must exceed -1");
}

// Generalized binomial coefficient C(x, n) for integer n >= 0.
double binomial(double x, int n) {
  if (n < 0) return 0.0;
  double c = 1.0;
  for (int i = 0; i < n; ++i) c *= (x - i) / (i + 1);
  return c;
}

// (1+p)_k / k! ((1+x)/2)^k 2F1(-k, -(q+k); 1+p; (x-1)/(x+1)), expanded as
// sum_j coeff_j ((x-1)/2)^j ((x+1)/2)^(k-j). Both half-differences are
// passed in so callers can form them without cancellation.
double jacobi_terminating(int k, double p, double q, double xm, double xp) {
  for (int i = 0; i < k; ++i) {
    if (1.0 + p + i == 0.0) {
      throw std::domain_error("Jacobi representation has a pole in (1+p)_j");
    }
  }
  double prefactor = 1.0;
  for (int i = 0; i < k; ++i) prefactor *= (1.0 + p + i) / (i + 1);

  double coeff = 1.0;  // (-k)_j (-(q+k))_j / ((1+p)_j j!)
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    if (coeff == 0.0) break;
    sum += coeff * std::pow(xm, j) * std::pow(xp, k - j);
    coeff *= (j - k) * (-(q + k) + j) / ((1.0 + p + j) * (j + 1.0));
  }
  return prefactor * sum;
}

// Explicit finite sum, used only when the recurrence degenerates for
// non-integer parameters (n + a + b = 0 or 2n + a + b - 2 = 0).
double jacobi_binomial_sum(int k, double a, double b, double xm, double xp) {
  double sum = 0.0;
  for (int s = 0; s <= k; ++s) {
    sum += binomial(k + a, k - s) * binomial(k + b, s) * std::pow(xm, s) * std::pow(xp, k - s);
  }
  return sum;
}

}  // namespace

double laguerre(int k, double alpha, double x) {
  check_laguerre_args(k, alpha);
  if (!std::isfinite(x)) throw std::invalid_argument("Laguerre argument must be finite");
  return laguerre_recurrence(k, alpha, x);
}

std::complex<double> laguerre(int k, double alpha, std::complex<double> x) {
  check_laguerre_args(k, alpha);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    throw std::invalid_argument("Laguerre argument must be finite");
  }
  return laguerre_recurrence(k, alpha, x);
}

double jacobi(int k, double a, double b, double t) {
  check_degree(k);
  if (!std::isfinite(t) || std::abs(t) > 1.0 + 1e-12) {
    throw std::invalid_argument("Jacobi argument must lie in [-1, 1]");
  }
  if (k == 0) return 1.0;

  const double xm = (t - 1.0) / 2.0;  // (t-1)/2, exact for t near 1
  const double xp = (t + 1.0) / 2.0;

  if (is_negative_integer(a)) {
    // P_k^(a,b)(t) = (-1)^k P_k^(b,a)(-t); at -t the half-differences swap
    // to -(1+t)/2 and (1-t)/2 = -xm.
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * jacobi_terminating(k, b, a, -xp, -xm);
  }
  if (is_negative_integer(b)) {
    return jacobi_terminating(k, a, b, xm, xp);
  }

  for (int n = 2; n <= k; ++n) {
    if (n + a + b == 0.0 || 2.0 * n + a + b - 2.0 == 0.0) {
      return jacobi_binomial_sum(k, a, b, xm, xp);
    }
  }

  double prev = 1.0;
  double cur = (a + 1.0) + (a + b + 2.0) * xm;
  for (int n = 2; n <= k; ++n) {
    const double s = 2.0 * n + a + b;
    const double lhs = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / lhs;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gauss2f1_terminating(int k, double b, double c, double y) {
  check_degree(k);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < k; ++j) {
    const double num = (j - k) * (b + j);
    if (num == 0.0) break;
    if (c + j == 0.0) {
      throw std::domain_error("2F1 denominator (c)_j vanishes at j = " + std::to_string(j + 1));
    }
    term *= num / ((c + j) * (j + 1.0)) * y;
    sum += term;
  }
  return sum;
}

double kummer1f1_terminating(int m, double c, double x) {
  if (m < 0) throw std::invalid_argument("1F1 degree must be non-negative");
  if (!(c > 0.0)) throw std::invalid_argument("1F1 lower parameter must be positive");
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < m; ++j) {
    term *= (j - m) / ((c + j) * (j + 1.0)) * x;
    sum += term;
  }
  return sum;
}

namespace {

// Stirling correction coefficients B_2k / (2k (2k-1)).
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,     -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0,  1.0 / 156.0,  -3617.0 / 122400.0,
};

// ln Gamma(q + d) - ln Gamma(q) for q >= 12, written so that nothing of
// size ln Gamma(q) is ever formed.
double log_gamma_ratio_large(double q, double d) {
  const double lp = std::log1p(d / q);  // ln(p/q)
  const double p = q + d;
  double result = d * (std::log(q) - 1.0) + (p - 0.5) * lp;
  // sum_k c_k (p^(1-2k) - q^(1-2k))
  for (std::size_t i = 0; i < kStirling.size(); ++i) {
    const double e = 1.0 - 2.0 * (i + 1.0);
    result += kStirling[i] * std::pow(q, e) * std::expm1(e * lp);
  }
  return result;
}

}  // namespace

double log_gamma_ratio(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw std::invalid_argument("log_gamma_ratio needs positive finite arguments");
  }
  if (p == q) return 0.0;

  constexpr double kShiftTo = 12.0;
  const double d = p - q;
  const double lo = std::min(p, q);
  const int shift = lo < kShiftTo ? static_cast<int>(std::ceil(kShiftTo - lo)) : 0;

  // ln Gamma(x) = ln Gamma(x + n) - sum_{j<n} ln(x + j)
  double correction = 0.0;
  for (int j = 0; j < shift; ++j) correction += std::log1p(d / (q + j));
  return log_gamma_ratio_large(q + shift, d) - correction;
}

std::vector<double> laguerre_functions(double alpha, double x, int count) {
  if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre parameter must exceed -1");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("Laguerre function argument must be positive");
  }
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 0) return out;

  // value_k = mantissa_k * exp(log_scale)
  double log_scale = 0.5 * (alpha + 1.0) * std::log(x) - 0.5 * x - 0.5 * std::lgamma(alpha + 1.0);
  double prev = 0.0;
  double cur = 1.0;
  constexpr double kBig = 1e100;
  constexpr double kLogBig = 230.25850929940458;  // ln(1e100)
  out[0] = std::exp(log_scale);
  for (int k = 0; k + 1 < count; ++k) {
    const double next = ((2.0 * k + alpha + 1.0 - x) * cur - std::sqrt(k * (k + alpha)) * prev) /
                        std::sqrt((k + 1.0) * (k + alpha + 1.0));
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      prev /= kBig;
      cur /= kBig;
      log_scale += kLogBig;
    }
    out[static_cast<std::size_t>(k + 1)] =
        cur == 0.0 ? 0.0 : std::copysign(std::exp(log_scale + std::log(std::abs(cur))), cur);
  }
  return out;
}

}  // namespace hll
