#ifndef HLL_TESTS_ORACLES_HPP
#define HLL_TESTS_ORACLES_HPP

// Extended-precision finite sums used as independent references.

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using real = boost::multiprecision::cpp_bin_float_50;

// binom(x, n) = x (x-1) ... (x-n+1) / n!, any real x.
inline real binom(const real& x, int n) {
  real r = 1;
  for (int i = 1; i <= n; ++i) r *= (x - n + i) / i;
  return r;
}

// sum_j (-1)^j binom(k + a, k - j) x^j / j!
inline double laguerre(int k, double a, double x) {
  real s = 0, pw = 1, fact = 1;
  const real xr = x;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      pw *= xr;
      fact *= j;
    }
    const real term = binom(real(k) + a, k - j) * pw / fact;
    s += (j % 2) ? -term : term;
  }
  return static_cast<double>(s);
}

// sum_j binom(k + a, k - j) binom(k + b, j) ((t-1)/2)^j ((t+1)/2)^(k-j)
inline double jacobi(int k, double a, double b, double t) {
  const real lo = (real(t) - 1) / 2, hi = (real(t) + 1) / 2;
  real s = 0;
  for (int j = 0; j <= k; ++j) s += binom(real(k) + a, k - j) * binom(real(k) + b, j) * pow(lo, j) * pow(hi, k - j);
  return static_cast<double>(s);
}

// sum_j (-k)_j (b)_j / ((c)_j j!) y^j
inline double gauss2f1(int k, double b, double c, double y) {
  real s = 1, term = 1;
  for (int j = 0; j < k; ++j) {
    term *= real(-k + j) * (real(b) + j) / ((real(c) + j) * (j + 1)) * y;
    s += term;
  }
  return static_cast<double>(s);
}

// sum_j (-m)_j / ((c)_j j!) x^j
inline double kummer1f1(int m, double c, double x) {
  real s = 1, term = 1;
  for (int j = 0; j < m; ++j) {
    term *= real(-m + j) / ((real(c) + j) * (j + 1)) * x;
    s += term;
  }
  return static_cast<double>(s);
}

inline real lgamma(double x) { return boost::math::lgamma(real(x)); }

inline double log_gamma_ratio(double p, double q) { return static_cast<double>(lgamma(p) - lgamma(q)); }

inline double gamma(double x) { return static_cast<double>(boost::math::tgamma(real(x))); }

}  // namespace oracle

#endif  // HLL_TESTS_ORACLES_HPP
