#ifndef HLL_SPECFUN_HPP
#define HLL_SPECFUN_HPP

#include <complex>
#include <vector>

namespace hll {

// Generalized Laguerre polynomial L_k^(alpha)(x) by the three-term recurrence
// in the degree. Requires k >= 0, alpha > -1 and finite x.
double laguerre(int k, double alpha, double x);

// Same polynomial at a complex argument; used on rotated integration
// contours where x = t / P with Re P > 0.
std::complex<double> laguerre(int k, double alpha, std::complex<double> x);

// Jacobi polynomial P_k^(a,b)(t) on [-1, 1].
//
// Generic parameters go through the degree recurrence. When a (or b) is a
// negative integer the recurrence coefficients degenerate, and the value is
// taken from the terminating 2F1 representation
//
//   P_k^(p,q)(x) = (1+p)_k / k! ((1+x)/2)^k 2F1(-k, -(q+k); 1+p; (x-1)/(x+1))
//
// multiplied out so that no division by (1+x) occurs. With a = -s every
// surviving term carries at least ((1-t)/2)^s, so P_k^(m-k, alpha)(t) keeps
// its relative accuracy near t = 1 where it vanishes like (1-t)^(k-m).
double jacobi(int k, double a, double b, double t);

// Terminating Gauss sum  sum_{j=0}^{k} (-k)_j (b)_j / ((c)_j j!) y^j.
// Throws if (c)_j vanishes before the numerator terminates.
double gauss2f1_terminating(int k, double b, double c, double y);

// Terminating confluent sum  sum_{j=0}^{m} (-m)_j / ((c)_j j!) x^j, c > 0.
// Equals m! Gamma(c) / Gamma(c + m) L_m^(c-1)(x).
double kummer1f1_terminating(int m, double c, double x);

// ln Gamma(p) - ln Gamma(q) for p, q > 0 without forming either log-gamma
// separately when the arguments are large or close together.
double log_gamma_ratio(double p, double q);

// Normalized Laguerre functions
//
//   sqrt(k! / Gamma(k + alpha + 1)) x^((alpha+1)/2) e^(-x/2) L_k^(alpha)(x)
//
// for k = 0 .. count-1 at a single x > 0. These are orthonormal in
// L^2((0, inf), dx/x). The recurrence runs on a rescaled mantissa so that
// neither e^(-x/2) nor L_k(x) over/underflows on its own.
std::vector<double> laguerre_functions(double alpha, double x, int count);

}  // namespace hll

#endif  // HLL_SPECFUN_HPP
