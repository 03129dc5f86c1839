#include <catch_amalgamated.hpp>

#include <cmath>

#include "hll/specfun.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("laguerre examples", "[specfun]") {
  CHECK(hll::laguerre(0, 2.3, 7.7) == 1.0);
  CHECK(hll::laguerre(1, 0.0, 2.0) == -1.0);
  CHECK_THAT(hll::laguerre(4, 6.0, 3.0), WithinRel(oracle::laguerre(4, 6.0, 3.0), 1e-12));
  CHECK_THROWS_AS(hll::laguerre(-1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS(hll::laguerre(2, 0.5, std::nan("")));
}

TEST_CASE("laguerre against extended-precision series", "[specfun]") {
  for (double a : {0.0, 0.4, 2.0, 5.0, 11.5}) {
    for (int k = 0; k <= 12; ++k) {
      for (double x : {0.05, 0.7, 2.5, 9.0, 20.0}) {
        const double ref = oracle::laguerre(k, a, x);
        CHECK_THAT(hll::laguerre(k, a, x), WithinAbs(ref, 1e-11 * std::max(1.0, std::abs(ref))));
      }
    }
  }
  // degree up to 200 at moderate arguments
  for (int k : {50, 120, 200}) {
    const double ref = oracle::laguerre(k, 2.0, 3.0);
    CHECK_THAT(hll::laguerre(k, 2.0, 3.0), WithinAbs(ref, 1e-8 * std::max(1.0, std::abs(ref))));
  }
}

TEST_CASE("complex laguerre matches real on the axis", "[specfun]") {
  for (int k = 0; k <= 10; ++k) {
    const auto z = hll::laguerre(k, 1.3, std::complex<double>(2.2, 0.0));
    CHECK_THAT(z.real(), WithinAbs(hll::laguerre(k, 1.3, 2.2), 1e-13));
    CHECK(z.imag() == 0.0);
  }
}

TEST_CASE("jacobi examples", "[specfun]") {
  CHECK(hll::jacobi(0, 1.2, 4.0, 0.3) == 1.0);
  CHECK_THAT(hll::jacobi(2, 1, 3, -0.3), WithinRel(hll::jacobi(2, 3, 1, 0.3), 1e-14));
  CHECK_THAT(hll::jacobi(3, 0, 4.2, 0.5), WithinRel(oracle::jacobi(3, 0, 4.2, 0.5), 1e-12));
  CHECK_THROWS_AS(hll::jacobi(-1, 0, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hll::jacobi(2, 0, 1, 1.1), std::invalid_argument);
  CHECK_NOTHROW(hll::jacobi(2, 0, 1, 1.0 + 1e-13));
}

TEST_CASE("jacobi against extended-precision series", "[specfun]") {
  for (int k = 0; k <= 12; ++k) {
    for (double a : {0.0, 0.5, 1.0, 3.0}) {
      for (double b : {0.4, 1.0, 6.0}) {
        for (double t : {-0.95, -0.4, 0.0, 0.3, 0.8, 1.0}) {
          const double ref = oracle::jacobi(k, a, b, t);
          CHECK_THAT(hll::jacobi(k, a, b, t), WithinAbs(ref, 1e-11 * std::max(1.0, std::abs(ref))));
        }
      }
    }
  }
}

TEST_CASE("jacobi with a negative integer first parameter", "[specfun]") {
  for (int k = 1; k <= 12; ++k) {
    for (int s = 1; s <= k; ++s) {
      for (double b : {0.4, 2.0, 5.0}) {
        for (double t : {-0.9, 0.0, 0.6, 0.999, 1.0 - 1e-8}) {
          const double ref = oracle::jacobi(k, -s, b, t);
          CHECK_THAT(hll::jacobi(k, -s, b, t), WithinAbs(ref, 1e-11 * std::abs(ref) + 1e-14));
        }
      }
    }
  }
}

TEST_CASE("jacobi symmetry", "[specfun]") {
  for (int k = 0; k <= 8; ++k) {
    for (double a : {0.5, 1.0, 2.4, 6.0}) {
      for (double b : {0.5, 1.0, 2.4}) {
        for (double t = -0.9; t <= 0.9001; t += 0.3) {
          const double lhs = hll::jacobi(k, a, b, t);
          const double rhs = ((k % 2) ? -1.0 : 1.0) * hll::jacobi(k, b, a, -t);
          CHECK_THAT(lhs, WithinAbs(rhs, 1e-12 * std::max(1.0, std::abs(lhs))));
        }
      }
    }
  }
}

TEST_CASE("negative-parameter identity", "[specfun]") {
  // Gamma(m+1)/Gamma(m-s+1) P_m^(-s,a)(t) = Gamma(m+a+1)/Gamma(m-s+a+1) ((t-1)/2)^s P_{m-s}^(s,a)(t)
  for (int m = 1; m <= 6; ++m) {
    for (int s = 1; s <= m; ++s) {
      for (double a : {0.4, 2.0, 4.0, 9.5}) {
        for (double t : {-0.7, 0.1, 0.5, 0.99}) {
          const double lhs = std::exp(oracle::log_gamma_ratio(m + 1, m - s + 1)) * hll::jacobi(m, -s, a, t);
          const double rhs = std::exp(oracle::log_gamma_ratio(m + a + 1, m - s + a + 1)) * std::pow((t - 1) / 2, s) *
                             hll::jacobi(m - s, s, a, t);
          CHECK_THAT(lhs, WithinRel(rhs, 1e-10));
        }
      }
    }
  }
}

TEST_CASE("terminating 2F1", "[specfun]") {
  CHECK(hll::gauss2f1_terminating(0, 3.3, 1.7, 9.0) == 1.0);
  CHECK_THAT(hll::gauss2f1_terminating(1, 2, 4, 0.5), WithinRel(0.75, 1e-15));
  CHECK_THAT(hll::gauss2f1_terminating(3, -2, 5.4, -1.1), WithinRel(oracle::gauss2f1(3, -2, 5.4, -1.1), 1e-13));
  for (int k = 0; k <= 12; ++k) {
    for (double b : {-3.0, 0.5, 2.5}) {
      const double ref = oracle::gauss2f1(k, b, 2.2, 0.8);
      CHECK_THAT(hll::gauss2f1_terminating(k, b, 2.2, 0.8), WithinAbs(ref, 1e-13 * std::max(1.0, std::abs(ref))));
    }
  }
  CHECK_THROWS(hll::gauss2f1_terminating(3, 1.0, -1.0, 0.5));
  // pole beyond the terminating index is harmless
  CHECK_NOTHROW(hll::gauss2f1_terminating(1, 1.0, -1.0, 0.5));
}

TEST_CASE("terminating 1F1 and its Laguerre reduction", "[specfun]") {
  CHECK(hll::kummer1f1_terminating(0, 3.0, 9.9) == 1.0);
  CHECK(hll::kummer1f1_terminating(1, 2.0, 2.0) == 0.0);
  const double a = 4.0;
  CHECK_THAT(hll::kummer1f1_terminating(2, 1 + a, 1.5),
             WithinRel(2.0 * oracle::gamma(5) / oracle::gamma(7) * hll::laguerre(2, 4, 1.5), 1e-13));
  for (int m = 0; m <= 8; ++m) {
    for (double alpha : {0.3, 2.0, 7.5}) {
      for (double x : {0.1, 2.0, 8.0}) {
        const double ref = oracle::kummer1f1(m, 1 + alpha, x);
        const double via_laguerre =
            std::exp(oracle::log_gamma_ratio(m + 1, 1) + oracle::log_gamma_ratio(1 + alpha, 1 + alpha + m)) *
            hll::laguerre(m, alpha, x);
        CHECK_THAT(hll::kummer1f1_terminating(m, 1 + alpha, x), WithinAbs(ref, 1e-12 * std::max(1.0, std::abs(ref))));
        CHECK_THAT(via_laguerre, WithinAbs(ref, 1e-12 * std::max(1.0, std::abs(ref))));
      }
    }
  }
  CHECK_THROWS(hll::kummer1f1_terminating(-1, 2.0, 1.0));
}

TEST_CASE("bilateral generating function", "[specfun]") {
  // sum_k lambda^k 2F1(-k, b; 1+a; y) L_k^(a)(xi)
  //   = (1-l)^(b-1-a) (1-l+y l)^(-b) exp(-xi l/(1-l)) 1F1(b; 1+a; xi y l / ((1-l)(1-l+y l)))
  for (int m : {0, 1, 2, 4}) {
    for (double a : {0.4, 2.0, 5.0}) {
      for (double lambda : {-0.7, -0.2, 0.5, 0.7}) {
        for (double y : {-2.0, 0.3, 1.5}) {
          for (double xi : {0.3, 2.0, 6.0}) {
            double lhs = 0.0, lp = 1.0;
            for (int k = 0; k < 200; ++k) {
              lhs += lp * hll::gauss2f1_terminating(k, -m, 1 + a, y) * hll::laguerre(k, a, xi);
              lp *= lambda;
            }
            const double d = 1 - lambda + y * lambda;
            const double rhs = std::pow(1 - lambda, -m - 1 - a) * std::pow(d, m) *
                               std::exp(-xi * lambda / (1 - lambda)) *
                               oracle::kummer1f1(m, 1 + a, xi * y * lambda / ((1 - lambda) * d));
            CHECK_THAT(lhs, WithinAbs(rhs, 1e-8 * std::max(1.0, std::abs(rhs))));
          }
        }
      }
    }
  }
}

TEST_CASE("log gamma ratio", "[specfun]") {
  CHECK(hll::log_gamma_ratio(5, 5) == 0.0);
  CHECK_THAT(hll::log_gamma_ratio(6, 5), WithinRel(std::log(5.0), 1e-14));
  CHECK_THAT(hll::log_gamma_ratio(7.5, 2.5), WithinRel(std::log(6.5 * 5.5 * 4.5 * 3.5 * 2.5), 1e-14));
  for (double p : {0.01, 0.5, 3.3, 17.0, 250.0, 9.9e3, 5e5, 9.9e5}) {
    for (double q : {0.02, 1.0, 3.30001, 40.0, 1e4, 5e5 + 0.5}) {
      const double ref = oracle::log_gamma_ratio(p, q);
      CHECK_THAT(hll::log_gamma_ratio(p, q), WithinAbs(ref, 1e-13 * std::max(std::abs(ref), 1e-3)));
    }
  }
  CHECK_THROWS_AS(hll::log_gamma_ratio(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hll::log_gamma_ratio(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("normalized laguerre functions", "[specfun]") {
  for (double a : {0.5, 3.0, 12.0}) {
    for (double x : {0.01, 1.0, 30.0, 400.0}) {
      const auto v = hll::laguerre_functions(a, x, 13);
      for (int k = 0; k <= 12; ++k) {
        const double ref = std::exp(0.5 * oracle::log_gamma_ratio(k + 1, k + a + 1) + 0.5 * (a + 1) * std::log(x) - x / 2) *
                           oracle::laguerre(k, a, x);
        CHECK_THAT(v[k], WithinAbs(ref, 1e-11 * std::max(std::abs(ref), 1e-250)));
      }
    }
  }
}
