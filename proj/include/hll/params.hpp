#ifndef HLL_PARAMS_HPP
#define HLL_PARAMS_HPP

namespace hll {

// Field strength nu and Landau level index m, validated once so that every
// downstream formula can assume nu > 1/2 and 0 <= m < nu - 1/2.
//
// Derived quantities:
//   beta    = 2 nu                     weight exponent of (1 - |z|^2)^(beta - 2)
//   alpha   = 2 (nu - m) - 1           Laguerre / Jacobi parameter, always > 0
//   epsilon = 4 m (2 nu - m - 1)       eigenvalue of the magnetic Laplacian
class ModelParams {
 public:
  double nu() const { return nu_; }
  int m() const { return m_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  double epsilon() const { return epsilon_; }

  friend ModelParams make_params(double nu, int m);

 private:
  ModelParams(double nu, int m);

  double nu_;
  int m_;
  double beta_;
  double alpha_;
  double epsilon_;
};

// Guard band on nu - 1/2 (and on alpha) below which a level is treated as
// non-existent.
inline constexpr double kLevelGuard = 1e-12;

// Throws std::invalid_argument when nu <= 1/2, m < 0 or m >= nu - 1/2.
ModelParams make_params(double nu, int m);

// Largest level index strictly below nu - 1/2.
int max_level(double nu);

}  // namespace hll

#endif  // HLL_PARAMS_HPP
