#pragma once

// I(n,p) = int_0^inf sin^(2n+1)(x)/x cos(2px) dx = int_0^inf sin^(2n+2)(x)/x^2 cos(2px) dx
// by closed form, Fourier (piecewise constant), forward differences and the
// triangular kernel, plus double-precision quadrature oracles.

#include <functional>
#include <vector>

#include "rsl/exact.hpp"
#include "rsl/numerics.hpp"

namespace rsl::integrals {

/// Piecewise constant or piecewise linear function of a real variable.
/// At a jump the value is the average of the one-sided limits.
class PiecewiseFunction {
 public:
  enum class Kind { constant, linear };

  /// constant: values.size() == breakpoints.size() + 1 (segment values, the
  ///           outer ones extending to +-inf).
  /// linear:   values.size() == breakpoints.size() (node values), constant
  ///           beyond the outer nodes.
  PiecewiseFunction(Kind kind, std::vector<Real> breakpoints, std::vector<Real> values,
                    bool even = false);

  /// 1 on (a, b), 1/2 at a and b, 0 elsewhere.
  static PiecewiseFunction indicator(const Real& a, const Real& b);
  /// Tent rising from 0 at a to 1 at the midpoint and back to 0 at b.
  static PiecewiseFunction triangle(const Real& a, const Real& b);

  Real operator()(const Real& x) const;
  Kind kind() const { return kind_; }
  bool is_even() const { return even_; }
  const std::vector<Real>& breakpoints() const { return breakpoints_; }

 private:
  Kind kind_;
  std::vector<Real> breakpoints_;
  std::vector<Real> values_;
  bool even_;
};

/// Weights C(m,j) (-1)^(m-j), j = 0..m, of the m-th forward difference.
struct DifferenceStencil {
  int order = 0;
  std::vector<BigInt> coefficients;

  explicit DifferenceStencil(int m);
  Real apply(const std::function<Real(const Real&)>& g, const Real& p) const;
};

/// sum_j C(m,j) (-1)^(m-j) g(p + j).
Real forward_difference(const std::function<Real(const Real&)>& g, int m, const Real& p);

struct CauchyResidual {
  Real odd;   // D^(2n+1) sin((2p-2n-1)x) vs (-1)^n 2^(2n+1) cos(2px) sin^(2n+1) x
  Real even;  // D^(2n) cos((2p-2n)x) vs (-1)^n 2^(2n) cos(2px) sin^(2n) x
  Real max() const { return odd > even ? odd : even; }
};

/// Forward differences in p of the Fourier kernels against their product forms.
CauchyResidual cauchy_identity_check(int n, const Real& p, const Real& x);

/// Gamma(k/2) for integer k >= 1 via Gamma(1/2) = sqrt(pi), Gamma(x+1) = x Gamma(x).
Real gamma_half_integer(int twice_x);

/// (-1)^p (sqrt(pi)/2) Gamma(n+1) Gamma(n+1/2) / (Gamma(n-p+1) Gamma(n+p+1)); exact 0 for |p| > n.
Real inp_gamma(int n, long p);
/// pi (-1)^n / 2^(2n+1) sum_k C(2n,k) (-1)^k 1_[-1/2,1/2](p + k - n).
Real inp_fourier(int n, const Real& p);
/// pi (-1)^n / 2^(2n+1) D_p^(2n) 1_[n-1/2,n+1/2](p).
Real inp_cauchy(int n, const Real& p);
/// pi (-1)^n / 2^(2n+1) sum_k C(2n,k) (-1)^k T(p + k - n), T(t) = max(0, 1 - |t|).
Real inp_triangle(int n, const Real& p);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  // quadrature error on [0, X]
  double tail_bound = 0.0;      // |integral over [X, inf)|
  double cutoff = 0.0;          // X
  long panels = 0;
};

/// Adaptive Gauss-Kronrod (10/21) on [a, b] to absolute tolerance tol.
QuadResult integrate_gk21(const std::function<double(double)>& f, double a, double b, double tol);

/// int_0^inf sin^(2n+2)(x)/x^2 cos(2px) dx: panels of length pi/4 on [0, X],
/// X = max(50, 4/tol), tail bound 1/X. tol < 1e-8 is an AccuracyError, as is
/// a total error estimate above tol.
QuadResult quad_oracle_inp2(int n, double p, double tol);

struct Q295Result {
  double alpha = 0.0;
  double beta = 0.0;
  double lhs = 0.0;  // sqrt(alpha) int_0^inf e^(-x^2)/cosh(alpha x) dx
  double rhs = 0.0;  // same with beta = pi/alpha
  double diff = 0.0;
};

/// Both sides by quadrature on [0, 8]; the neglected tail is below e^-64.
Q295Result verify_q295(double alpha, double tol);

}  // namespace rsl::integrals
