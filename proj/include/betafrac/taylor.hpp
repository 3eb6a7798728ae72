#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "betafrac/beta_calculus.hpp"

namespace betafrac {

/// Truncated expansion of f around s: coefficient k stores
/// beta^(-k)/k! * D^(k*beta) f(s), so the polynomial in u(t) - u(s) is a
/// plain inner product.
class TaylorExpansion {
 public:
  TaylorExpansion(const BetaParam& p, const FunctionModel& f, double s, int n);

  double expansion_point() const { return s_; }
  int degree() const { return n_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  /// Value of the degree-n polynomial at t.
  double operator()(double t) const;

 private:
  BetaParam p_;
  double s_;
  int n_;
  std::vector<double> coeffs_;
};

/// Both remainder representations at a point.
struct RemainderValue {
  double integral_form = 0.0;
  std::optional<double> lagrange_point;
  std::optional<double> lagrange_form;
};

/// sum_{k=0..n} beta^(-k)/k! [u(t) - u(s)]^k D^(k*beta) f(s).
double taylor_polynomial(const BetaParam& p, const FunctionModel& f, double s,
                         int n, double t);

/// Integral remainder: beta^(-n)/n! int_s^t [u(t) - u(tau)]^n
/// D^((n+1)beta) f(tau) d_beta tau. Oriented, so it changes sign with the
/// direction of integration and vanishes at s == t.
double integral_remainder(const BetaParam& p, const FunctionModel& f, double s,
                          int n, double t, double tol = 1e-10);

/// Mean-value form of the remainder. The point c is located by a 64-point
/// scan of D^((n+1)beta) f followed by bisection; when that derivative is
/// constant over the scan the midpoint is returned. Throws std::runtime_error
/// when no bracket exists.
RemainderValue lagrange_remainder(const BetaParam& p, const FunctionModel& f,
                                  double s, int n, double t,
                                  double tol = 1e-10);

/// Point c in [a, b] with int f g d_beta = f(c) int g d_beta, for f
/// continuous and g >= 0. Returns a when int g d_beta vanishes.
double mean_value_point(const BetaParam& p, const FunctionModel& f,
                        const FunctionModel& g, const Interval& iv,
                        double tol = 1e-10);

/// Both sides of the remainder-integral identity
///   int_a^b beta^(-n-1)/(n+1)! [u(t) - u(tau)]^(n+1) D^((n+1)beta) f d_beta
///   = int_a^t R_{n,f}(a, tau) d_beta + int_t^b R_{n,f}(b, tau) d_beta.
/// The inner remainder quadratures run at a tenth of the outer tolerance.
std::pair<double, double> remainder_integral_identity(
    const BetaParam& p, const FunctionModel& f, const Interval& iv, double t,
    int n, double tol = 1e-9);

/// The two endpoint specializations (t = a and t = b) of the identity above.
/// first: t = a side paired with int_a^b R_{n,f}(b, tau) d_beta;
/// second: t = b side paired with int_a^b R_{n,f}(a, tau) d_beta.
std::pair<std::pair<double, double>, std::pair<double, double>>
corollary_identities(const BetaParam& p, const FunctionModel& f,
                     const Interval& iv, int n, double tol = 1e-9);

}  // namespace betafrac
