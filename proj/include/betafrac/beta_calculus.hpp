#pragma once

#include <functional>

#include "betafrac/function_model.hpp"
#include "betafrac/quadrature.hpp"

namespace betafrac {

/// The order beta in (0, 1] together with the cached shift 1/Gamma(beta).
class BetaParam {
 public:
  explicit BetaParam(double beta);

  double beta() const { return beta_; }
  double shift() const { return shift_; }

  /// u(t) = (t + shift)^beta, the substitution underlying every formula.
  double u(double t) const;

 private:
  double beta_;
  double shift_;
};

/// A sub-interval [a, b] of [0, inf) with a <= b. a == b is allowed as the
/// degenerate case (integrals over it are exactly zero).
class Interval {
 public:
  Interval(double a, double b);
  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double midpoint() const { return 0.5 * (a_ + b_); }

 private:
  double a_, b_;
};

/// The integral weight (t + shift)^(beta - 1). Strictly positive and finite
/// on t >= 0; decreasing for beta < 1, identically 1 for beta = 1.
double weight(const BetaParam& p, double t);

/// k-fold beta-derivative at x, evaluated through jet arithmetic:
/// each application multiplies the derivative jet by the jet of
/// (x + shift)^(1 - beta). Requires k >= 1 and k <= kMaxJetOrder.
double beta_derivative(const BetaParam& p, const FunctionModel& f, int k,
                       double x);

/// Iterated beta-derivative applied to a jet of f (order >= k). Returns the
/// jet of D^(k*beta) f truncated at order jet.order() - k.
Jet beta_derivative_jet(const BetaParam& p, const Jet& f_jet, int k);

/// Weighted integral of f over [a, b]: int_a^b (t+shift)^(beta-1) f(t) dt.
QuadratureResult beta_integral(const BetaParam& p, const FunctionModel& f,
                               const Interval& iv, double tol = 1e-10);

/// Same, for an arbitrary integrand given by values only.
QuadratureResult beta_integral(const BetaParam& p,
                               const std::function<double(double)>& f,
                               const Interval& iv, double tol = 1e-10);

/// Orientation-aware weighted integral from s to t (sign flips when t < s).
QuadratureResult beta_integral_oriented(const BetaParam& p,
                                        const std::function<double(double)>& f,
                                        double s, double t, double tol = 1e-10);

/// Exact value of int_a^b [u(t_ref) - u(tau)]^n d_beta tau via the
/// antiderivative -[u(t_ref) - u(tau)]^(n+1) / ((n+1) beta).
double weighted_integral_of_power(const BetaParam& p, double t_ref,
                                  const Interval& iv, int n);

}  // namespace betafrac
