#pragma once

#include <functional>
#include <stdexcept>

namespace betafrac {

/// Outcome of an adaptive quadrature.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // internal estimate, >= 0
  long evaluations = 0;
  bool converged = true;
};

/// Raised when a caller requires convergence the subdivision budget could
/// not deliver. Carries the partial result.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

/// Adaptive quadrature on [a, b], a <= b.
///
/// Each panel is evaluated with 15-point and 7-point Gauss-Legendre rules;
/// their difference is the panel error estimate. The panel with the largest
/// estimate is split in half, ties broken toward the leftmost panel, until
/// the summed estimate drops under max(tol, tol*|value|) or the panel budget
/// is exhausted (converged = false in that case).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol, int max_panels = 10000);

/// Orientation-aware variant: integrates from a to b with sign flip when
/// b < a.
QuadratureResult integrate_oriented(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    int max_panels = 10000);

}  // namespace betafrac
