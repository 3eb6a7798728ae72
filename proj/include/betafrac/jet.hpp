#pragma once

#include <string>
#include <vector>

namespace betafrac {

/// Largest supported truncation order.
inline constexpr int kMaxJetOrder = 12;

/// Truncated Taylor expansion of a scalar function at a point.
///
/// Coefficient j stores f^(j)(center)/j!, so coeffs() has order()+1 entries.
/// Jets are immutable values; all operations return fresh jets. Storing the
/// scaled coefficients keeps the power recurrence well conditioned and avoids
/// factorial overflow at high orders.
class Jet {
 public:
  Jet(double center, std::vector<double> coeffs);

  /// Jet of the identity map x -> x at `x`: [x, 1, 0, ...].
  static Jet variable(double x, int order);
  /// Jet of a constant function.
  static Jet constant(double value, double center, int order);

  double center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int j) const;
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Value of the underlying function at the center.
  double value() const { return coeffs_[0]; }

  /// j! * coeff(j) = f^(j)(center). Throws if j exceeds the order.
  double derivative(int j) const;

 private:
  double center_;
  std::vector<double> coeffs_;
};

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, double s);

/// a(x)^p for real p; requires a.coeff(0) > 0.
Jet jet_pow_real(const Jet& a, double p);

enum class Elementary { exp, log, sin, cos, negate, reciprocal };

Elementary elementary_from_name(const std::string& name);

/// Composition g(a(x)) for an elementary g. log needs coeff(0) > 0,
/// reciprocal needs coeff(0) != 0.
Jet jet_compose_elementary(Elementary kind, const Jet& a);

/// Jet of the derivative function; order drops by one. Requires order >= 1.
Jet jet_differentiate(const Jet& a);

}  // namespace betafrac
