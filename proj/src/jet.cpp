#include "betafrac/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace betafrac {

namespace {

void require_compatible(const Jet& a, const Jet& b) {
  if (a.center() != b.center())
    throw std::invalid_argument("jet: mismatched centers");
  if (a.order() != b.order())
    throw std::invalid_argument("jet: mismatched orders");
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Jet::Jet(double center, std::vector<double> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("jet: empty coefficients");
  if (static_cast<int>(coeffs_.size()) - 1 > kMaxJetOrder)
    throw std::invalid_argument("jet: order exceeds kMaxJetOrder");
  if (!std::isfinite(center_))
    throw std::invalid_argument("jet: non-finite center");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("jet: non-finite coefficient");
}

Jet Jet::variable(double x, int order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = x;
  if (order >= 1) c[1] = 1.0;
  return Jet(x, std::move(c));
}

Jet Jet::constant(double value, double center, int order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = value;
  return Jet(center, std::move(c));
}

double Jet::coeff(int j) const {
  if (j < 0 || j > order()) throw std::out_of_range("jet: coefficient index");
  return coeffs_[j];
}

double Jet::derivative(int j) const { return factorial(j) * coeff(j); }

Jet jet_add(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  std::vector<double> c(a.coeffs());
  for (int j = 0; j <= a.order(); ++j) c[j] += b.coeff(j);
  return Jet(a.center(), std::move(c));
}

Jet jet_sub(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  std::vector<double> c(a.coeffs());
  for (int j = 0; j <= a.order(); ++j) c[j] -= b.coeff(j);
  return Jet(a.center(), std::move(c));
}

Jet jet_mul(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  const int m = a.order();
  std::vector<double> c(m + 1, 0.0);
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= k; ++j) c[k] += a.coeff(j) * b.coeff(k - j);
  return Jet(a.center(), std::move(c));
}

Jet jet_scale(const Jet& a, double s) {
  std::vector<double> c(a.coeffs());
  for (double& v : c) v *= s;
  return Jet(a.center(), std::move(c));
}

Jet jet_pow_real(const Jet& a, double p) {
  const double a0 = a.coeff(0);
  if (!(a0 > 0.0))
    throw std::domain_error("jet_pow_real: base must be positive at the center");
  const int m = a.order();
  std::vector<double> b(m + 1, 0.0);
  b[0] = std::pow(a0, p);
  // From a b' = p a' b: b_k = (1/(k a0)) sum_{j=1..k} (p j - (k - j)) a_j b_{k-j}.
  for (int k = 1; k <= m; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j)
      s += (p * j - (k - j)) * a.coeff(j) * b[k - j];
    b[k] = s / (k * a0);
  }
  return Jet(a.center(), std::move(b));
}

Elementary elementary_from_name(const std::string& name) {
  if (name == "exp") return Elementary::exp;
  if (name == "log") return Elementary::log;
  if (name == "sin") return Elementary::sin;
  if (name == "cos") return Elementary::cos;
  if (name == "negate") return Elementary::negate;
  if (name == "reciprocal") return Elementary::reciprocal;
  throw std::invalid_argument("unknown elementary: " + name);
}

Jet jet_compose_elementary(Elementary kind, const Jet& a) {
  const int m = a.order();
  const double a0 = a.coeff(0);
  std::vector<double> b(m + 1, 0.0);
  switch (kind) {
    case Elementary::negate: {
      for (int j = 0; j <= m; ++j) b[j] = -a.coeff(j);
      break;
    }
    case Elementary::exp: {
      b[0] = std::exp(a0);
      for (int k = 1; k <= m; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a.coeff(j) * b[k - j];
        b[k] = s / k;
      }
      break;
    }
    case Elementary::log: {
      if (!(a0 > 0.0))
        throw std::domain_error("jet log: argument must be positive at the center");
      b[0] = std::log(a0);
      for (int k = 1; k <= m; ++k) {
        double s = 0.0;
        for (int j = 1; j < k; ++j) s += j * b[j] * a.coeff(k - j);
        b[k] = (a.coeff(k) - s / k) / a0;
      }
      break;
    }
    case Elementary::reciprocal: {
      if (a0 == 0.0)
        throw std::domain_error("jet reciprocal: zero at the center");
      b[0] = 1.0 / a0;
      for (int k = 1; k <= m; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += a.coeff(j) * b[k - j];
        b[k] = -s / a0;
      }
      break;
    }
    case Elementary::sin:
    case Elementary::cos: {
      // sin and cos propagate jointly: s' = c a', c' = -s a'.
      std::vector<double> sj(m + 1, 0.0), cj(m + 1, 0.0);
      sj[0] = std::sin(a0);
      cj[0] = std::cos(a0);
      for (int k = 1; k <= m; ++k) {
        double ss = 0.0, cs = 0.0;
        for (int j = 1; j <= k; ++j) {
          ss += j * a.coeff(j) * cj[k - j];
          cs += j * a.coeff(j) * sj[k - j];
        }
        sj[k] = ss / k;
        cj[k] = -cs / k;
      }
      b = (kind == Elementary::sin) ? std::move(sj) : std::move(cj);
      break;
    }
  }
  return Jet(a.center(), std::move(b));
}

Jet jet_differentiate(const Jet& a) {
  if (a.order() < 1)
    throw std::invalid_argument("jet_differentiate: order must be >= 1");
  std::vector<double> c(a.order(), 0.0);
  for (int j = 1; j <= a.order(); ++j) c[j - 1] = j * a.coeff(j);
  return Jet(a.center(), std::move(c));
}

}  // namespace betafrac
