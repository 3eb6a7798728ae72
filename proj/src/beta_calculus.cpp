#include "betafrac/beta_calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "betafrac/gamma.hpp"

namespace betafrac {

BetaParam::BetaParam(double beta) : beta_(beta) {
  if (!(beta > 0.0) || beta > 1.0)
    throw std::domain_error("BetaParam: beta must lie in (0, 1]");
  shift_ = 1.0 / gamma(beta);
}

double BetaParam::u(double t) const { return std::pow(t + shift_, beta_); }

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!(a >= 0.0)) throw std::domain_error("Interval: a must be >= 0");
  if (!(b >= a)) throw std::domain_error("Interval: b must be >= a");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("Interval: endpoints must be finite");
}

double weight(const BetaParam& p, double t) {
  if (t < 0.0) throw std::domain_error("weight: t must be >= 0");
  return std::pow(t + p.shift(), p.beta() - 1.0);
}

Jet beta_derivative_jet(const BetaParam& p, const Jet& f_jet, int k) {
  if (k < 1) throw std::invalid_argument("beta_derivative: k must be >= 1");
  if (f_jet.order() < k)
    throw std::invalid_argument("beta_derivative: jet order insufficient");
  Jet g = f_jet;
  const double x = f_jet.center();
  for (int i = 0; i < k; ++i) {
    Jet d = jet_differentiate(g);
    Jet base = jet_add(Jet::variable(x, d.order()),
                       Jet::constant(p.shift(), x, d.order()));
    g = jet_mul(jet_pow_real(base, 1.0 - p.beta()), d);
  }
  return g;
}

double beta_derivative(const BetaParam& p, const FunctionModel& f, int k,
                       double x) {
  if (x < 0.0) throw std::domain_error("beta_derivative: x must be >= 0");
  return beta_derivative_jet(p, f.jet(x, k), k).value();
}

QuadratureResult beta_integral(const BetaParam& p,
                               const std::function<double(double)>& f,
                               const Interval& iv, double tol) {
  if (iv.a() == iv.b()) return QuadratureResult{0.0, 0.0, 0, true};
  auto integrand = [&p, &f](double t) { return weight(p, t) * f(t); };
  return integrate(integrand, iv.a(), iv.b(), tol);
}

QuadratureResult beta_integral(const BetaParam& p, const FunctionModel& f,
                               const Interval& iv, double tol) {
  return beta_integral(
      p, [&f](double t) { return f(t); }, iv, tol);
}

QuadratureResult beta_integral_oriented(const BetaParam& p,
                                        const std::function<double(double)>& f,
                                        double s, double t, double tol) {
  if (s <= t) return beta_integral(p, f, Interval(s, t), tol);
  QuadratureResult r = beta_integral(p, f, Interval(t, s), tol);
  r.value = -r.value;
  return r;
}

double weighted_integral_of_power(const BetaParam& p, double t_ref,
                                  const Interval& iv, int n) {
  if (n < 0)
    throw std::invalid_argument("weighted_integral_of_power: n must be >= 0");
  const double ur = p.u(t_ref);
  const double da = ur - p.u(iv.a());
  const double db = ur - p.u(iv.b());
  return (std::pow(da, n + 1) - std::pow(db, n + 1)) / ((n + 1) * p.beta());
}

}  // namespace betafrac
