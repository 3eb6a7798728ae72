#include "betafrac/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betafrac {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double require_converged(const QuadratureResult& r, const char* where) {
  if (!r.converged) throw QuadratureError(std::string(where) + ": quadrature did not converge", r);
  return r.value;
}

// One application of D^beta to a jet centered at x.
Jet beta_step(const BetaParam& p, const Jet& g) {
  Jet d = jet_differentiate(g);
  Jet base = jet_add(Jet::variable(g.center(), d.order()),
                     Jet::constant(p.shift(), g.center(), d.order()));
  return jet_mul(jet_pow_real(base, 1.0 - p.beta()), d);
}

}  // namespace

TaylorExpansion::TaylorExpansion(const BetaParam& p, const FunctionModel& f,
                                 double s, int n)
    : p_(p), s_(s), n_(n) {
  if (n < 0) throw std::invalid_argument("TaylorExpansion: degree must be >= 0");
  if (s < 0.0) throw std::domain_error("TaylorExpansion: s must be >= 0");
  Jet g = f.jet(s, n);
  coeffs_.reserve(n + 1);
  coeffs_.push_back(g.value());
  for (int k = 1; k <= n; ++k) {
    g = beta_step(p, g);
    coeffs_.push_back(std::pow(p.beta(), -k) / factorial(k) * g.value());
  }
}

double TaylorExpansion::operator()(double t) const {
  const double du = p_.u(t) - p_.u(s_);
  double acc = 0.0;
  for (int k = n_; k >= 0; --k) acc = acc * du + coeffs_[k];
  return acc;
}

double taylor_polynomial(const BetaParam& p, const FunctionModel& f, double s,
                         int n, double t) {
  return TaylorExpansion(p, f, s, n)(t);
}

double integral_remainder(const BetaParam& p, const FunctionModel& f, double s,
                          int n, double t, double tol) {
  if (n < 0) throw std::invalid_argument("integral_remainder: degree must be >= 0");
  if (s == t) return 0.0;
  const double ut = p.u(t);
  auto integrand = [&](double tau) {
    return std::pow(ut - p.u(tau), n) *
           beta_derivative(p, f, n + 1, tau);
  };
  QuadratureResult r = beta_integral_oriented(p, integrand, s, t, tol);
  require_converged(r, "integral_remainder");
  return std::pow(p.beta(), -n) / factorial(n) * r.value;
}

RemainderValue lagrange_remainder(const BetaParam& p, const FunctionModel& f,
                                  double s, int n, double t, double tol) {
  RemainderValue out;
  if (s == t) {
    out.lagrange_point = s;
    out.lagrange_form = 0.0;
    return out;
  }
  out.integral_form = integral_remainder(p, f, s, n, t, tol);

  const double du = p.u(t) - p.u(s);
  const double scale =
      std::pow(p.beta(), -(n + 1)) / factorial(n + 1) * std::pow(du, n + 1);
  const double required_mean = out.integral_form / scale;

  const double lo = std::min(s, t), hi = std::max(s, t);
  auto dval = [&](double c) { return beta_derivative(p, f, n + 1, c); };

  constexpr int kScan = 64;
  double best_c = lo, best_abs = std::abs(dval(lo) - required_mean);
  double vmin = dval(lo), vmax = vmin;
  double prev_x = lo, prev_h = dval(lo) - required_mean;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  bool bracketed = false;
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double v = dval(x);
    const double h = v - required_mean;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    if (std::abs(h) < best_abs) {
      best_abs = std::abs(h);
      best_c = x;
    }
    if (!bracketed && ((prev_h <= 0.0 && h >= 0.0) || (prev_h >= 0.0 && h <= 0.0))) {
      bracket_lo = prev_x;
      bracket_hi = x;
      bracketed = true;
    }
    prev_x = x;
    prev_h = h;
  }

  double c;
  if (vmax - vmin < 1e-13) {
    c = 0.5 * (lo + hi);
  } else if (bracketed) {
    double xl = bracket_lo, xr = bracket_hi;
    double hl = dval(xl) - required_mean;
    for (int it = 0; it < 100 && xr - xl > 1e-15 * (hi - lo); ++it) {
      const double xm = 0.5 * (xl + xr);
      const double hm = dval(xm) - required_mean;
      if ((hl <= 0.0) == (hm <= 0.0)) {
        xl = xm;
        hl = hm;
      } else {
        xr = xm;
      }
    }
    c = 0.5 * (xl + xr);
  } else if (best_abs <= 1e-9 * (1.0 + std::abs(required_mean))) {
    // The mean sits at the edge of the sampled range within rounding.
    c = best_c;
  } else {
    throw std::runtime_error(
        "lagrange_remainder: no bracket for the mean value point");
  }

  out.lagrange_point = c;
  out.lagrange_form = dval(c) * scale;
  return out;
}

double mean_value_point(const BetaParam& p, const FunctionModel& f,
                        const FunctionModel& g, const Interval& iv,
                        double tol) {
  QuadratureResult ig = beta_integral(p, g, iv, tol);
  require_converged(ig, "mean_value_point");
  if (std::abs(ig.value) <= tol) return iv.a();

  auto fg = [&](double t) { return f(t) * g(t); };
  QuadratureResult ifg = beta_integral(p, fg, iv, tol);
  require_converged(ifg, "mean_value_point");
  const double target = ifg.value / ig.value;

  auto residual_ok = [&](double c) {
    return std::abs(f(c) * ig.value - ifg.value) <=
           tol * (1.0 + std::abs(ifg.value));
  };

  constexpr int kScan = 64;
  const double lo = iv.a(), hi = iv.b();
  double best_c = lo, best_abs = std::abs(f(lo) - target);
  double prev_x = lo, prev_h = f(lo) - target;
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double h = f(x) - target;
    if (std::abs(h) < best_abs) {
      best_abs = std::abs(h);
      best_c = x;
    }
    if ((prev_h <= 0.0 && h >= 0.0) || (prev_h >= 0.0 && h <= 0.0)) {
      double xl = prev_x, xr = x, hl = prev_h;
      for (int it = 0; it < 100 && xr - xl > 1e-15 * (hi - lo); ++it) {
        const double xm = 0.5 * (xl + xr);
        const double hm = f(xm) - target;
        if ((hl <= 0.0) == (hm <= 0.0)) {
          xl = xm;
          hl = hm;
        } else {
          xr = xm;
        }
      }
      return 0.5 * (xl + xr);
    }
    prev_x = x;
    prev_h = h;
  }
  if (residual_ok(best_c)) return best_c;
  throw std::runtime_error("mean_value_point: no bracket for the mean value");
}

std::pair<double, double> remainder_integral_identity(
    const BetaParam& p, const FunctionModel& f, const Interval& iv, double t,
    int n, double tol) {
  if (n < 0)
    throw std::invalid_argument("remainder_integral_identity: degree must be >= 0");
  if (t < iv.a() || t > iv.b())
    throw std::invalid_argument("remainder_integral_identity: t outside [a, b]");

  const double ut = p.u(t);
  const double factor = std::pow(p.beta(), -(n + 1)) / factorial(n + 1);
  auto lhs_integrand = [&](double tau) {
    return std::pow(ut - p.u(tau), n + 1) * beta_derivative(p, f, n + 1, tau);
  };
  QuadratureResult lhs_q = beta_integral(p, lhs_integrand, iv, tol);
  require_converged(lhs_q, "remainder_integral_identity");
  const double lhs = factor * lhs_q.value;

  const double inner_tol = std::max(tol / 10.0, 1e-12);
  auto rem_from_a = [&](double tau) {
    return integral_remainder(p, f, iv.a(), n, tau, inner_tol);
  };
  auto rem_from_b = [&](double tau) {
    return integral_remainder(p, f, iv.b(), n, tau, inner_tol);
  };
  QuadratureResult r1 = beta_integral(p, rem_from_a, Interval(iv.a(), t), tol);
  QuadratureResult r2 = beta_integral(p, rem_from_b, Interval(t, iv.b()), tol);
  require_converged(r1, "remainder_integral_identity");
  require_converged(r2, "remainder_integral_identity");
  return {lhs, r1.value + r2.value};
}

std::pair<std::pair<double, double>, std::pair<double, double>>
corollary_identities(const BetaParam& p, const FunctionModel& f,
                     const Interval& iv, int n, double tol) {
  return {remainder_integral_identity(p, f, iv, iv.a(), n, tol),
          remainder_integral_identity(p, f, iv, iv.b(), n, tol)};
}

}  // namespace betafrac
