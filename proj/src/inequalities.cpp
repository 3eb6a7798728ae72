#include "betafrac/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace betafrac {

namespace {

constexpr double kSlack = 1e-12;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double require_converged(const QuadratureResult& r, const char* where) {
  if (!r.converged)
    throw QuadratureError(std::string(where) + ": quadrature did not converge", r);
  return r.value;
}

// Exact beta-integral of the constant 1 over [x, y].
double unit_mass(const BetaParam& p, double x, double y) {
  return (p.u(y) - p.u(x)) / p.beta();
}

Verdict chain_verdict(bool hypotheses_ok, double margin_left,
                      double margin_right) {
  if (!hypotheses_ok) return Verdict::hypothesis_not_met;
  if (margin_left >= -kVerdictSlack && margin_right >= -kVerdictSlack)
    return Verdict::holds;
  return Verdict::violated;
}

void fill_chain(InequalityReport& r, double lhs, double mid, double rhs,
                bool hypotheses_ok) {
  r.lhs = lhs;
  r.mid = mid;
  r.rhs = rhs;
  r.margin_left = mid - lhs;
  r.margin_right = rhs - mid;
  r.verdict = chain_verdict(hypotheses_ok, r.margin_left, r.margin_right);
}

// Sampled check that g maps [a, b] into [0, M].
bool range_in_0_M(const FunctionModel& g, const Interval& iv, double M,
                  int grid = 257) {
  for (int i = 0; i <= grid; ++i) {
    const double x = iv.a() + iv.length() * i / grid;
    const double v = g(x);
    if (v < -kSlack || v > M + kSlack) return false;
  }
  return true;
}

// D^(n beta) f as a plain function of the evaluation point (n = 0 is f).
std::function<double(double)> iterated_derivative(const BetaParam& p,
                                                  const FunctionModel& f,
                                                  int n) {
  if (n == 0) return [&f](double x) { return f(x); };
  return [&p, &f, n](double x) { return beta_derivative(p, f, n, x); };
}

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::nonincreasing: return "nonincreasing";
    case Direction::nondecreasing: return "nondecreasing";
    default: return "neither";
  }
}

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::nonpositive: return "nonpositive";
    default: return "mixed";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    default: return "hypothesis_not_met";
  }
}

MonotonicityReport check_monotone_sign(const std::function<double(double)>& f,
                                       const Interval& iv, int grid) {
  if (grid < 16) throw std::invalid_argument("check_monotone_sign: grid < 16");
  std::vector<double> xs;
  xs.reserve(grid + 2);
  xs.push_back(iv.a());
  for (int i = 0; i < grid; ++i)
    xs.push_back(iv.a() + iv.length() * (i + 1) / (grid + 1));
  xs.push_back(iv.b());

  MonotonicityReport rep;
  rep.samples = static_cast<int>(xs.size());
  std::vector<double> vs(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) vs[i] = f(xs[i]);

  rep.is_nonincreasing = true;
  rep.is_nondecreasing = true;
  std::optional<std::pair<double, double>> inc_witness, dec_witness;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (vs[i + 1] > vs[i] + kSlack && rep.is_nonincreasing) {
      rep.is_nonincreasing = false;
      inc_witness = {xs[i], xs[i + 1]};
    }
    if (vs[i + 1] < vs[i] - kSlack && rep.is_nondecreasing) {
      rep.is_nondecreasing = false;
      dec_witness = {xs[i], xs[i + 1]};
    }
  }
  if (rep.is_nonincreasing)
    rep.direction = Direction::nonincreasing;
  else if (rep.is_nondecreasing)
    rep.direction = Direction::nondecreasing;
  else {
    rep.direction = Direction::neither;
    rep.witness = inc_witness ? inc_witness : dec_witness;
  }

  bool any_neg = false, any_pos = false;
  size_t min_i = 0, max_i = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < -kSlack) any_neg = true;
    if (vs[i] > kSlack) any_pos = true;
    if (vs[i] < vs[min_i]) min_i = i;
    if (vs[i] > vs[max_i]) max_i = i;
  }
  if (any_neg && any_pos) {
    rep.sign = SignClass::mixed;
    if (!rep.witness) rep.witness = {xs[min_i], xs[max_i]};
  } else if (any_neg) {
    rep.sign = SignClass::nonpositive;
  } else {
    // all-zero functions count as nonnegative
    rep.sign = SignClass::nonnegative;
  }
  return rep;
}

MonotonicityReport check_monotone_sign(const FunctionModel& f,
                                       const Interval& iv, int grid) {
  return check_monotone_sign([&f](double x) { return f(x); }, iv, grid);
}

double steffensen_l(const BetaParam& p, const FunctionModel& g,
                    const Interval& iv, double M, double tol) {
  if (!(M > 0.0)) throw std::domain_error("steffensen_l: M must be > 0");
  if (!range_in_0_M(g, iv, M))
    throw std::domain_error("steffensen_l: g leaves [0, M] on the interval");
  if (iv.length() == 0.0) return 0.0;
  QuadratureResult ig = beta_integral(p, g, iv, tol);
  require_converged(ig, "steffensen_l");
  return p.beta() * iv.length() / (M * (p.u(iv.b()) - p.u(iv.a()))) * ig.value;
}

InequalityReport check_lemma_bounds(const BetaParam& p, const FunctionModel& g,
                                    const Interval& iv, double M, double tol) {
  InequalityReport rep;
  rep.name = "lemma_bounds";
  rep.hypothesis.push_back(check_monotone_sign(g, iv));
  const double l = steffensen_l(p, g, iv, M, tol);
  rep.l_value = l;
  QuadratureResult mid = beta_integral(p, g, iv, tol);
  require_converged(mid, "check_lemma_bounds");
  fill_chain(rep, M * unit_mass(p, iv.b() - l, iv.b()), mid.value,
             M * unit_mass(p, iv.a(), iv.a() + l), true);
  return rep;
}

InequalityReport check_steffensen(const BetaParam& p, const FunctionModel& f,
                                  const FunctionModel& g, const Interval& iv,
                                  double M, double tol) {
  InequalityReport rep;
  rep.name = "steffensen";
  MonotonicityReport f_rep = check_monotone_sign(f, iv);
  rep.hypothesis.push_back(f_rep);
  const bool f_ok =
      f_rep.is_nonincreasing && f_rep.sign == SignClass::nonnegative;
  const bool g_ok = range_in_0_M(g, iv, M);
  if (!g_ok) {
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }
  const double l = steffensen_l(p, g, iv, M, tol);
  rep.l_value = l;
  auto fg = [&](double t) { return f(t) * g(t); };
  QuadratureResult mid = beta_integral(p, fg, iv, tol);
  QuadratureResult left = beta_integral(p, f, Interval(iv.b() - l, iv.b()), tol);
  QuadratureResult right = beta_integral(p, f, Interval(iv.a(), iv.a() + l), tol);
  require_converged(mid, "check_steffensen");
  require_converged(left, "check_steffensen");
  require_converged(right, "check_steffensen");
  fill_chain(rep, M * left.value, mid.value, M * right.value, f_ok);
  return rep;
}

InequalityReport check_steffensen_reversed(const BetaParam& p,
                                           const FunctionModel& f,
                                           const FunctionModel& g,
                                           const Interval& iv, double M,
                                           double tol) {
  InequalityReport rep;
  rep.name = "steffensen_reversed";
  MonotonicityReport f_rep = check_monotone_sign(f, iv);
  rep.hypothesis.push_back(f_rep);
  const bool f_ok =
      f_rep.is_nondecreasing && f_rep.sign == SignClass::nonpositive;
  const bool g_ok = range_in_0_M(g, iv, M);
  if (!g_ok) {
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }
  const double l = steffensen_l(p, g, iv, M, tol);
  rep.l_value = l;
  auto fg = [&](double t) { return f(t) * g(t); };
  QuadratureResult mid = beta_integral(p, fg, iv, tol);
  QuadratureResult left = beta_integral(p, f, Interval(iv.a(), iv.a() + l), tol);
  QuadratureResult right = beta_integral(p, f, Interval(iv.b() - l, iv.b()), tol);
  require_converged(mid, "check_steffensen_reversed");
  require_converged(left, "check_steffensen_reversed");
  require_converged(right, "check_steffensen_reversed");
  fill_chain(rep, M * left.value, mid.value, M * right.value, f_ok);
  return rep;
}

namespace {

InequalityReport taylor_steffensen_impl(const BetaParam& p,
                                        const FunctionModel& f,
                                        const Interval& iv, int n, double tol,
                                        bool reversed) {
  if (n < 0) throw std::invalid_argument("check_taylor_steffensen: n < 0");
  InequalityReport rep;
  rep.name = reversed ? "taylor_steffensen_reversed" : "taylor_steffensen";

  auto dn = iterated_derivative(p, f, n);
  auto dn1 = iterated_derivative(p, f, n + 1);
  MonotonicityReport dn_rep = check_monotone_sign(dn, iv);
  MonotonicityReport dn1_rep = check_monotone_sign(dn1, iv);
  rep.hypothesis.push_back(dn_rep);
  rep.hypothesis.push_back(dn1_rep);
  const bool hyp = reversed
                       ? (dn1_rep.is_nonincreasing && dn_rep.is_nondecreasing)
                       : (dn1_rep.is_nondecreasing && dn_rep.is_nonincreasing);
  if (!hyp) {
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }

  const double l = iv.length() / (n + 2);
  rep.l_value = l;
  const double inner_tol = std::max(tol / 10.0, 1e-12);
  auto rem_from_a = [&](double tau) {
    return integral_remainder(p, f, iv.a(), n, tau, inner_tol);
  };
  QuadratureResult rq = beta_integral(p, rem_from_a, iv, tol);
  require_converged(rq, "check_taylor_steffensen");
  const double du = p.u(iv.b()) - p.u(iv.a());
  const double mid = factorial(n + 1) * std::pow(p.beta(), n + 1) *
                     std::pow(du, -(n + 1)) * rq.value;
  const double left_end = dn(iv.a() + l) - dn(iv.a());
  const double right_end = dn(iv.b()) - dn(iv.b() - l);
  if (reversed)
    fill_chain(rep, right_end, mid, left_end, true);
  else
    fill_chain(rep, left_end, mid, right_end, true);
  return rep;
}

InequalityReport hermite_hadamard_impl(const BetaParam& p,
                                       const FunctionModel& f,
                                       const Interval& iv, double tol,
                                       bool reversed) {
  InequalityReport rep;
  rep.name = reversed ? "hermite_hadamard_reversed" : "hermite_hadamard";
  auto d1 = iterated_derivative(p, f, 1);
  MonotonicityReport f_rep = check_monotone_sign(f, iv);
  MonotonicityReport d1_rep = check_monotone_sign(d1, iv);
  rep.hypothesis.push_back(f_rep);
  rep.hypothesis.push_back(d1_rep);
  const bool hyp = reversed
                       ? (d1_rep.is_nonincreasing && f_rep.is_nondecreasing)
                       : (d1_rep.is_nondecreasing && f_rep.is_nonincreasing);
  if (!hyp) {
    rep.verdict = Verdict::hypothesis_not_met;
    return rep;
  }
  QuadratureResult iq = beta_integral(p, f, iv, tol);
  require_converged(iq, "check_hermite_hadamard");
  const double mean =
      p.beta() / (p.u(iv.b()) - p.u(iv.a())) * iq.value;
  const double fm = f(iv.midpoint());
  const double sum_ends = f(iv.a()) + f(iv.b()) - fm;
  if (reversed)
    fill_chain(rep, sum_ends, mean, fm, true);
  else
    fill_chain(rep, fm, mean, sum_ends, true);
  return rep;
}

}  // namespace

InequalityReport check_taylor_steffensen(const BetaParam& p,
                                         const FunctionModel& f,
                                         const Interval& iv, int n,
                                         double tol) {
  return taylor_steffensen_impl(p, f, iv, n, tol, false);
}

InequalityReport check_taylor_steffensen_reversed(const BetaParam& p,
                                                  const FunctionModel& f,
                                                  const Interval& iv, int n,
                                                  double tol) {
  return taylor_steffensen_impl(p, f, iv, n, tol, true);
}

InequalityReport check_hermite_hadamard(const BetaParam& p,
                                        const FunctionModel& f,
                                        const Interval& iv, double tol) {
  return hermite_hadamard_impl(p, f, iv, tol, false);
}

InequalityReport check_hermite_hadamard_reversed(const BetaParam& p,
                                                 const FunctionModel& f,
                                                 const Interval& iv,
                                                 double tol) {
  return hermite_hadamard_impl(p, f, iv, tol, true);
}

}  // namespace betafrac
