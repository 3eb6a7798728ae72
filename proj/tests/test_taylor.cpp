#include <doctest.h>

#include <cmath>
#include <vector>

#include "betafrac/corpus.hpp"
#include "betafrac/taylor.hpp"

using namespace betafrac;

namespace {

FunctionModel make_exp() {
  return FunctionModel("exp", [](double x, int order) {
    return jet_compose_elementary(Elementary::exp, Jet::variable(x, order));
  });
}

}  // namespace

TEST_CASE("taylor_polynomial classical cases at beta = 1") {
  const BetaParam one(1.0);
  const FunctionModel sq = make_square();
  for (double t : {0.0, 0.3, 1.0, 2.5})
    CHECK(taylor_polynomial(one, sq, 0.0, 2, t) ==
          doctest::Approx(t * t).epsilon(1e-13).scale(1.0));
  CHECK(taylor_polynomial(one, sq, 0.0, 1, 1.0) ==
        doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("degree-1 expansion of the canonical function is exact") {
  for (double beta : {0.1, 0.5, 0.9}) {
    const BetaParam p(beta);
    const FunctionModel f = make_beta_linear(p);
    for (double s : {0.2, 1.0})
      for (double t : {0.0, 0.7, 2.3})
        CHECK(taylor_polynomial(p, f, s, 1, t) ==
              doctest::Approx(f(t)).epsilon(1e-12));
  }
}

TEST_CASE("expansion coefficients: entry 0 is f(s) exactly") {
  const BetaParam p(0.5);
  const FunctionModel f = make_exp_neg();
  const TaylorExpansion e(p, f, 0.8, 4);
  CHECK(e.coefficients().size() == 5);
  CHECK(e.coefficients()[0] == f(0.8));
  CHECK(e.expansion_point() == 0.8);
  CHECK(e(0.8) == doctest::Approx(f(0.8)).epsilon(1e-15));
}

TEST_CASE("integral_remainder examples") {
  const BetaParam one(1.0);
  // beta = 1, f = t^2, s = 0, n = 1, t = 1: int_0^1 (1 - tau) * 2 dtau = 1.
  CHECK(integral_remainder(one, make_square(), 0.0, 1, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-11));
  // Polynomial of matching degree in u: remainder vanishes.
  for (double beta : {0.3, 0.8}) {
    const BetaParam p(beta);
    CHECK(std::abs(integral_remainder(p, make_beta_linear(p), 0.1, 1, 1.9)) <=
          1e-10);
  }
  // s == t degenerate.
  CHECK(integral_remainder(one, make_square(), 0.7, 2, 0.7) == 0.0);
}

TEST_CASE("reconstruction identity across the corpus") {
  const std::vector<double> betas = {0.1, 0.5, 0.9, 1.0};
  const auto corpus = default_corpus();
  const Interval iv(0.0, 1.0);
  for (double beta : betas) {
    const BetaParam p(beta);
    for (const auto& entry : corpus) {
      if (!entry.covers(iv)) continue;
      const FunctionModel f = entry.make(p);
      for (int n : {0, 2, 4}) {
        for (double s : {0.0, 1.0}) {
          for (double t : {0.25, 0.75}) {
            const double resid = f(t) - taylor_polynomial(p, f, s, n, t) -
                                 integral_remainder(p, f, s, n, t);
            CHECK(std::abs(resid) <= 1e-7);
          }
        }
      }
    }
  }
}

TEST_CASE("remainder is oriented") {
  const BetaParam p(0.6);
  const FunctionModel f = make_exp_neg();
  // Reconstruction must work for t < s too.
  const double resid = f(0.2) - taylor_polynomial(p, f, 1.5, 2, 0.2) -
                       integral_remainder(p, f, 1.5, 2, 0.2);
  CHECK(std::abs(resid) <= 1e-8);
}

TEST_CASE("lagrange_remainder examples") {
  const BetaParam one(1.0);

  // Constant second derivative: c is the midpoint, form = 1.
  const auto r1 = lagrange_remainder(one, make_square(), 0.0, 1, 1.0);
  REQUIRE(r1.lagrange_point.has_value());
  CHECK(*r1.lagrange_form == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r1.integral_form == doctest::Approx(1.0).epsilon(1e-10));

  // f = exp, s = 0, n = 0, t = 1: c = log(e - 1), form = e - 1.
  const auto r2 = lagrange_remainder(one, make_exp(), 0.0, 0, 1.0);
  REQUIRE(r2.lagrange_point.has_value());
  CHECK(*r2.lagrange_point ==
        doctest::Approx(0.54132485461291810898).epsilon(1e-8));
  CHECK(*r2.lagrange_form ==
        doctest::Approx(1.7182818284590452354).epsilon(1e-9));

  // Canonical function, n = 0: form = u(t) - u(s) for any beta.
  for (double beta : {0.25, 0.75}) {
    const BetaParam p(beta);
    const auto r3 = lagrange_remainder(p, make_beta_linear(p), 0.2, 0, 1.4);
    REQUIRE(r3.lagrange_form.has_value());
    CHECK(*r3.lagrange_form ==
          doctest::Approx(p.u(1.4) - p.u(0.2)).epsilon(1e-9));
  }
}

TEST_CASE("lagrange point lies between s and t and matches the integral") {
  for (double beta : {0.5, 1.0}) {
    const BetaParam p(beta);
    for (const FunctionModel& f : {make_exp_neg(), make_log1p()}) {
      for (int n : {0, 1, 3}) {
        const auto r = lagrange_remainder(p, f, 0.25, n, 1.75);
        REQUIRE(r.lagrange_point.has_value());
        CHECK(*r.lagrange_point >= 0.25);
        CHECK(*r.lagrange_point <= 1.75);
        CHECK(std::abs(*r.lagrange_form - r.integral_form) <= 1e-7);
      }
    }
  }
}

TEST_CASE("mean_value_point") {
  const BetaParam one(1.0);
  CHECK(mean_value_point(one, make_identity(), make_constant(1.0),
                         Interval(0.0, 1.0)) ==
        doctest::Approx(0.5).epsilon(1e-9));

  // beta = 0.5, f = g = t on [0,1]: c = int t^2 d_beta / int t d_beta.
  const BetaParam half(0.5);
  CHECK(mean_value_point(half, make_identity(), make_identity(),
                         Interval(0.0, 1.0)) ==
        doctest::Approx(0.64095146629149242369).epsilon(1e-8));

  // Constant f: residual contract holds for whatever c comes back.
  const FunctionModel kf = make_constant(3.25);
  const Interval iv(0.5, 2.0);
  const double c = mean_value_point(half, kf, make_exp_neg(), iv);
  CHECK(c >= iv.a());
  CHECK(c <= iv.b());
  const double ig = beta_integral(half, make_exp_neg(), iv, 1e-12).value;
  auto fg = [&](double t) { return kf(t) * std::exp(-t); };
  const double ifg = beta_integral(half, fg, iv, 1e-12).value;
  CHECK(std::abs(ifg - kf(c) * ig) <= 1e-8 * (1.0 + std::abs(ifg)));

  // Vanishing weight: returns a.
  CHECK(mean_value_point(one, make_identity(), make_constant(0.0), iv) ==
        iv.a());
}

TEST_CASE("remainder-integral identity examples") {
  const BetaParam one(1.0);

  // beta = 1, f = t^2, n = 0, [0,1], t = 0.5: both sides equal -1/6.
  const auto [lhs, rhs] = remainder_integral_identity(
      one, make_square(), Interval(0.0, 1.0), 0.5, 0);
  CHECK(lhs == doctest::Approx(-1.0 / 6.0).epsilon(1e-9));
  CHECK(rhs == doctest::Approx(-1.0 / 6.0).epsilon(1e-7));
  CHECK(std::abs(lhs - rhs) <= 1e-7);

  // D^{(n+1)beta} f == 0: both sides vanish.
  const auto [zl, zr] = remainder_integral_identity(
      one, make_constant(2.0), Interval(0.0, 1.0), 0.3, 0);
  CHECK(std::abs(zl) <= 1e-10);
  CHECK(std::abs(zr) <= 1e-10);

  // n = -1 base case is additivity of the integral itself.
  const BetaParam p(0.5);
  const double whole =
      beta_integral(p, make_exp_neg(), Interval(0.0, 1.0), 1e-12).value;
  const double split =
      beta_integral(p, make_exp_neg(), Interval(0.0, 0.4), 1e-12).value +
      beta_integral(p, make_exp_neg(), Interval(0.4, 1.0), 1e-12).value;
  CHECK(whole == doctest::Approx(split).epsilon(1e-11));
}

TEST_CASE("corollary identities") {
  const BetaParam one(1.0);

  // beta = 1, f = t, n = 0, [0,1]: b-form gives 0.5 = 0.5.
  const auto pr = corollary_identities(one, make_identity(),
                                       Interval(0.0, 1.0), 0);
  CHECK(pr.second.first == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(pr.second.second == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(pr.first.first == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(pr.first.second == doctest::Approx(-0.5).epsilon(1e-7));

  // f = exp: both pairs agree within 1e-8.
  const auto pe = corollary_identities(one, make_exp(), Interval(0.0, 1.0), 0);
  CHECK(std::abs(pe.first.first - pe.first.second) <= 1e-8);
  CHECK(std::abs(pe.second.first - pe.second.second) <= 1e-8);

  // Constant f: all four values zero.
  const auto pc =
      corollary_identities(one, make_constant(1.0), Interval(0.0, 1.0), 1);
  CHECK(std::abs(pc.first.first) <= 1e-10);
  CHECK(std::abs(pc.first.second) <= 1e-10);
  CHECK(std::abs(pc.second.first) <= 1e-10);
  CHECK(std::abs(pc.second.second) <= 1e-10);
}

TEST_CASE("identity holds across betas and degrees") {
  const Interval iv(0.5, 2.0);
  for (double beta : {0.25, 0.75, 1.0}) {
    const BetaParam p(beta);
    for (int n : {0, 1, 2}) {
      const auto [lhs, rhs] =
          remainder_integral_identity(p, make_exp_neg(), iv, 1.2, n);
      CHECK(std::abs(lhs - rhs) <= 1e-7);
    }
  }
}
