#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "betafrac/gamma.hpp"

namespace bf = betafrac;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("gamma at integer and half-integer points") {
  CHECK(bf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(bf::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(bf::gamma(0.5) == doctest::Approx(kSqrtPi).epsilon(1e-13));
  CHECK(bf::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ln_gamma agrees with gamma") {
  CHECK(bf::ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bf::ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bf::ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
  for (double x = 0.1; x < 30.0; x += 0.7)
    CHECK(std::exp(bf::ln_gamma(x)) == doctest::Approx(bf::gamma(x)).epsilon(1e-12));
}

TEST_CASE("recurrence bf::gamma(x+1) = x bf::gamma(x)") {
  for (double x = 0.51; x < 100.0; x += 0.83) {
    const double lhs = bf::gamma(x + 1.0);
    CHECK(std::abs(lhs - x * bf::gamma(x)) / lhs <= 1e-12);
  }
}

TEST_CASE("reflection point: bf::gamma(1/2)^2 = pi") {
  const double g = bf::gamma(0.5);
  CHECK(g * g == doctest::Approx(3.14159265358979323846).epsilon(1e-12));
}

TEST_CASE("minimum sits inside (1, 2)") {
  double best_x = 1.0, best = bf::gamma(1.0);
  for (double x = 0.6; x <= 3.0; x += 0.001) {
    const double v = bf::gamma(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  CHECK(best_x > 1.0);
  CHECK(best_x < 2.0);
}

TEST_CASE("domain and overflow errors") {
  CHECK_THROWS_AS(bf::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(bf::gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(bf::gamma(200.0), std::overflow_error);
  CHECK_THROWS_AS(bf::ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(bf::ln_gamma(-3.0), std::domain_error);
}

TEST_CASE("accuracy against std::lgamma across (0, 171]") {
  for (double x = 0.05; x <= 171.0; x += 0.37) {
    const double ref = std::exp(std::lgamma(x));
    CHECK(std::abs(bf::gamma(x) - ref) / ref <= 1e-12);
  }
}
