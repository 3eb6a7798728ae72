#include "betafrac/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace betafrac {

double oracle_integral(const std::function<double(double)>& f, double weightexp,
                       double shift, const Interval& iv, int levels) {
  if (levels < 4) throw std::invalid_argument("oracle_integral: levels < 4");
  auto g = [&](double t) { return std::pow(t + shift, weightexp) * f(t); };

  auto trapezoid = [&](long panels) {
    const double h = iv.length() / panels;
    double s = 0.5 * (g(iv.a()) + g(iv.b()));
    for (long i = 1; i < panels; ++i) s += g(iv.a() + i * h);
    return s * h;
  };

  const long n = 1L << levels;
  const double coarse = trapezoid(n / 2);
  const double fine = trapezoid(n);
  return (4.0 * fine - coarse) / 3.0;
}

namespace {

// Central stencils, truncation error O(h^2).
double central(const std::function<double(double)>& f, double x, int order,
               double h) {
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) /
             (2.0 * h * h * h);
    default:
      return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) +
              f(x - 2 * h)) /
             (h * h * h * h);
  }
}

// Forward stencils, truncation error O(h^2); used near the domain edge.
double forward(const std::function<double(double)>& f, double x, int order,
               double h) {
  auto v = [&](int i) { return f(x + i * h); };
  switch (order) {
    case 1:
      return (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
    case 2:
      return (2.0 * v(0) - 5.0 * v(1) + 4.0 * v(2) - v(3)) / (h * h);
    case 3:
      return (-5.0 * v(0) + 18.0 * v(1) - 24.0 * v(2) + 14.0 * v(3) -
              3.0 * v(4)) /
             (2.0 * h * h * h);
    default:
      return (3.0 * v(0) - 14.0 * v(1) + 26.0 * v(2) - 24.0 * v(3) +
              11.0 * v(4) - 2.0 * v(5)) /
             (h * h * h * h);
  }
}

}  // namespace

double oracle_derivative(const std::function<double(double)>& f, double x,
                         int order) {
  if (order < 1 || order > 4)
    throw std::invalid_argument("oracle_derivative: order must be 1..4");

  double h0 = (order <= 2 ? 0.05 : 0.15) * (1.0 + std::abs(x));
  const int reach = (order <= 2) ? 1 : 2;
  // Central stencils are far more accurate, so near the left edge shrink the
  // step to keep them in range; only fall back to one-sided stencils when
  // that would make h degenerate.
  bool one_sided = false;
  if (x - reach * h0 < 0.0) {
    const double fitted = 0.95 * x / reach;
    if (fitted >= 1e-3)
      h0 = std::min(h0, fitted);
    else
      one_sided = true;
  }

  // Richardson table over halved steps; stencil error is O(h^2).
  constexpr int kLevels = 4;
  std::vector<std::vector<double>> table(kLevels);
  for (int i = 0; i < kLevels; ++i) {
    const double h = h0 / (1 << i);
    table[i].resize(i + 1);
    table[i][0] = one_sided ? forward(f, x, order, h) : central(f, x, order, h);
    double factor = 4.0;
    for (int j = 1; j <= i; ++j) {
      table[i][j] =
          (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      factor *= 4.0;
    }
  }
  return table[kLevels - 1][kLevels - 1];
}

}  // namespace betafrac
