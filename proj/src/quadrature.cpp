#include "betafrac/quadrature.hpp"

#include <cmath>
#include <set>
#include <vector>

namespace betafrac {

namespace {

constexpr double kNodes15[15] = {
    -0.9879925180204854,  -0.937273392400706,   -0.8482065834104272,
    -0.7244177313601701,  -0.5709721726085388,  -0.3941513470775634,
    -0.20119409399743451, 0.0,                  0.20119409399743451,
    0.3941513470775634,   0.5709721726085388,   0.7244177313601701,
    0.8482065834104272,   0.937273392400706,    0.9879925180204854};
constexpr double kWeights15[15] = {
    0.030753241996118647, 0.07036604748810807, 0.10715922046717177,
    0.1395706779261539,   0.16626920581699378, 0.18616100001556188,
    0.19843148532711125,  0.2025782419255609,  0.19843148532711125,
    0.18616100001556188,  0.16626920581699378, 0.1395706779261539,
    0.10715922046717177,  0.07036604748810807, 0.030753241996118647};
constexpr double kNodes7[7] = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
    0.0,                 0.4058451513773972,  0.7415311855993945,
    0.9491079123427585};
constexpr double kWeights7[7] = {
    0.12948496616887065, 0.2797053914892766, 0.3818300505051183,
    0.41795918367346896, 0.3818300505051183, 0.2797053914892766,
    0.12948496616887065};

struct Panel {
  double a, b;
  double value;  // GL15
  double error;  // |GL15 - GL7|
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double v15 = 0.0, v7 = 0.0;
  for (int i = 0; i < 15; ++i)
    v15 += kWeights15[i] * f(mid + half * kNodes15[i]);
  for (int i = 0; i < 7; ++i) v7 += kWeights7[i] * f(mid + half * kNodes7[i]);
  v15 *= half;
  v7 *= half;
  return Panel{a, b, v15, std::abs(v15 - v7)};
}

// Largest error first; ties broken toward the leftmost interval.
struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error > y.error;
    return x.a < y.a;
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol, int max_panels) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
  if (b < a) throw std::invalid_argument("integrate: b < a");
  if (a == b) return QuadratureResult{0.0, 0.0, 0, true};

  std::multiset<Panel, PanelOrder> panels;
  Panel first = evaluate_panel(f, a, b);
  panels.insert(first);
  long evals = 22;
  int panel_count = 1;
  double value = first.value;
  double err = first.error;

  while (true) {
    if (err <= std::max(tol, tol * std::abs(value)))
      return QuadratureResult{value, err, evals, true};
    if (panel_count >= max_panels)
      return QuadratureResult{value, err, evals, false};
    Panel worst = *panels.begin();
    panels.erase(panels.begin());
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.insert(left);
    panels.insert(right);
    evals += 44;
    ++panel_count;
  }
}

QuadratureResult integrate_oriented(const std::function<double(double)>& f,
                                    double a, double b, double tol,
                                    int max_panels) {
  if (a <= b) return integrate(f, a, b, tol, max_panels);
  QuadratureResult r = integrate(f, b, a, tol, max_panels);
  r.value = -r.value;
  return r;
}

}  // namespace betafrac
