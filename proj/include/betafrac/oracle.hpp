#pragma once

#include <functional>

#include "betafrac/beta_calculus.hpp"

namespace betafrac {

/// Brute-force weighted integral of (t + shift)^weightexp * f(t) over
/// [iv.a, iv.b]: composite trapezoid on 2^levels panels with one Richardson
/// extrapolation step. Structurally independent of the adaptive
/// Gauss-Legendre scheme, so it can serve as its oracle.
double oracle_integral(const std::function<double(double)>& f, double weightexp,
                       double shift, const Interval& iv, int levels = 14);

/// Finite-difference derivative of given order (<= 4) at x, central stencils
/// with Richardson step halving; falls back to one-sided stencils when x is
/// too close to 0. Cross-checks jet coefficients only; never used inside the
/// main pipeline.
double oracle_derivative(const std::function<double(double)>& f, double x,
                         int order);

}  // namespace betafrac
