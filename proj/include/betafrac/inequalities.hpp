#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/beta_calculus.hpp"
#include "betafrac/taylor.hpp"

namespace betafrac {

enum class Direction { nonincreasing, nondecreasing, neither };
enum class SignClass { nonnegative, nonpositive, mixed };
enum class Verdict { holds, violated, hypothesis_not_met };

std::string to_string(Direction d);
std::string to_string(SignClass s);
std::string to_string(Verdict v);

/// Sampled monotonicity and sign classification with slack 1e-12.
/// A constant function is both nonincreasing and nondecreasing; direction
/// then reports nonincreasing and the is_* flags carry the full picture.
struct MonotonicityReport {
  Direction direction = Direction::neither;
  bool is_nonincreasing = false;
  bool is_nondecreasing = false;
  SignClass sign = SignClass::mixed;
  std::optional<std::pair<double, double>> witness;  // first violating pair
  int samples = 0;
};

/// Three-term chain evaluation: lhs <= mid <= rhs is claimed when the
/// hypotheses hold. Margins within -1e-9 count as holding.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double mid = 0.0;
  double rhs = 0.0;
  double margin_left = 0.0;   // mid - lhs
  double margin_right = 0.0;  // rhs - mid
  std::vector<MonotonicityReport> hypothesis;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::optional<double> l_value;
};

/// Slack applied to chain margins before declaring a violation.
inline constexpr double kVerdictSlack = 1e-9;

MonotonicityReport check_monotone_sign(const std::function<double(double)>& f,
                                       const Interval& iv, int grid = 257);
MonotonicityReport check_monotone_sign(const FunctionModel& f,
                                       const Interval& iv, int grid = 257);

/// The Steffensen shift l = beta (b-a) / (M [u(b) - u(a)]) * int_a^b g d_beta
/// for g mapping [a, b] into [0, M]. Always lands in [0, b-a] up to rounding.
double steffensen_l(const BetaParam& p, const FunctionModel& g,
                    const Interval& iv, double M, double tol = 1e-10);

/// int_{b-l}^b M d_beta <= int_a^b g d_beta <= int_a^{a+l} M d_beta.
InequalityReport check_lemma_bounds(const BetaParam& p, const FunctionModel& g,
                                    const Interval& iv, double M,
                                    double tol = 1e-10);

/// M int_{b-l}^b f d_beta <= int_a^b f g d_beta <= M int_a^{a+l} f d_beta
/// for f nonnegative nonincreasing and g into [0, M]; l is computed from g.
InequalityReport check_steffensen(const BetaParam& p, const FunctionModel& f,
                                  const FunctionModel& g, const Interval& iv,
                                  double M, double tol = 1e-10);

/// Reversed chain for f nonpositive nondecreasing.
InequalityReport check_steffensen_reversed(const BetaParam& p,
                                           const FunctionModel& f,
                                           const FunctionModel& g,
                                           const Interval& iv, double M,
                                           double tol = 1e-10);

/// Taylor-Steffensen bounds with l = (b-a)/(n+2):
///   D^(n beta) f(a+l) - D^(n beta) f(a)
///     <= (n+1)! beta^(n+1) [u(b)-u(a)]^(-n-1) int_a^b R_{n,f}(a,tau) d_beta
///     <= D^(n beta) f(b) - D^(n beta) f(b-l)
/// under D^((n+1)beta) f increasing and D^(n beta) f decreasing.
InequalityReport check_taylor_steffensen(const BetaParam& p,
                                         const FunctionModel& f,
                                         const Interval& iv, int n,
                                         double tol = 1e-9);

/// Mirror chain under D^((n+1)beta) f decreasing and D^(n beta) f increasing.
InequalityReport check_taylor_steffensen_reversed(const BetaParam& p,
                                                  const FunctionModel& f,
                                                  const Interval& iv, int n,
                                                  double tol = 1e-9);

/// f((a+b)/2) <= beta/[u(b)-u(a)] int_a^b f d_beta
///            <= f(a) + f(b) - f((a+b)/2)
/// under D^beta f increasing and f decreasing.
InequalityReport check_hermite_hadamard(const BetaParam& p,
                                        const FunctionModel& f,
                                        const Interval& iv,
                                        double tol = 1e-10);

/// Mirror chain under D^beta f decreasing and f increasing.
InequalityReport check_hermite_hadamard_reversed(const BetaParam& p,
                                                 const FunctionModel& f,
                                                 const Interval& iv,
                                                 double tol = 1e-10);

}  // namespace betafrac
