#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "betafrac/jet.hpp"

namespace betafrac {

/// A scalar function on [0, inf) that can produce its own truncated Taylor
/// expansion of any order up to kMaxJetOrder at any point of its domain.
///
/// Models are built compositionally from jets of elementary functions, so the
/// coefficients are exact up to rounding. Immutable and safe to share.
class FunctionModel {
 public:
  using JetRule = std::function<Jet(double x, int order)>;

  FunctionModel(std::string name, JetRule rule,
                std::optional<std::pair<double, double>> domain = std::nullopt);

  const std::string& name() const { return name_; }

  /// Taylor jet of the function at x. Validates order and domain and checks
  /// the returned jet is centered at x with the requested order.
  Jet jet(double x, int order) const;

  /// Plain evaluation.
  double operator()(double x) const { return jet(x, 0).value(); }

  /// Closed sub-domain of [0, inf) the model is restricted to, if any.
  const std::optional<std::pair<double, double>>& domain() const { return domain_; }
  bool contains(double a, double b) const;

 private:
  std::string name_;
  JetRule rule_;
  std::optional<std::pair<double, double>> domain_;
};

/// Pointwise negation, sharing the source model's domain.
FunctionModel negate(const FunctionModel& f, std::string name = "");

}  // namespace betafrac
