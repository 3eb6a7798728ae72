#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betafrac/beta_calculus.hpp"
#include "betafrac/inequalities.hpp"

namespace betafrac {

/// A corpus function with its declared properties. Some entries (the
/// beta-linear canonical function) depend on beta, so the model is produced
/// per parameter.
struct CorpusEntry {
  std::string name;
  std::function<FunctionModel(const BetaParam&)> make;
  Direction declared_direction = Direction::neither;
  bool declared_nonincreasing = false;
  bool declared_nondecreasing = false;
  SignClass declared_sign = SignClass::mixed;
  /// Restriction inside [0, inf), when the function only makes sense there.
  std::optional<std::pair<double, double>> domain;
  /// Exact beta-integral over an interval, when a closed form exists.
  std::function<double(const BetaParam&, const Interval&)> closed_form_integral;

  bool covers(const Interval& iv) const {
    if (iv.a() < 0.0) return false;
    if (!domain) return true;
    return iv.a() >= domain->first && iv.b() <= domain->second;
  }
};

/// The eight default corpus functions: 1, t, t^2, exp(-t), log(1+t),
/// 1/(1+t), (t + 1/Gamma(beta))^beta, and 1-t restricted to [0, 1].
std::vector<CorpusEntry> default_corpus();

/// Re-verifies every declared tag with check_monotone_sign on each interval
/// the entry covers. Throws std::logic_error on a mismatch.
void verify_corpus_tags(const std::vector<CorpusEntry>& corpus,
                        const std::vector<Interval>& intervals,
                        const std::vector<double>& betas);

/// Elementary model builders, shared by the corpus and by tests.
FunctionModel make_constant(double value, std::string name = "");
FunctionModel make_identity();
FunctionModel make_square();
FunctionModel make_exp_neg();
FunctionModel make_log1p();
FunctionModel make_reciprocal_1pt();
FunctionModel make_one_minus_t();
FunctionModel make_beta_linear(const BetaParam& p);

}  // namespace betafrac
