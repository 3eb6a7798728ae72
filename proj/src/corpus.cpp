#include "betafrac/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace betafrac {

namespace {

Jet affine_jet(double x, int order, double offset) {
  return jet_add(Jet::variable(x, order), Jet::constant(offset, x, order));
}

}  // namespace

FunctionModel make_constant(double value, std::string name) {
  if (name.empty()) name = "const_" + std::to_string(value);
  return FunctionModel(std::move(name), [value](double x, int order) {
    return Jet::constant(value, x, order);
  });
}

FunctionModel make_identity() {
  return FunctionModel("t", [](double x, int order) {
    return Jet::variable(x, order);
  });
}

FunctionModel make_square() {
  return FunctionModel("t_squared", [](double x, int order) {
    Jet v = Jet::variable(x, order);
    return jet_mul(v, v);
  });
}

FunctionModel make_exp_neg() {
  return FunctionModel("exp_neg", [](double x, int order) {
    return jet_compose_elementary(
        Elementary::exp,
        jet_compose_elementary(Elementary::negate, Jet::variable(x, order)));
  });
}

FunctionModel make_log1p() {
  return FunctionModel("log1p", [](double x, int order) {
    return jet_compose_elementary(Elementary::log, affine_jet(x, order, 1.0));
  });
}

FunctionModel make_reciprocal_1pt() {
  return FunctionModel("reciprocal_1pt", [](double x, int order) {
    return jet_compose_elementary(Elementary::reciprocal,
                                  affine_jet(x, order, 1.0));
  });
}

FunctionModel make_one_minus_t() {
  return FunctionModel(
      "one_minus_t",
      [](double x, int order) {
        return jet_compose_elementary(
            Elementary::negate,
            jet_add(Jet::variable(x, order), Jet::constant(-1.0, x, order)));
      },
      std::pair<double, double>{0.0, 1.0});
}

FunctionModel make_beta_linear(const BetaParam& p) {
  const double shift = p.shift();
  const double beta = p.beta();
  return FunctionModel("beta_linear", [shift, beta](double x, int order) {
    return jet_pow_real(affine_jet(x, order, shift), beta);
  });
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;

  auto add = [&corpus](std::string name,
                       std::function<FunctionModel(const BetaParam&)> make,
                       bool noninc, bool nondec, SignClass sign,
                       std::optional<std::pair<double, double>> domain = {},
                       std::function<double(const BetaParam&, const Interval&)>
                           closed_form = nullptr) {
    CorpusEntry e;
    e.name = std::move(name);
    e.make = std::move(make);
    e.declared_nonincreasing = noninc;
    e.declared_nondecreasing = nondec;
    e.declared_direction = noninc ? Direction::nonincreasing
                                  : (nondec ? Direction::nondecreasing
                                            : Direction::neither);
    e.declared_sign = sign;
    e.domain = domain;
    e.closed_form_integral = std::move(closed_form);
    corpus.push_back(std::move(e));
  };

  add("const_one",
      [](const BetaParam&) { return make_constant(1.0, "const_one"); },
      true, true, SignClass::nonnegative, {},
      [](const BetaParam& p, const Interval& iv) {
        return (p.u(iv.b()) - p.u(iv.a())) / p.beta();
      });
  add("t", [](const BetaParam&) { return make_identity(); }, false, true,
      SignClass::nonnegative, {},
      [](const BetaParam& p, const Interval& iv) {
        // int t (t+c)^(beta-1) dt with t = (t+c) - c
        auto prim = [&p](double t) {
          const double tc = t + p.shift();
          return std::pow(tc, p.beta() + 1.0) / (p.beta() + 1.0) -
                 p.shift() * std::pow(tc, p.beta()) / p.beta();
        };
        return prim(iv.b()) - prim(iv.a());
      });
  add("t_squared", [](const BetaParam&) { return make_square(); }, false, true,
      SignClass::nonnegative);
  add("exp_neg", [](const BetaParam&) { return make_exp_neg(); }, true, false,
      SignClass::nonnegative);
  add("log1p", [](const BetaParam&) { return make_log1p(); }, false, true,
      SignClass::nonnegative);
  add("reciprocal_1pt", [](const BetaParam&) { return make_reciprocal_1pt(); },
      true, false, SignClass::nonnegative);
  add("beta_linear", [](const BetaParam& p) { return make_beta_linear(p); },
      false, true, SignClass::nonnegative, {},
      [](const BetaParam& p, const Interval& iv) {
        // int (t+c)^beta (t+c)^(beta-1) dt = [(t+c)^(2 beta)] / (2 beta)
        return (std::pow(iv.b() + p.shift(), 2.0 * p.beta()) -
                std::pow(iv.a() + p.shift(), 2.0 * p.beta())) /
               (2.0 * p.beta());
      });
  add("one_minus_t", [](const BetaParam&) { return make_one_minus_t(); }, true,
      false, SignClass::nonnegative, std::pair<double, double>{0.0, 1.0});

  return corpus;
}

void verify_corpus_tags(const std::vector<CorpusEntry>& corpus,
                        const std::vector<Interval>& intervals,
                        const std::vector<double>& betas) {
  for (const CorpusEntry& e : corpus) {
    for (double beta : betas) {
      const BetaParam p(beta);
      FunctionModel f = e.make(p);
      for (const Interval& iv : intervals) {
        if (!e.covers(iv)) continue;
        MonotonicityReport rep = check_monotone_sign(f, iv);
        if (rep.is_nonincreasing != e.declared_nonincreasing ||
            rep.is_nondecreasing != e.declared_nondecreasing ||
            rep.sign != e.declared_sign)
          throw std::logic_error("corpus tag mismatch for '" + e.name + "'");
      }
    }
  }
}

}  // namespace betafrac
