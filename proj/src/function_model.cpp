#include "betafrac/function_model.hpp"

#include <stdexcept>

namespace betafrac {

FunctionModel::FunctionModel(std::string name, JetRule rule,
                             std::optional<std::pair<double, double>> domain)
    : name_(std::move(name)), rule_(std::move(rule)), domain_(domain) {
  if (!rule_) throw std::invalid_argument("FunctionModel: missing jet rule");
}

Jet FunctionModel::jet(double x, int order) const {
  if (x < 0.0)
    throw std::domain_error("FunctionModel: argument below 0");
  if (order < 0 || order > kMaxJetOrder)
    throw std::invalid_argument("FunctionModel: unsupported jet order");
  if (domain_ && (x < domain_->first || x > domain_->second))
    throw std::domain_error("FunctionModel '" + name_ + "': argument outside domain");
  Jet j = rule_(x, order);
  if (j.center() != x || j.order() != order)
    throw std::logic_error("FunctionModel '" + name_ + "': rule returned wrong jet shape");
  return j;
}

bool FunctionModel::contains(double a, double b) const {
  if (a < 0.0) return false;
  if (!domain_) return true;
  return a >= domain_->first && b <= domain_->second;
}

FunctionModel negate(const FunctionModel& f, std::string name) {
  if (name.empty()) name = "neg_" + f.name();
  return FunctionModel(
      std::move(name),
      [f](double x, int order) {
        return jet_compose_elementary(Elementary::negate, f.jet(x, order));
      },
      f.domain());
}

}  // namespace betafrac
