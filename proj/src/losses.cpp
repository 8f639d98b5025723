// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/losses.hpp"

#include <cmath>
#include <limits>

namespace tilt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_value(double v) {
  if (std::isnan(v)) throw InputError("loss value is NaN");
  if (std::isinf(v) && v < 0.0) throw InputError("loss value is -infinity");
}
}  // namespace

LossFunction::LossFunction(Variant v, double k)
    : variant_(std::move(v)), k_(k) {
  if (!(k_ > 0.0)) throw InputError("loss scale k must be positive");
  if (const auto* tab = std::get_if<Tabular>(&variant_)) {
    for (const auto& [_, value] : tab->values) check_value(value);
  } else if (const auto* quad = std::get_if<Quadratic>(&variant_)) {
    if (!(quad->w > 0.0))
      throw InputError("quadratic loss requires w > 0");
  }
}

double LossFunction::operator()(const Outcome& y) const {
  struct Eval {
    const Outcome& y;
    double operator()(const Zero&) const { return 0.0; }
    double operator()(const Tabular& t) const {
      auto it = t.values.find(y);
      if (it == t.values.end())
        throw UndefinedOutcome("loss undefined at outcome '" + y.to_string() +
                               "'");
      return it->second;
    }
    double operator()(const Quadratic& q) const {
      double v = y.numeric();
      return q.w * v * v;
    }
    double operator()(const Restriction& r) const {
      return r.allowed.contains(y) ? 0.0 : kInf;
    }
    double operator()(const Sum& s) const {
      double acc = 0.0;
      for (const auto& term : s.terms) {
        double v = term(y);
        if (std::isinf(v)) return kInf;
        acc += v;
      }
      return acc;
    }
  };
  double raw = std::visit(Eval{y}, variant_);
  return std::isinf(raw) ? raw : raw / k_;
}

LossFunction zero_loss() { return LossFunction(LossFunction::Zero{}); }

LossFunction tabular_loss(std::map<Outcome, double> values, double k) {
  return LossFunction(LossFunction::Tabular{std::move(values)}, k);
}

LossFunction quadratic_loss(double w, double k) {
  return LossFunction(LossFunction::Quadratic{w}, k);
}

LossFunction restriction_loss(std::set<Outcome> allowed, double k) {
  return LossFunction(LossFunction::Restriction{std::move(allowed)}, k);
}

LossFunction combine(LossFunction hI, LossFunction hJ) {
  LossFunction::Sum sum;
  sum.terms.push_back(std::move(hI));
  sum.terms.push_back(std::move(hJ));
  return LossFunction(std::move(sum));
}

LossFunction self_information_loss(const JointTable& joint,
                                   std::size_t x_index) {
  if (x_index >= joint.x_labels().size())
    throw InputError("x index out of range");
  if (joint.row_sum(x_index) <= 0.0)
    throw ZeroMarginal("observed x value '" +
                       joint.x_labels()[x_index].to_string() +
                       "' has zero marginal mass");
  std::map<Outcome, double> values;
  for (std::size_t y = 0; y < joint.y_labels().size(); ++y) {
    double fy = joint.col_sum(y);
    double m = joint.mass_at(x_index, y);
    double h;
    if (fy == 0.0) {
      h = 0.0;  // the indicator factor: y outside the support of f_Y
    } else if (m == 0.0) {
      h = kInf;
    } else {
      h = -std::log(m / fy);
    }
    values.emplace(joint.y_labels()[y], h);
  }
  return tabular_loss(std::move(values));
}

}  // namespace tilt
