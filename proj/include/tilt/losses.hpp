// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_LOSSES_HPP
#define TILT_LOSSES_HPP

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "tilt/measures.hpp"

namespace tilt {

/// Extended-real-valued loss on the outcome space. +infinity is a
/// first-class value (hard exclusion); -infinity and NaN are rejected at
/// construction. The scale constant k is folded into evaluation, so
/// (h, k) and (h/k, 1) evaluate identically.
class LossFunction {
 public:
  struct Zero {};
  struct Tabular {
    std::map<Outcome, double> values;
  };
  struct Quadratic {
    double w;  // h(y) = w * y^2, numeric outcomes only
  };
  struct Restriction {
    std::set<Outcome> allowed;  // 0 on the set, +infinity off it
  };
  struct Sum {
    std::vector<LossFunction> terms;
  };
  using Variant = std::variant<Zero, Tabular, Quadratic, Restriction, Sum>;

  explicit LossFunction(Variant v, double k = 1.0);

  /// Scaled evaluation h(y)/k: finite real or +infinity.
  double operator()(const Outcome& y) const;

  const Variant& variant() const { return variant_; }
  double scale() const { return k_; }

 private:
  Variant variant_;
  double k_;
};

LossFunction zero_loss();
LossFunction tabular_loss(std::map<Outcome, double> values, double k = 1.0);
LossFunction quadratic_loss(double w, double k = 1.0);
LossFunction restriction_loss(std::set<Outcome> allowed, double k = 1.0);

/// Pointwise sum h_I + h_J, the non-overlapping-information combination.
LossFunction combine(LossFunction hI, LossFunction hJ);

/// The loss whose tilt recovers conditioning on X = x: a tabular loss over
/// the y labels with value -ln(f(x,y)/f_Y(y)) where f_Y(y) > 0, zero where
/// f_Y(y) = 0 and +infinity where f(x,y) = 0 but f_Y(y) > 0.
LossFunction self_information_loss(const JointTable& joint,
                                   std::size_t x_index);

/// eval_loss spelled as a free function, mirroring the operation name.
inline double eval_loss(const LossFunction& h, const Outcome& y) {
  return h(y);
}

}  // namespace tilt

#endif
