// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace tilt {

namespace {
constexpr double kMassTol = 1e-12;

void check_points_distinct(const std::vector<Outcome>& points) {
  std::set<Outcome> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second)
      throw DuplicatePoint("duplicate support point '" + p.to_string() + "'");
  }
}
}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Outcome> points,
                                 std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.size() != weights_.size())
    throw InputError("points and weights differ in length");
  if (points_.empty()) throw EmptySupport("empty support");
  check_points_distinct(points_);
  double total = 0.0;
  for (double w : weights_) {
    if (std::isnan(w) || w < 0.0)
      throw NegativeWeight("negative weight " + std::to_string(w));
    total += w;
  }
  if (std::abs(total - 1.0) > kMassTol)
    throw InputError("weights sum to " + std::to_string(total) + ", not 1");
}

DiscreteMeasure make_discrete(std::vector<Outcome> points,
                              std::vector<double> weights) {
  if (points.size() != weights.size())
    throw InputError("points and weights differ in length");
  if (points.empty()) throw EmptySupport("empty support");
  double total = 0.0;
  for (double w : weights) {
    if (std::isnan(w) || w < 0.0)
      throw NegativeWeight("negative weight " + std::to_string(w));
    total += w;
  }
  if (total <= 0.0) throw EmptySupport("all weights are zero");
  if (std::abs(total - 1.0) > kMassTol) {
    for (double& w : weights) w /= total;
  }
  return DiscreteMeasure(std::move(points), std::move(weights));
}

GridMeasure::GridMeasure(double lo, double hi, std::vector<double> density)
    : lo_(lo), hi_(hi), density_(std::move(density)) {
  if (!(lo_ < hi_)) throw InputError("grid requires lo < hi");
  if (density_.empty()) throw EmptySupport("grid with no cells");
  double dx = cell_width();
  double total = 0.0;
  for (double d : density_) {
    if (std::isnan(d) || d < 0.0)
      throw NegativeWeight("negative density value " + std::to_string(d));
    total += d * dx;
  }
  if (total <= 0.0) throw EmptySupport("grid density integrates to zero");
  if (std::abs(total - 1.0) > 1e-9) {
    for (double& d : density_) d /= total;
  }
}

DiscreteMeasure GridMeasure::to_discrete() const {
  std::vector<Outcome> pts;
  std::vector<double> w;
  pts.reserve(n());
  w.reserve(n());
  double dx = cell_width();
  for (std::size_t i = 0; i < n(); ++i) {
    pts.emplace_back(midpoint(i));
    w.push_back(density_[i] * dx);
  }
  return make_discrete(std::move(pts), std::move(w));
}

JointTable::JointTable(std::vector<Outcome> x_labels,
                       std::vector<Outcome> y_labels,
                       std::vector<std::vector<double>> mass)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      mass_(std::move(mass)) {
  if (x_labels_.empty() || y_labels_.empty())
    throw EmptySupport("joint table with empty label set");
  check_points_distinct(x_labels_);
  check_points_distinct(y_labels_);
  if (mass_.size() != x_labels_.size())
    throw InputError("joint table row count does not match x labels");
  double total = 0.0;
  for (const auto& row : mass_) {
    if (row.size() != y_labels_.size())
      throw InputError("joint table column count does not match y labels");
    for (double m : row) {
      if (std::isnan(m) || m < 0.0)
        throw NegativeWeight("negative joint mass " + std::to_string(m));
      total += m;
    }
  }
  if (total <= 0.0) throw EmptySupport("joint table with zero total mass");
  if (std::abs(total - 1.0) > kMassTol) {
    for (auto& row : mass_)
      for (double& m : row) m /= total;
  }
}

double JointTable::row_sum(std::size_t x) const {
  double s = 0.0;
  for (double m : mass_[x]) s += m;
  return s;
}

double JointTable::col_sum(std::size_t y) const {
  double s = 0.0;
  for (const auto& row : mass_) s += row[y];
  return s;
}

double expectation(const DiscreteMeasure& m, const OutcomeFn& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double w = m.weight(i);
    if (w == 0.0) continue;
    double v = f(m.point(i));
    if (std::isinf(v) && v > 0.0)
      return std::numeric_limits<double>::infinity();
    acc += v * w;
  }
  return acc;
}

double expectation(const GridMeasure& m, const OutcomeFn& f) {
  return expectation(m.to_discrete(), f);
}

bool same_support(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return a.points() == b.points();
}

std::vector<double> density_ratio(const DiscreteMeasure& q1,
                                  const DiscreteMeasure& q2) {
  if (!same_support(q1, q2))
    throw SupportMismatch("measures live on different supports");
  std::vector<double> ratio(q1.size());
  for (std::size_t i = 0; i < q1.size(); ++i) {
    double w1 = q1.weight(i), w2 = q2.weight(i);
    if (w2 == 0.0) {
      if (w1 > 0.0)
        throw NotAbsolutelyContinuous(
            "mass at '" + q1.point(i).to_string() +
            "' in the numerator but not in the denominator");
      ratio[i] = 0.0;
    } else {
      ratio[i] = w1 / w2;
    }
  }
  return ratio;
}

}  // namespace tilt
