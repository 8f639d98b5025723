// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_MEASURES_HPP
#define TILT_MEASURES_HPP

#include <functional>
#include <vector>

#include "tilt/outcome.hpp"

namespace tilt {

/// A probability measure with finite support. Weights are nonnegative, sum
/// to 1 within 1e-12 and points are pairwise distinct. Zero-weight points
/// are kept: absolute-continuity checks need the full support visible.
/// Immutable after construction.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Outcome> points, std::vector<double> weights);

  const std::vector<Outcome>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  const Outcome& point(std::size_t i) const { return points_[i]; }

 private:
  std::vector<Outcome> points_;
  std::vector<double> weights_;
};

/// Density on a uniform grid over [lo, hi], stored at cell midpoints.
/// Mass is computed by the midpoint rule; reducible to a DiscreteMeasure
/// on the midpoints.
class GridMeasure {
 public:
  GridMeasure(double lo, double hi, std::vector<double> density);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t n() const { return density_.size(); }
  double cell_width() const { return (hi_ - lo_) / static_cast<double>(n()); }
  double midpoint(std::size_t i) const {
    return lo_ + (static_cast<double>(i) + 0.5) * cell_width();
  }
  const std::vector<double>& density() const { return density_; }

  DiscreteMeasure to_discrete() const;

 private:
  double lo_, hi_;
  std::vector<double> density_;
};

/// Joint mass table over a product of finite label sets; rows are x,
/// columns are y. Total mass 1 within 1e-12 after construction.
class JointTable {
 public:
  JointTable(std::vector<Outcome> x_labels, std::vector<Outcome> y_labels,
             std::vector<std::vector<double>> mass);

  const std::vector<Outcome>& x_labels() const { return x_labels_; }
  const std::vector<Outcome>& y_labels() const { return y_labels_; }
  const std::vector<std::vector<double>>& mass() const { return mass_; }
  double mass_at(std::size_t x, std::size_t y) const { return mass_[x][y]; }
  double row_sum(std::size_t x) const;
  double col_sum(std::size_t y) const;

 private:
  std::vector<Outcome> x_labels_, y_labels_;
  std::vector<std::vector<double>> mass_;
};

/// Normalizing constructor: divides the weights by their sum. Already
/// normalized input is preserved bit-for-bit, so normalization is
/// idempotent.
DiscreteMeasure make_discrete(std::vector<Outcome> points,
                              std::vector<double> weights);

using OutcomeFn = std::function<double(const Outcome&)>;

/// Expected value of f; +infinity as soon as a positive-weight point maps
/// to +infinity.
double expectation(const DiscreteMeasure& m, const OutcomeFn& f);
double expectation(const GridMeasure& m, const OutcomeFn& f);

/// Pointwise dQ1/dQ2 on a shared support. Throws NotAbsolutelyContinuous
/// if q1 carries mass where q2 does not.
std::vector<double> density_ratio(const DiscreteMeasure& q1,
                                  const DiscreteMeasure& q2);

bool same_support(const DiscreteMeasure& a, const DiscreteMeasure& b);

}  // namespace tilt

#endif
