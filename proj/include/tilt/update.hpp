// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_UPDATE_HPP
#define TILT_UPDATE_HPP

#include <optional>

#include "tilt/divergences.hpp"
#include "tilt/losses.hpp"
#include "tilt/measures.hpp"

namespace tilt {

/// Result of an update: the posterior plus diagnostics. log_normalizer is
/// ln of the prior integral of e^{-h}; cumulative_loss_at_posterior is the
/// achieved objective value (equal to -log_normalizer for the exact tilt).
struct UpdateReport {
  DiscreteMeasure posterior;
  double log_normalizer;
  double cumulative_loss_at_posterior;
  bool integrable = true;
  std::optional<double> multiplier;  // Lagrange multiplier, when applicable
  bool degenerate = false;           // point-mass constraint projection
};

struct GridUpdateReport {
  GridMeasure posterior;
  double log_normalizer;
  double cumulative_loss_at_posterior;
  bool integrable = true;
};

/// The closed-form update: posterior weight proportional to w_i e^{-h(y_i)}.
/// Computed in log space with a min-finite-loss shift; points with infinite
/// loss get weight exactly 0. Throws NotIntegrable when no positive-weight
/// point has finite loss.
UpdateReport tilt(const DiscreteMeasure& prior, const LossFunction& h);
GridUpdateReport tilt(const GridMeasure& prior, const LossFunction& h);

/// Row-normalized conditional distribution of y given the x at x_index.
DiscreteMeasure conditional_from_joint(const JointTable& joint,
                                       std::size_t x_index);

/// (f_X, f_Y) as measures over the x and y labels. Zero entries allowed.
std::pair<DiscreteMeasure, DiscreteMeasure> marginals(const JointTable& joint);

/// The objective the update minimizes: E_lam[h] + D_g(lam, prior).
double cumulative_loss(const LossFunction& h, const DiscreteMeasure& lam,
                       const DiscreteMeasure& prior,
                       const GDivergenceGenerator& gen);

}  // namespace tilt

#endif
