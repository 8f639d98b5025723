// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/update.hpp"

#include <cmath>
#include <limits>

namespace tilt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

struct TiltedWeights {
  std::vector<double> weights;  // normalized
  double log_normalizer;        // ln sum w_i e^{-h_i}
};

TiltedWeights tilt_weights(const std::vector<double>& prior_w,
                           const std::vector<double>& losses) {
  double min_finite = kInf;
  for (std::size_t i = 0; i < prior_w.size(); ++i) {
    if (prior_w[i] > 0.0 && losses[i] < min_finite) min_finite = losses[i];
  }
  if (std::isinf(min_finite))
    throw NotIntegrable("loss is infinite on the entire prior support");

  std::vector<double> w(prior_w.size(), 0.0);
  double z = 0.0;
  for (std::size_t i = 0; i < prior_w.size(); ++i) {
    if (prior_w[i] == 0.0 || std::isinf(losses[i])) continue;
    w[i] = prior_w[i] * std::exp(-(losses[i] - min_finite));
    z += w[i];
  }
  for (double& wi : w) wi /= z;
  return {std::move(w), std::log(z) - min_finite};
}
}  // namespace

UpdateReport tilt(const DiscreteMeasure& prior, const LossFunction& h) {
  std::vector<double> losses(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) losses[i] = h(prior.point(i));

  TiltedWeights tw = tilt_weights(prior.weights(), losses);
  DiscreteMeasure post = make_discrete(prior.points(), std::move(tw.weights));
  double achieved = cumulative_loss(h, post, prior, kl_generator());
  return UpdateReport{std::move(post), tw.log_normalizer, achieved};
}

GridUpdateReport tilt(const GridMeasure& prior, const LossFunction& h) {
  DiscreteMeasure flat = prior.to_discrete();
  UpdateReport rep = tilt(flat, h);
  double dx = prior.cell_width();
  std::vector<double> density(prior.n());
  for (std::size_t i = 0; i < prior.n(); ++i)
    density[i] = rep.posterior.weight(i) / dx;
  return GridUpdateReport{GridMeasure(prior.lo(), prior.hi(), std::move(density)),
                          rep.log_normalizer, rep.cumulative_loss_at_posterior};
}

DiscreteMeasure conditional_from_joint(const JointTable& joint,
                                       std::size_t x_index) {
  if (x_index >= joint.x_labels().size())
    throw InputError("x index out of range");
  double fx = joint.row_sum(x_index);
  if (fx <= 0.0)
    throw ZeroMarginal("observed x value '" +
                       joint.x_labels()[x_index].to_string() +
                       "' has zero marginal mass");
  std::vector<double> w = joint.mass()[x_index];
  return make_discrete(joint.y_labels(), std::move(w));
}

std::pair<DiscreteMeasure, DiscreteMeasure> marginals(const JointTable& joint) {
  std::vector<double> fx(joint.x_labels().size());
  std::vector<double> fy(joint.y_labels().size());
  for (std::size_t x = 0; x < fx.size(); ++x) fx[x] = joint.row_sum(x);
  for (std::size_t y = 0; y < fy.size(); ++y) fy[y] = joint.col_sum(y);
  return {make_discrete(joint.x_labels(), std::move(fx)),
          make_discrete(joint.y_labels(), std::move(fy))};
}

double cumulative_loss(const LossFunction& h, const DiscreteMeasure& lam,
                       const DiscreteMeasure& prior,
                       const GDivergenceGenerator& gen) {
  double expected = expectation(lam, [&](const Outcome& y) { return h(y); });
  if (std::isinf(expected)) return kInf;
  return expected + divergence(gen, lam, prior);
}

}  // namespace tilt
