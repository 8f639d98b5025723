// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_OPTIMIZER_HPP
#define TILT_OPTIMIZER_HPP

#include "tilt/update.hpp"

namespace tilt {

struct SimplexOptions {
  int max_iters = 10000;
  double tol = 1e-10;  // sup-norm change per iterate
  double step0 = 1.0;
};

/// Thrown when the iteration budget runs out; carries the last iterate.
struct NoConvergence : Error {
  NoConvergence(std::string msg, UpdateReport last)
      : Error(std::move(msg)), last_iterate(std::move(last)) {}
  UpdateReport last_iterate;
};

/// Numerical argmin of the cumulative loss over probability measures
/// absolutely continuous w.r.t. the prior, for an arbitrary generator.
/// Entropic mirror descent with backtracking; iterates stay strictly
/// inside the simplex. Points with infinite loss or zero prior weight are
/// pinned to 0 before optimizing.
UpdateReport minimize_simplex(const DiscreteMeasure& prior,
                              const LossFunction& h,
                              const GDivergenceGenerator& gen,
                              const SimplexOptions& opts = {});

/// Unique stationary point p1 of the two-point cumulative loss: solves
///   g'(p1/p0) - g'((1-p1)/(1-p0)) = delta_h
/// by bisection on (eps, 1-eps). For KL this is sigmoid(logit(p0)+delta_h).
/// Throws RootNotBracketed when the generator's slope is too bounded for
/// the given delta_h.
double two_point_stationary(double p0, double delta_h,
                            const GDivergenceGenerator& gen);

/// KL projection onto { lam : E_lam[moment] >= bound }. Inactive
/// constraint returns the prior; otherwise the exponential-family tilt
/// lam_beta proportional to e^{beta*moment} * prior with beta chosen so the
/// achieved moment equals the bound within 1e-10. bound strictly above the
/// support maximum of the moment is Infeasible; bound exactly at the
/// maximum returns the prior restricted to the argmax set, flagged
/// degenerate.
UpdateReport kl_constraint_project(const DiscreteMeasure& prior,
                                   const OutcomeFn& moment, double bound);

}  // namespace tilt

#endif
