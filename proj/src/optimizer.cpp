// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tilt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double logsumexp_tilt(const std::vector<double>& prior_w,
                      const std::vector<double>& exponents,
                      std::vector<double>* out_weights) {
  // ln sum w_i e^{x_i}, shifting by the max exponent over positive weights
  double shift = -kInf;
  for (std::size_t i = 0; i < prior_w.size(); ++i)
    if (prior_w[i] > 0.0) shift = std::max(shift, exponents[i]);
  double z = 0.0;
  std::vector<double> w(prior_w.size(), 0.0);
  for (std::size_t i = 0; i < prior_w.size(); ++i) {
    if (prior_w[i] == 0.0) continue;
    w[i] = prior_w[i] * std::exp(exponents[i] - shift);
    z += w[i];
  }
  if (out_weights) {
    for (double& wi : w) wi /= z;
    *out_weights = std::move(w);
  }
  return std::log(z) + shift;
}
}  // namespace

UpdateReport minimize_simplex(const DiscreteMeasure& prior,
                              const LossFunction& h,
                              const GDivergenceGenerator& gen,
                              const SimplexOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_iters < 1)
    throw InputError("invalid simplex options");

  const std::size_t n = prior.size();
  std::vector<double> losses(n);
  for (std::size_t i = 0; i < n; ++i) losses[i] = h(prior.point(i));

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (prior.weight(i) > 0.0 && std::isfinite(losses[i])) active.push_back(i);
  if (active.empty())
    throw NotIntegrable("loss is infinite on the entire prior support");

  // constant contribution of prior-positive points pinned to zero
  double pinned = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (prior.weight(i) > 0.0 && !std::isfinite(losses[i]))
      pinned += prior.weight(i) * gen.g_at_zero();

  const std::size_t m = active.size();
  std::vector<double> p(m), hv(m), lam(m);
  for (std::size_t a = 0; a < m; ++a) {
    p[a] = prior.weight(active[a]);
    hv[a] = losses[active[a]];
  }
  double psum = 0.0;
  for (double pa : p) psum += pa;
  for (std::size_t a = 0; a < m; ++a) lam[a] = p[a] / psum;

  auto objective = [&](const std::vector<double>& l) {
    double acc = pinned;
    for (std::size_t a = 0; a < m; ++a) {
      acc += l[a] * hv[a];
      acc += (l[a] == 0.0) ? p[a] * gen.g_at_zero() : p[a] * gen.g(l[a] / p[a]);
    }
    return acc;
  };

  double obj = objective(lam);
  double eta = opts.step0;
  std::vector<double> grad(m), trial(m), prev_dir(m, 0.0);
  bool converged = false;

  for (int iter = 0; iter < opts.max_iters && !converged; ++iter) {
    double gmin = kInf, gmax = -kInf;
    for (std::size_t a = 0; a < m; ++a) {
      grad[a] = hv[a] + gen.g_prime(lam[a] / p[a]);
      gmin = std::min(gmin, grad[a]);
      gmax = std::max(gmax, grad[a]);
    }

    // keep the multiplicative factors away from underflow so iterates stay
    // strictly inside the simplex
    double step_cap = (gmax > gmin) ? 500.0 / (gmax - gmin) : opts.step0;
    double trial_obj = kInf;
    double step = std::min(eta, step_cap);
    while (true) {
      double z = 0.0;
      for (std::size_t a = 0; a < m; ++a) {
        trial[a] = lam[a] * std::exp(-step * (grad[a] - gmin));
        z += trial[a];
      }
      for (double& t : trial) t /= z;
      trial_obj = objective(trial);
      if (trial_obj <= obj + 1e-15 || step < 1e-12) break;
      step *= 0.5;
    }

    double change = 0.0, swing = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      double dir = trial[a] - lam[a];
      change = std::max(change, std::abs(dir));
      swing += dir * prev_dir[a];
      prev_dir[a] = dir;
    }
    lam.swap(trial);
    obj = trial_obj;
    // direction reversal means the step overshoots the minimizer: damp it;
    // otherwise grow toward faster contraction
    eta = (swing < 0.0) ? step * 0.5 : step * 2.0;
    if (change <= opts.tol) converged = true;
  }

  std::vector<double> full(n, 0.0);
  for (std::size_t a = 0; a < m; ++a) full[active[a]] = lam[a];
  DiscreteMeasure post = make_discrete(prior.points(), std::move(full));
  std::vector<double> neg_losses(n);
  for (std::size_t i = 0; i < n; ++i)
    neg_losses[i] = std::isfinite(losses[i]) ? -losses[i] : -kInf;
  double log_norm = logsumexp_tilt(prior.weights(), neg_losses, nullptr);
  double achieved = cumulative_loss(h, post, prior, gen);
  UpdateReport report{std::move(post), log_norm, achieved};
  if (!converged)
    throw NoConvergence("simplex minimization hit the iteration limit",
                        std::move(report));
  return report;
}

double two_point_stationary(double p0, double delta_h,
                            const GDivergenceGenerator& gen) {
  if (!(p0 > 0.0 && p0 < 1.0)) throw InputError("p0 must lie in (0,1)");
  if (!std::isfinite(delta_h)) throw InputError("delta_h must be finite");

  auto F = [&](double p) {
    return gen.g_prime(p / p0) - gen.g_prime((1.0 - p) / (1.0 - p0)) - delta_h;
  };
  const double eps = 1e-14;
  double lo = eps, hi = 1.0 - eps;
  double flo = F(lo), fhi = F(hi);
  if (!(flo < 0.0 && fhi > 0.0))
    throw RootNotBracketed(
        "stationarity equation has no sign change on (0,1) for delta_h = " +
        std::to_string(delta_h));
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    double mid = 0.5 * (lo + hi);
    if (F(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

UpdateReport kl_constraint_project(const DiscreteMeasure& prior,
                                   const OutcomeFn& moment, double bound) {
  const std::size_t n = prior.size();
  std::vector<double> v(n, 0.0);
  double maxval = -kInf;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = moment(prior.point(i));
    if (prior.weight(i) > 0.0) {
      if (!std::isfinite(v[i]))
        throw InputError("moment must be finite on the prior support");
      maxval = std::max(maxval, v[i]);
    }
  }

  const double degen_tol = 1e-12 * (1.0 + std::abs(maxval));
  if (bound > maxval + degen_tol)
    throw Infeasible("bound " + std::to_string(bound) +
                     " exceeds the support maximum " + std::to_string(maxval));

  if (std::abs(bound - maxval) <= degen_tol) {
    // only point masses on the argmax set are feasible
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (prior.weight(i) > 0.0 && v[i] >= maxval - degen_tol)
        w[i] = prior.weight(i);
    DiscreteMeasure post = make_discrete(prior.points(), std::move(w));
    double achieved = kl(post, prior);
    UpdateReport rep{std::move(post), 0.0, achieved};
    rep.multiplier = kInf;
    rep.degenerate = true;
    return rep;
  }

  auto mean_at = [&](double beta, std::vector<double>* w, double* log_norm) {
    std::vector<double> expo(n);
    for (std::size_t i = 0; i < n; ++i) expo[i] = beta * v[i];
    std::vector<double> weights;
    double ln = logsumexp_tilt(prior.weights(), expo, &weights);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += weights[i] * v[i];
    if (w) *w = std::move(weights);
    if (log_norm) *log_norm = ln;
    return mean;
  };

  if (expectation(prior, moment) >= bound) {
    UpdateReport rep{prior, 0.0, 0.0};
    rep.multiplier = 0.0;
    return rep;
  }

  double hi = 1.0;
  while (mean_at(hi, nullptr, nullptr) < bound) {
    hi *= 2.0;
    if (hi > 1e18)
      throw Infeasible("multiplier search diverged; bound too close to the "
                       "support maximum");
  }
  double lo = 0.0, beta = hi;
  for (int it = 0; it < 200; ++it) {
    beta = 0.5 * (lo + hi);
    double mean = mean_at(beta, nullptr, nullptr);
    if (std::abs(mean - bound) <= 1e-12) break;
    if (mean < bound)
      lo = beta;
    else
      hi = beta;
  }

  std::vector<double> weights;
  double log_norm = 0.0;
  mean_at(beta, &weights, &log_norm);
  DiscreteMeasure post = make_discrete(prior.points(), std::move(weights));
  double achieved = kl(post, prior);
  UpdateReport rep{std::move(post), log_norm, achieved};
  rep.multiplier = beta;
  return rep;
}

}  // namespace tilt
