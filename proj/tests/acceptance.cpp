// Apache License, Version 2.0, refer to LICENSE.txt

// End-to-end acceptance gate. Each criterion prints one pass/fail line;
// the exit code is the number of failures.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "tilt/coherence.hpp"
#include "tilt/io.hpp"
#include "tilt/optimizer.hpp"
#include "tilt/update.hpp"

using namespace tilt;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
int g_failures = 0;

void report(const char* name, bool ok, double worst) {
  std::printf("%-44s %s  (worst %.3g)\n", name, ok ? "PASS" : "FAIL", worst);
  if (!ok) ++g_failures;
}

DiscreteMeasure random_positive(std::mt19937& rng, std::size_t n,
                                double lo = 0.05) {
  std::uniform_real_distribution<double> u(lo, 1.0);
  std::vector<Outcome> pts;
  std::vector<double> w;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(static_cast<double>(i));
    w.push_back(u(rng));
  }
  return make_discrete(std::move(pts), std::move(w));
}

LossFunction random_tabular(std::mt19937& rng, const DiscreteMeasure& prior,
                            double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::map<Outcome, double> t;
  for (std::size_t i = 0; i < prior.size(); ++i)
    t.emplace(prior.point(i), u(rng));
  return tabular_loss(std::move(t));
}

// 1. restriction loss reproduces classical conditioning
void criterion_restriction() {
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 19;
    auto prior = random_positive(rng, n);
    std::set<Outcome> B;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t bsize = 1 + pick(rng) % n;
    while (B.size() < bsize) B.insert(prior.point(pick(rng)));
    double pb = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (B.count(prior.point(i))) pb += prior.weight(i);
    auto rep = tilt::tilt(prior, restriction_loss(B));
    for (std::size_t i = 0; i < n; ++i) {
      double expect = B.count(prior.point(i)) ? prior.weight(i) / pb : 0.0;
      worst = std::max(worst, std::abs(rep.posterior.weight(i) - expect));
    }
  }
  report("1 restriction = conditioning", worst <= 1e-12, worst);
}

// 2. self-information tilt equals the conditional from the joint
void criterion_bayes() {
  std::mt19937 rng(102);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_int_distribution<std::size_t> dim(2, 20);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::size_t nx = dim(rng), ny = dim(rng);
    std::vector<Outcome> xs, ys;
    for (std::size_t i = 0; i < nx; ++i) xs.emplace_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < ny; ++j) ys.emplace_back("y" + std::to_string(j));
    std::vector<std::vector<double>> mass(nx, std::vector<double>(ny));
    for (auto& row : mass)
      for (double& m : row) m = u(rng);
    JointTable joint(xs, ys, mass);
    std::size_t xi = rng() % nx;
    auto prior = marginals(joint).second;
    auto rep = tilt::tilt(prior, self_information_loss(joint, xi));
    auto exact = conditional_from_joint(joint, xi);
    for (std::size_t j = 0; j < ny; ++j)
      worst = std::max(worst,
                       std::abs(rep.posterior.weight(j) - exact.weight(j)));
  }
  report("2 Bayes recovery via self-information", worst <= 1e-12, worst);
}

// 3. numerical KL minimization against the closed-form tilt
void criterion_oracle_equivalence() {
  std::mt19937 rng(103);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 49;
    auto prior = random_positive(rng, n);
    auto h = random_tabular(rng, prior, 0.0, 10.0);
    auto num = minimize_simplex(prior, h, kl_generator());
    auto exact = tilt::tilt(prior, h);
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(num.posterior.weight(i) -
                                       exact.posterior.weight(i)));
  }
  report("3 KL minimize matches tilt", worst <= 1e-8, worst);
}

// 4. joint and sequential KL updates agree
void criterion_coherence() {
  std::mt19937 rng(104);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 2 + t % 19;
    auto prior = random_positive(rng, n);
    auto hI = random_tabular(rng, prior, 0.0, 3.0);
    auto hJ = random_tabular(rng, prior, 0.0, 3.0);
    auto res = coherence_gap(prior, hI, hJ, kl_generator());
    worst = std::max(worst, res.gap);
  }
  report("4 KL coherence", worst <= 1e-10, worst);
}

// 5. non-KL generators produce confirmed counterexamples
void criterion_incoherence() {
  double worst_gap = kInf, worst_conf = 0.0;
  for (const auto* gen : {&chi2_generator(), &hellinger_generator()}) {
    auto out = search_counterexample(*gen, 500, 1);
    worst_gap = std::min(worst_gap, out.result.gap);
    auto grid = evaluate_two_point_grid(out.instance);
    worst_conf = std::max({worst_conf,
                           std::abs(grid.p_joint - out.result.p_joint),
                           std::abs(grid.p_seq - out.result.p_seq)});
  }
  report("5 chi2/hellinger incoherence found",
         worst_gap > 1e-3 && worst_conf <= 1e-6, worst_gap);
}

// 6. stationarity equations hold at two-point minimizers
void criterion_stationarity() {
  std::mt19937 rng(106);
  std::uniform_real_distribution<double> up(0.05, 0.95), ud(-3.0, 3.0);
  double worst = 0.0;
  for (const auto* gen :
       {&kl_generator(), &chi2_generator(), &hellinger_generator()}) {
    int checked = 0;
    while (checked < 200) {
      double p0 = up(rng), dI = ud(rng), dJ = ud(rng);
      double p1, p2, ps;
      try {
        p1 = two_point_stationary(p0, dI, *gen);
        p2 = two_point_stationary(p0, dI + dJ, *gen);
        ps = two_point_stationary(p1, dJ, *gen);
      } catch (const RootNotBracketed&) {
        continue;
      }
      auto resid = [&](double p, double q, double d) {
        return std::abs(gen->g_prime(p / q) -
                        gen->g_prime((1.0 - p) / (1.0 - q)) - d);
      };
      worst = std::max({worst, resid(p1, p0, dI), resid(p2, p0, dI + dJ),
                        resid(ps, p1, dJ)});
      ++checked;
    }
  }
  report("6 stationarity residuals", worst <= 1e-8, worst);
}

// 7. the multiplicativity of the derivative separates KL
void criterion_gprime_additivity() {
  double kl_res = gprime_additivity_residual(kl_generator(), 1000, 9);
  double chi2_res = gprime_additivity_residual(chi2_generator(), 1000, 9);
  double hel_res = gprime_additivity_residual(hellinger_generator(), 1000, 9);
  report("7 g' additivity characterizes KL",
         kl_res <= 1e-10 && chi2_res >= 0.1 && hel_res >= 0.1, kl_res);
}

// 8. mean-constrained KL projection: bound attained and grid-optimal
void criterion_constraint() {
  auto prior = make_discrete({-1, 0, 1}, {1, 1, 1});
  auto id = [](const Outcome& y) { return y.numeric(); };
  auto rep = kl_constraint_project(prior, id, 0.5);
  double mean = expectation(rep.posterior, id);
  double worst = std::abs(mean - 0.5);
  double best_kl = kl(rep.posterior, prior);
  bool grid_ok = true;
  for (double a = 0.0; a <= 1.0 && grid_ok; a += 1e-3) {
    for (double b = 0.0; a + b <= 1.0; b += 1e-3) {
      double c = 1.0 - a - b;
      if (-a + c < 0.5) continue;
      auto lam = make_discrete({-1, 0, 1}, {a, b, c});
      if (kl(lam, prior) < best_kl - 1e-9) {
        grid_ok = false;
        break;
      }
    }
  }
  report("8 constraint projection optimal", worst <= 1e-10 && grid_ok, worst);
}

// 9. quadratic tilt of a discretized standard normal has variance 1/(1+2w)
void criterion_grid_normal() {
  const std::size_t n = 1001;
  const double lo = -8.0, hi = 8.0, dx = (hi - lo) / n;
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i) {
    double y = lo + (i + 0.5) * dx;
    density[i] = std::exp(-0.5 * y * y) / std::sqrt(2.0 * M_PI);
  }
  GridMeasure prior(lo, hi, std::move(density));
  auto rep = tilt::tilt(prior, quadratic_loss(0.5));
  auto disc = rep.posterior.to_discrete();
  auto id = [](const Outcome& y) { return y.numeric(); };
  double mean = expectation(disc, id);
  double var = expectation(disc, [&](const Outcome& y) {
    double d = y.numeric() - mean;
    return d * d;
  });
  double worst = std::abs(var - 0.5);
  report("9 tilted normal grid variance", worst <= 2e-3, worst);
}

}  // namespace

int main() {
  criterion_restriction();
  criterion_bayes();
  criterion_oracle_equivalence();
  criterion_coherence();
  criterion_incoherence();
  criterion_stationarity();
  criterion_gprime_additivity();
  criterion_constraint();
  criterion_grid_normal();
  if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
  return g_failures;
}
