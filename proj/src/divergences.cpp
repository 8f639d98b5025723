// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tilt {

namespace {

void validate_generator(const std::string& name, const RealFn& g,
                        const RealFn& g_prime) {
  if (std::abs(g(1.0)) > 1e-12)
    throw InvalidGenerator(name + ": g(1) != 0");

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(1e-3, 10.0);

  // sampled secant test for convexity
  for (int t = 0; t < 200; ++t) {
    double p[3] = {u(rng), u(rng), u(rng)};
    std::sort(p, p + 3);
    double a = p[0], b = p[1], c = p[2];
    if (c - a < 1e-9) continue;
    double chord = ((c - b) * g(a) + (b - a) * g(c)) / (c - a);
    if (g(b) > chord + 1e-9)
      throw InvalidGenerator(name + ": secant convexity test failed");
  }

  // g_prime must match central differences of g
  std::uniform_real_distribution<double> ux(0.1, 10.0);
  const double eps = 1e-5;
  for (int t = 0; t < 100; ++t) {
    double x = ux(rng);
    double fd = (g(x + eps) - g(x - eps)) / (2.0 * eps);
    if (std::abs(g_prime(x) - fd) > 1e-5)
      throw InvalidGenerator(name + ": g_prime disagrees with g");
  }
}

}  // namespace

GDivergenceGenerator::GDivergenceGenerator(std::string name, RealFn g,
                                           RealFn g_prime, double g_at_zero)
    : name_(std::move(name)),
      g_(std::move(g)),
      g_prime_(std::move(g_prime)),
      g_at_zero_(g_at_zero) {
  validate_generator(name_, g_, g_prime_);
}

const GDivergenceGenerator& kl_generator() {
  static const GDivergenceGenerator gen(
      "kl", [](double x) { return x * std::log(x); },
      [](double x) { return std::log(x) + 1.0; }, 0.0);
  return gen;
}

const GDivergenceGenerator& chi2_generator() {
  static const GDivergenceGenerator gen(
      "chi2", [](double x) { return (x - 1.0) * (x - 1.0); },
      [](double x) { return 2.0 * (x - 1.0); }, 1.0);
  return gen;
}

const GDivergenceGenerator& hellinger_generator() {
  static const GDivergenceGenerator gen(
      "hellinger",
      [](double x) {
        double s = std::sqrt(x) - 1.0;
        return s * s;
      },
      [](double x) { return 1.0 - 1.0 / std::sqrt(x); }, 1.0);
  return gen;
}

const GDivergenceGenerator& generator_from_name(const std::string& name) {
  if (name == "kl") return kl_generator();
  if (name == "chi2") return chi2_generator();
  if (name == "hellinger") return hellinger_generator();
  throw InputError("unknown generator '" + name +
                   "' (expected kl, chi2 or hellinger)");
}

double divergence(const GDivergenceGenerator& gen, const DiscreteMeasure& q1,
                  const DiscreteMeasure& q2) {
  std::vector<double> ratio = density_ratio(q1, q2);
  double acc = 0.0;
  for (std::size_t i = 0; i < q2.size(); ++i) {
    double w2 = q2.weight(i);
    if (w2 == 0.0) continue;
    double term = (q1.weight(i) == 0.0) ? gen.g_at_zero() : gen.g(ratio[i]);
    if (std::isinf(term)) return std::numeric_limits<double>::infinity();
    acc += term * w2;
  }
  return acc;
}

double kl(const DiscreteMeasure& q1, const DiscreteMeasure& q2) {
  std::vector<double> ratio = density_ratio(q1, q2);
  double acc = 0.0;
  for (std::size_t i = 0; i < q1.size(); ++i) {
    double w1 = q1.weight(i);
    if (w1 == 0.0) continue;
    acc += w1 * std::log(ratio[i]);
  }
  return acc;
}

}  // namespace tilt
