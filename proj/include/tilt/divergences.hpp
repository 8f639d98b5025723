// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TILT_DIVERGENCES_HPP
#define TILT_DIVERGENCES_HPP

#include <functional>
#include <string>

#include "tilt/measures.hpp"

namespace tilt {

using RealFn = std::function<double(double)>;

/// Convex generator g on (0,inf) with g(1)=0, together with its derivative
/// and the limit of g at 0+. Validated at construction: g(1)=0, sampled
/// secant convexity, and finite-difference agreement of g_prime with g.
class GDivergenceGenerator {
 public:
  GDivergenceGenerator(std::string name, RealFn g, RealFn g_prime,
                       double g_at_zero);

  const std::string& name() const { return name_; }
  double g(double x) const { return g_(x); }
  double g_prime(double x) const { return g_prime_(x); }
  double g_at_zero() const { return g_at_zero_; }

 private:
  std::string name_;
  RealFn g_, g_prime_;
  double g_at_zero_;
};

/// Shipped instances.
const GDivergenceGenerator& kl_generator();         // g(x) = x ln x
const GDivergenceGenerator& chi2_generator();       // g(x) = (x-1)^2
const GDivergenceGenerator& hellinger_generator();  // g(x) = (sqrt(x)-1)^2

/// Lookup by the CLI/JSON name: "kl" | "chi2" | "hellinger".
const GDivergenceGenerator& generator_from_name(const std::string& name);

/// D_g(q1, q2) = sum g(w1/w2) w2, with g_at_zero standing in for ratio-0
/// terms and zero-mass q2 points contributing nothing.
double divergence(const GDivergenceGenerator& gen, const DiscreteMeasure& q1,
                  const DiscreteMeasure& q2);

/// Kullback-Leibler divergence in the q1-integral form, 0 ln 0 = 0.
double kl(const DiscreteMeasure& q1, const DiscreteMeasure& q2);

}  // namespace tilt

#endif
