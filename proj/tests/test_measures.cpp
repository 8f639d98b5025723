// Apache License, Version 2.0, refer to LICENSE.txt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "tilt/measures.hpp"

using namespace tilt;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

DiscreteMeasure random_measure(std::mt19937& rng, std::size_t n,
                               bool allow_zeros = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Outcome> pts;
  std::vector<double> w;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(static_cast<double>(i));
    double wi = u(rng);
    if (allow_zeros && u(rng) < 0.2) wi = 0.0;
    w.push_back(wi);
  }
  w[0] = std::max(w[0], 1e-3);  // keep the support nonempty
  return make_discrete(std::move(pts), std::move(w));
}
}  // namespace

TEST_CASE("make_discrete normalizes symmetric weights") {
  auto m = make_discrete({"a", "b"}, {2.0, 2.0});
  CHECK(m.weight(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.weight(1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("make_discrete uniform die") {
  auto m = make_discrete({1, 2, 3, 4, 5, 6}, {1, 1, 1, 1, 1, 1});
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(m.weight(i) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("make_discrete contract violations") {
  CHECK_THROWS_AS(make_discrete({"a", "b"}, {1.0, -1.0}), NegativeWeight);
  CHECK_THROWS_AS(make_discrete({"a", "b"}, {0.0, 0.0}), EmptySupport);
  CHECK_THROWS_AS(make_discrete({}, {}), EmptySupport);
  CHECK_THROWS_AS(make_discrete({"a", "a"}, {1.0, 1.0}), DuplicatePoint);
}

TEST_CASE("make_discrete is idempotent bit-for-bit") {
  auto once = make_discrete({1, 2, 3}, {0.2, 0.5, 0.4});
  auto twice = make_discrete(once.points(), once.weights());
  for (std::size_t i = 0; i < 3; ++i) CHECK(once.weight(i) == twice.weight(i));
}

TEST_CASE("constructor outputs sum to one") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto m = random_measure(rng, 2 + t % 20, true);
    double total = 0.0;
    for (double w : m.weights()) {
      CHECK(w >= 0.0);
      total += w;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("expectation basics") {
  auto id = [](const Outcome& y) { return y.numeric(); };
  auto sym = make_discrete({-1, 0, 1}, {1, 1, 1});
  CHECK(expectation(sym, id) == doctest::Approx(0.0).epsilon(1e-15));

  auto bern = make_discrete({0, 1}, {0.25, 0.75});
  CHECK(expectation(bern, id) == doctest::Approx(0.75));

  auto two = make_discrete({1, 2}, {1, 1});
  auto f = [](const Outcome& y) { return y.numeric() == 1.0 ? kInf : 0.0; };
  CHECK(expectation(two, f) == kInf);
}

TEST_CASE("expectation ignores infinite values on zero-weight points") {
  auto m = make_discrete({1, 2}, {1.0, 0.0});
  auto f = [](const Outcome& y) { return y.numeric() == 2.0 ? kInf : 3.0; };
  CHECK(expectation(m, f) == doctest::Approx(3.0));
}

TEST_CASE("density_ratio examples") {
  auto q = make_discrete({"a", "b"}, {0.5, 0.5});
  auto r = density_ratio(q, q);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(1.0));

  auto q2 = make_discrete({"a", "b"}, {0.25, 0.75});
  r = density_ratio(q, q2);
  CHECK(r[0] == doctest::Approx(2.0));
  CHECK(r[1] == doctest::Approx(2.0 / 3.0));

  auto degen = DiscreteMeasure({"a", "b"}, {1.0, 0.0});
  CHECK_THROWS_AS(density_ratio(q, degen), NotAbsolutelyContinuous);

  auto other = make_discrete({"a", "c"}, {0.5, 0.5});
  CHECK_THROWS_AS(density_ratio(q, other), SupportMismatch);
}

TEST_CASE("change of measure: E_q2[dQ1/dQ2] = 1") {
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    auto q2 = random_measure(rng, 2 + t % 10);
    auto q1 = random_measure(rng, 2 + t % 10);
    auto ratio = density_ratio(q1, q2);
    double total = 0.0;
    for (std::size_t i = 0; i < q2.size(); ++i)
      total += ratio[i] * q2.weight(i);
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("grid measure reduces to a discrete measure on midpoints") {
  GridMeasure g(0.0, 1.0, {1.0, 3.0});  // normalizes to densities 0.5, 1.5
  CHECK(g.cell_width() == doctest::Approx(0.5));
  CHECK(g.midpoint(0) == doctest::Approx(0.25));
  CHECK(g.midpoint(1) == doctest::Approx(0.75));
  auto d = g.to_discrete();
  CHECK(d.weight(0) == doctest::Approx(0.25));
  CHECK(d.weight(1) == doctest::Approx(0.75));

  CHECK_THROWS_AS(GridMeasure(1.0, 0.0, {1.0}), InputError);
  CHECK_THROWS_AS(GridMeasure(0.0, 1.0, {}), EmptySupport);
}

TEST_CASE("joint table normalizes and sums") {
  JointTable j({"x0", "x1"}, {"y0", "y1"}, {{0.1, 0.2}, {0.3, 0.4}});
  CHECK(j.row_sum(0) == doctest::Approx(0.3));
  CHECK(j.row_sum(1) == doctest::Approx(0.7));
  CHECK(j.col_sum(0) == doctest::Approx(0.4));
  CHECK(j.col_sum(1) == doctest::Approx(0.6));
}
