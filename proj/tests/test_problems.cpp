#include <doctest.h>

#include <cmath>

#include "sswkit/descent.hpp"
#include "sswkit/problems.hpp"

using namespace ssw;

TEST_CASE("dtlz2 analytic evaluation at the all-0.5 point") {
  const Dtlz2Spec spec{3, 10};
  const DecisionVector x(spec.n(), 0.5);
  const ObjectiveVector f = dtlz2_evaluate(spec, x);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f[2] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK(norm2_sq(f) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dtlz2 with zero position variables hits the (1,0,0) corner") {
  const Dtlz2Spec spec{3, 10};
  DecisionVector x(spec.n(), 0.5);
  x[0] = 0.0;
  x[1] = 0.0;
  const ObjectiveVector f = dtlz2_evaluate(spec, x);
  CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.0));
  CHECK(f[2] == doctest::Approx(0.0));
}

TEST_CASE("dtlz2 objectives lie on the unit sphere whenever g = 0") {
  const Dtlz2Spec spec{4, 8};
  RngStream rng(17, 0);
  for (int trial = 0; trial < 50; ++trial) {
    DecisionVector x(spec.n(), 0.5);
    for (std::size_t i = 0; i + 1 < spec.m; ++i) x[i] = rng.next_uniform();
    CHECK(norm2_sq(dtlz2_evaluate(spec, x)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dtlz2 rejects out-of-box inputs and wrong dimensions") {
  const Dtlz2Spec spec{3, 10};
  DecisionVector x(spec.n(), 0.5);
  x[3] = 2.0;
  CHECK_THROWS_AS(dtlz2_evaluate(spec, x), std::invalid_argument);
  CHECK_THROWS_AS(dtlz2_evaluate(spec, DecisionVector(3, 0.5)), std::invalid_argument);
}

TEST_CASE("dtlz2 analytic Jacobian matches finite differences") {
  for (std::size_t m : {2, 3, 5}) {
    const Dtlz2Spec spec{m, 6};
    const Problem p = make_dtlz2(spec);
    RngStream rng(31 + m, 0);
    for (int trial = 0; trial < 100; ++trial) {
      DecisionVector x(spec.n());
      for (double& xi : x) xi = rng.next_uniform_in(0.05, 0.95);
      const Jacobian analytic = dtlz2_jacobian(spec, x);
      EvaluationBudget budget(10000);
      const Jacobian fd = fd_jacobian(p, x, 1e-5, budget);
      for (std::size_t i = 0; i < analytic.m; ++i) {
        for (std::size_t j = 0; j < analytic.n; ++j) {
          CHECK(std::abs(analytic.at(i, j) - fd.at(i, j)) < 1e-5);
        }
      }
    }
  }
}

TEST_CASE("dtlz2 reference front points are on the nonnegative unit sphere") {
  const auto front = dtlz2_reference_front(3, 500, 42);
  REQUIRE(front.size() == 500);
  for (const auto& p : front) {
    CHECK(std::abs(norm2(p) - 1.0) < 1e-12);
    for (double v : p) CHECK(v >= 0.0);
  }
}

TEST_CASE("m=2 reference front covers the quarter circle near (1,0)") {
  const auto front = dtlz2_reference_front(2, 2000, 7);
  double best = 1e9;
  for (const auto& p : front) {
    best = std::min(best, std::hypot(p[0] - 1.0, p[1]));
  }
  CHECK(best < 0.05);
}

TEST_CASE("quadratic family evaluation and Jacobian") {
  QuadraticFamilySpec spec;
  spec.centers = {DecisionVector{1.0, 0.0}, DecisionVector{-1.0, 0.0}};
  spec.scales = {2.0, 0.5};
  spec.bounds = BoxBounds({-4, -4}, {4, 4});

  SUBCASE("vanishes at its center") {
    const ObjectiveVector f = quadratic_evaluate(spec, {1.0, 0.0});
    CHECK(f[0] == 0.0);
    const Jacobian jac = quadratic_jacobian(spec, {1.0, 0.0});
    CHECK(jac.at(0, 0) == 0.0);
    CHECK(jac.at(0, 1) == 0.0);
  }
  SUBCASE("gradient formula 2 c (x - a)") {
    const Jacobian jac = quadratic_jacobian(spec, {0.5, 2.0});
    CHECK(jac.at(0, 0) == doctest::Approx(2.0 * 2.0 * (0.5 - 1.0)));
    CHECK(jac.at(1, 1) == doctest::Approx(2.0 * 0.5 * 2.0));
  }
}

TEST_CASE("quad2 Pareto set is the segment between the centers") {
  const Problem p = make_quad2(2);
  EvaluationBudget budget(100000);
  // q vanishes on sampled hull points...
  for (double t : {-0.9, -0.5, 0.0, 0.4, 1.0}) {
    const auto dir = descent_direction(p, {t, 0.0}, 1e-6, budget, true);
    CHECK(std::sqrt(dir.norm_sq) <= 1e-8);
  }
  // ...and not off the segment.
  for (auto x : std::vector<DecisionVector>{{0.0, 0.5}, {2.0, 0.0}, {-1.5, -0.3}}) {
    const auto dir = descent_direction(p, x, 1e-6, budget, true);
    CHECK(std::sqrt(dir.norm_sq) > 1e-4);
  }
}

TEST_CASE("quad2 with default parameters is the canonical OU witness field") {
  // m=1, a=0, c=0.25 gives the drift q(x) = 0.5 x.
  QuadraticFamilySpec spec;
  spec.centers = {DecisionVector{0.0, 0.0}};
  spec.scales = {0.25};
  spec.bounds = BoxBounds({-10, -10}, {10, 10});
  const Jacobian jac = quadratic_jacobian(spec, {3.0, -4.0});
  CHECK(jac.at(0, 0) == doctest::Approx(1.5));
  CHECK(jac.at(0, 1) == doctest::Approx(-2.0));
}
