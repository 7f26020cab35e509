#include <doctest.h>

#include <cmath>

#include "sswkit/dynamics.hpp"
#include "sswkit/problems.hpp"

using namespace ssw;

TEST_CASE("em_step deterministic limit") {
  const StepParams params{0.1, 0.0};
  const auto x = em_step({1.0, 1.0}, {1.0, 1.0}, params, {0.0, 0.0});
  CHECK(x[0] == doctest::Approx(0.9));
  CHECK(x[1] == doctest::Approx(0.9));
}

TEST_CASE("em_step with zero drift is the exact noise increment") {
  const StepParams params{0.04, 0.15};
  const std::vector<double> eta{0.7, -1.2};
  const auto x = em_step({1.0, 2.0}, {0.0, 0.0}, params, eta);
  const double scale = 0.15 * std::sqrt(0.04);
  CHECK(x[0] == 1.0 + scale * eta[0]);
  CHECK(x[1] == 2.0 + scale * eta[1]);
}

TEST_CASE("em_step increment variance matches eps^2 * sigma") {
  const StepParams params{0.04, 0.15};
  RngStream rng(77, 0);
  const std::size_t draws = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto x = em_step({0.0}, {0.0}, params, {rng.next_gaussian()});
    sum += x[0];
    sum_sq += x[0] * x[0];
  }
  const double mean = sum / draws;
  const double var = sum_sq / draws - mean * mean;
  CHECK(std::abs(var - 9e-4) < 0.02 * 9e-4);
}

TEST_CASE("em_step is affine in eta") {
  const StepParams params{0.3, 0.7};
  const DecisionVector x{0.4, -0.2};
  const std::vector<double> q{1.0, 2.0};
  const std::vector<double> a{0.5, -0.25}, b{1.5, 2.0};
  const auto xa = em_step(x, q, params, a);
  const auto xab = em_step(x, q, params, {a[0] + b[0], a[1] + b[1]});
  const double scale = params.eps * std::sqrt(params.sigma);
  CHECK(xab[0] == doctest::Approx(xa[0] + scale * b[0]).epsilon(1e-14));
  CHECK(xab[1] == doctest::Approx(xa[1] + scale * b[1]).epsilon(1e-14));
}

TEST_CASE("project_box clamps, fixes the boundary, and is idempotent") {
  const BoxBounds bounds({0.0, 0.0}, {1.0, 1.0});
  CHECK(project_box({0.5, 0.25}, bounds) == DecisionVector{0.5, 0.25});
  CHECK(project_box({-1.0, 5.0}, bounds) == DecisionVector{0.0, 1.0});
  CHECK(project_box({0.0, 1.0}, bounds) == DecisionVector{0.0, 1.0});

  RngStream rng(3, 0);
  for (int trial = 0; trial < 100; ++trial) {
    DecisionVector x{rng.next_uniform_in(-3, 3), rng.next_uniform_in(-3, 3)};
    DecisionVector y{rng.next_uniform_in(-3, 3), rng.next_uniform_in(-3, 3)};
    const auto px = project_box(x, bounds);
    CHECK(project_box(px, bounds) == px);
    // Non-expansive in max norm.
    const auto py = project_box(y, bounds);
    double before = 0.0, after = 0.0;
    for (int i = 0; i < 2; ++i) {
      before = std::max(before, std::abs(x[i] - y[i]));
      after = std::max(after, std::abs(px[i] - py[i]));
    }
    CHECK(after <= before + 1e-15);
  }
}

TEST_CASE("deterministic_flow on a single-objective quadratic is the linear recursion") {
  QuadraticFamilySpec spec;
  spec.centers = {DecisionVector{0.0, 0.0}};
  spec.scales = {0.5};  // f = ||x||^2/2, q = x
  spec.bounds = BoxBounds({-5, -5}, {5, 5});
  const Problem p = make_quadratic(spec);
  const Trajectory traj = deterministic_flow(p, {1.0, 0.0}, 0.1, 20);
  REQUIRE(traj.states.size() == 21);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    CHECK(traj.states[k][0] == doctest::Approx(std::pow(0.9, k)).epsilon(1e-9));
    CHECK(traj.states[k][1] == doctest::Approx(0.0));
  }
}

TEST_CASE("deterministic_flow is constant at a stationary point") {
  const Problem p = make_quad2(2);  // q(0) = 0 by symmetry
  const Trajectory traj = deterministic_flow(p, {0.0, 0.0}, 0.05, 10);
  for (const auto& s : traj.states) {
    CHECK(std::abs(s[0]) < 1e-9);
    CHECK(std::abs(s[1]) < 1e-9);
  }
}

TEST_CASE("deterministic_flow descends every objective on a convex pair") {
  const Problem p = make_quad2(3);
  const Trajectory traj = deterministic_flow(p, {2.5, 1.5, -2.0}, 0.02, 200);
  ObjectiveVector prev = p.evaluate(traj.states.front());
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const ObjectiveVector cur = p.evaluate(traj.states[k]);
    for (std::size_t i = 0; i < cur.size(); ++i) CHECK(cur[i] <= prev[i] + 1e-9);
    prev = cur;
  }
}

TEST_CASE("em_step with eps = 0 equals one deterministic flow step") {
  QuadraticFamilySpec spec;
  spec.centers = {DecisionVector{0.0}};
  spec.scales = {0.5};
  spec.bounds = BoxBounds({-5}, {5});
  const Problem p = make_quadratic(spec);
  const DecisionVector x0{1.7};
  const Trajectory traj = deterministic_flow(p, x0, 0.1, 1);
  EvaluationBudget budget(100);
  const auto q = p.analytic_jacobian(x0);
  const auto stepped = em_step(x0, {q.at(0, 0)}, StepParams{0.1, 0.0}, {0.0});
  CHECK(stepped[0] == doctest::Approx(traj.states[1][0]).epsilon(1e-9));
}

TEST_CASE("overflowing trajectory raises with the partial path attached") {
  QuadraticFamilySpec spec;
  spec.centers = {DecisionVector{0.0}};
  spec.scales = {1e150};  // huge curvature: sigma far above the stability limit
  spec.bounds = BoxBounds({-5}, {5});
  const Problem p = make_quadratic(spec);
  try {
    deterministic_flow(p, {1.0}, 10.0, 50);
    FAIL("expected overflow");
  } catch (const TrajectoryOverflowError& e) {
    CHECK(e.partial.states.size() >= 1);
    CHECK(e.partial.states.front() == DecisionVector{1.0});
  }
}
