#include <doctest.h>

#include <cmath>
#include <limits>

#include "sswkit/descent.hpp"
#include "sswkit/problems.hpp"

using namespace ssw;

namespace {

Problem linear_problem(std::vector<double> c) {
  Problem p;
  p.name = "linear";
  p.n = c.size();
  p.m = 1;
  p.evaluate = [c](const DecisionVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += c[i] * x[i];
    return ObjectiveVector{s};
  };
  return p;
}

// Test-only oracle: exhaustive grid over the simplex at the given resolution.
double grid_min_norm_sq(const Jacobian& jac, int resolution) {
  std::vector<int> counts(jac.m, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> q(jac.n);

  std::function<void(std::size_t, int)> recurse = [&](std::size_t idx, int remaining) {
    if (idx + 1 == jac.m) {
      counts[idx] = remaining;
      std::fill(q.begin(), q.end(), 0.0);
      for (std::size_t i = 0; i < jac.m; ++i) {
        const double a = static_cast<double>(counts[i]) / resolution;
        for (std::size_t j = 0; j < jac.n; ++j) q[j] += a * jac.at(i, j);
      }
      best = std::min(best, norm2_sq(q));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[idx] = c;
      recurse(idx + 1, remaining - c);
    }
  };
  recurse(0, resolution);
  return best;
}

}  // namespace

TEST_CASE("fd_jacobian is exact on affine objectives") {
  Problem p = linear_problem({3.0, -2.0});
  EvaluationBudget budget(100);
  const Jacobian jac = fd_jacobian(p, {0.7, -1.3}, 0.1, budget);
  CHECK(jac.at(0, 0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(jac.at(0, 1) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(budget.used() == 4);
}

TEST_CASE("fd_jacobian matches the analytic derivative of a quadratic") {
  Problem p;
  p.n = 1;
  p.m = 1;
  p.evaluate = [](const DecisionVector& x) { return ObjectiveVector{x[0] * x[0]}; };
  EvaluationBudget budget(10);
  const Jacobian jac = fd_jacobian(p, {1.0}, 1e-5, budget);
  CHECK(std::abs(jac.at(0, 0) - 2.0) < 1e-8);
}

TEST_CASE("fd_jacobian rejects insufficient budget before doing work") {
  Problem p = linear_problem({1.0, 1.0, 1.0});
  EvaluationBudget budget(5);  // need 2n = 6
  CHECK_THROWS_AS(fd_jacobian(p, {0, 0, 0}, 1e-6, budget), BudgetExceededError);
  CHECK(budget.used() == 0);
}

TEST_CASE("solve_min_norm closed cases") {
  SUBCASE("single objective returns the gradient") {
    Jacobian jac(1, 2);
    jac.at(0, 0) = 3.0;
    jac.at(0, 1) = -1.0;
    const auto dir = solve_min_norm(jac);
    CHECK(dir.weights.alpha == std::vector<double>{1.0});
    CHECK(dir.q == std::vector<double>{3.0, -1.0});
  }
  SUBCASE("opposite equal-norm gradients cancel") {
    Jacobian jac(2, 2);
    jac.at(0, 0) = 1.0;
    jac.at(1, 0) = -1.0;
    const auto dir = solve_min_norm(jac);
    CHECK(dir.norm_sq == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dir.weights.alpha[0] == doctest::Approx(0.5));
  }
  SUBCASE("orthonormal gradients give the uniform combination") {
    Jacobian jac(2, 2);
    jac.at(0, 0) = 1.0;
    jac.at(1, 1) = 1.0;
    const auto dir = solve_min_norm(jac);
    CHECK(dir.weights.alpha[0] == doctest::Approx(0.5));
    CHECK(dir.q[0] == doctest::Approx(0.5));
    CHECK(dir.q[1] == doctest::Approx(0.5));
    CHECK(dir.norm_sq == doctest::Approx(0.5));
  }
  SUBCASE("collinear gradients pick the short endpoint") {
    Jacobian jac(2, 2);
    jac.at(0, 0) = 1.0;
    jac.at(1, 0) = 3.0;
    const auto dir = solve_min_norm(jac);
    CHECK(dir.weights.alpha[0] == doctest::Approx(1.0));
    CHECK(dir.q[0] == doctest::Approx(1.0));
    CHECK(dir.q[1] == doctest::Approx(0.0));
  }
  SUBCASE("all-zero Jacobian returns uniform weights and q = 0") {
    Jacobian jac(3, 2);
    const auto dir = solve_min_norm(jac);
    CHECK(dir.norm_sq == 0.0);
    for (double a : dir.weights.alpha) CHECK(a == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("non-finite Jacobian is rejected") {
    Jacobian jac(2, 2);
    jac.at(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(solve_min_norm(jac), std::invalid_argument);
  }
}

TEST_CASE("solve_min_norm satisfies simplex feasibility and the variational inequality") {
  RngStream rng(99, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + rng.next_u64() % 4;
    const std::size_t n = 2 + rng.next_u64() % 4;
    Jacobian jac(m, n);
    for (double& v : jac.data) v = rng.next_uniform_in(-1.0, 1.0);
    const auto dir = solve_min_norm(jac);

    double sum = 0.0;
    for (double a : dir.weights.alpha) {
      CHECK(a >= 0.0);
      sum += a;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);

    // <g_i, q> >= ||q||^2 up to tolerance for every row.
    for (std::size_t i = 0; i < m; ++i) {
      double gi_q = 0.0;
      for (std::size_t j = 0; j < n; ++j) gi_q += jac.at(i, j) * dir.q[j];
      CHECK(gi_q >= dir.norm_sq - 1e-6 * (1.0 + dir.norm_sq));
    }
  }
}

TEST_CASE("solve_min_norm matches the brute-force simplex grid on small instances") {
  RngStream rng(123, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 2 + rng.next_u64() % 2;  // 2 or 3
    Jacobian jac(m, 3);
    for (double& v : jac.data) v = rng.next_uniform_in(-1.0, 1.0);
    const auto dir = solve_min_norm(jac);
    const double grid_best = grid_min_norm_sq(jac, m == 2 ? 200 : 60);
    CHECK(dir.norm_sq <= grid_best + 1e-3);
  }
}

TEST_CASE("solve_min_norm scaling equivariance") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 50; ++trial) {
    Jacobian jac(3, 3);
    for (double& v : jac.data) v = rng.next_uniform_in(-1.0, 1.0);
    const double c = 0.1 + 5.0 * rng.next_uniform();
    Jacobian scaled = jac;
    for (double& v : scaled.data) v *= c;
    const auto base = solve_min_norm(jac);
    const auto big = solve_min_norm(scaled);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(big.q[j] == doctest::Approx(c * base.q[j]).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("descent_direction composes Jacobian and QP") {
  SUBCASE("single-objective quadratic points along the gradient") {
    QuadraticFamilySpec spec;
    spec.centers = {DecisionVector{0.0, 0.0}};
    spec.scales = {0.5};
    spec.bounds = BoxBounds({-5, -5}, {5, 5});
    const Problem p = make_quadratic(spec);  // f = ||x||^2 / 2, grad = x
    EvaluationBudget budget(100);
    const auto dir = descent_direction(p, {2.0, 0.0}, 1e-6, budget, false);
    CHECK(dir.q[0] == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(dir.q[1] == doctest::Approx(0.0).epsilon(1e-6));
  }
  SUBCASE("symmetric bi-objective cancels at the midpoint") {
    const Problem p = make_quad2(2);
    EvaluationBudget budget(100);
    const auto dir = descent_direction(p, {0.0, 0.0}, 1e-6, budget, true);
    CHECK(std::sqrt(dir.norm_sq) <= 1e-8);
  }
  SUBCASE("analytic Jacobian consumes no budget") {
    const Problem p = make_quad2(2);
    EvaluationBudget budget(100);
    descent_direction(p, {0.3, 0.4}, 1e-6, budget, true);
    CHECK(budget.used() == 0);
    descent_direction(p, {0.3, 0.4}, 1e-6, budget, false);
    CHECK(budget.used() == 4);
  }
}

TEST_CASE("default_fd_step follows the max rule") {
  CHECK(default_fd_step({0.0, 0.0}) == doctest::Approx(1e-6));
  CHECK(default_fd_step({2e3, -5e6}) == doctest::Approx(5.0));
}
