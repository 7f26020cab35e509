#include "sswkit/descent.hpp"

#include <algorithm>
#include <cmath>

namespace ssw {

double default_fd_step(const DecisionVector& x) {
  double max_abs = 0.0;
  for (double xi : x) max_abs = std::max(max_abs, std::abs(xi));
  return std::max(1e-6, 1e-6 * max_abs);
}

Jacobian fd_jacobian(const Problem& problem, const DecisionVector& x, double h,
                     EvaluationBudget& budget) {
  const std::size_t n = problem.n;
  const std::size_t m = problem.m;
  if (h <= 0.0) throw std::invalid_argument("fd_jacobian: step must be positive");
  budget.charge(static_cast<std::int64_t>(2 * n));

  Jacobian jac(m, n);
  DecisionVector probe = x;
  for (std::size_t j = 0; j < n; ++j) {
    probe[j] = x[j] + h;
    ObjectiveVector f_plus = problem.evaluate(probe);
    probe[j] = x[j] - h;
    ObjectiveVector f_minus = problem.evaluate(probe);
    probe[j] = x[j];
    if (!all_finite(f_plus) || !all_finite(f_minus)) {
      throw EvaluationError("fd_jacobian: non-finite objective at probe point");
    }
    for (std::size_t i = 0; i < m; ++i) {
      jac.at(i, j) = (f_plus[i] - f_minus[i]) / (2.0 * h);
    }
  }
  return jac;
}

namespace {

DescentDirection assemble(const Jacobian& jac, std::vector<double> alpha) {
  DescentDirection dir;
  dir.q.assign(jac.n, 0.0);
  for (std::size_t i = 0; i < jac.m; ++i) {
    for (std::size_t j = 0; j < jac.n; ++j) {
      dir.q[j] += alpha[i] * jac.at(i, j);
    }
  }
  dir.norm_sq = norm2_sq(dir.q);
  dir.weights.alpha = std::move(alpha);
  return dir;
}

// Gram matrix G = J J^T, m x m.
std::vector<double> gram(const Jacobian& jac) {
  std::vector<double> g(jac.m * jac.m, 0.0);
  for (std::size_t i = 0; i < jac.m; ++i) {
    for (std::size_t k = i; k < jac.m; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < jac.n; ++j) s += jac.at(i, j) * jac.at(k, j);
      g[i * jac.m + k] = s;
      g[k * jac.m + i] = s;
    }
  }
  return g;
}

// Away-step Frank-Wolfe on f(alpha) = alpha^T G alpha. Linearly convergent on
// quadratics over the simplex; the relative duality gap target of 1e-10 keeps
// the variational inequality tight well below test tolerances.
std::vector<double> solve_simplex_qp(const std::vector<double>& G, std::size_t m) {
  constexpr double kGapTol = 1e-10;
  constexpr int kMaxIter = 10000;

  std::vector<double> alpha(m, 1.0 / static_cast<double>(m));
  std::vector<double> grad(m), Gd(m), d(m);

  auto apply_G = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < m; ++k) s += G[i * m + k] * v[k];
      out[i] = s;
    }
  };

  for (int iter = 0; iter < kMaxIter; ++iter) {
    apply_G(alpha, grad);
    for (double& g : grad) g *= 2.0;

    const double grad_dot_alpha = dot(grad, alpha);
    std::size_t fw = 0, away = 0;
    bool away_found = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (grad[i] < grad[fw]) fw = i;
      if (alpha[i] > 0.0 && (!away_found || grad[i] > grad[away])) {
        away = i;
        away_found = true;
      }
    }
    const double gap_fw = grad_dot_alpha - grad[fw];
    const double f_val = 0.5 * grad_dot_alpha;  // alpha^T G alpha
    if (gap_fw <= kGapTol * (1.0 + f_val)) break;

    const double gap_away = grad[away] - grad_dot_alpha;
    double gamma_max;
    if (gap_fw >= gap_away) {
      for (std::size_t i = 0; i < m; ++i) d[i] = (i == fw ? 1.0 : 0.0) - alpha[i];
      gamma_max = 1.0;
    } else {
      for (std::size_t i = 0; i < m; ++i) d[i] = alpha[i] - (i == away ? 1.0 : 0.0);
      gamma_max = alpha[away] >= 1.0 ? 1e30 : alpha[away] / (1.0 - alpha[away]);
    }

    apply_G(d, Gd);
    const double curvature = dot(d, Gd);  // d^T G d >= 0
    const double slope = dot(grad, d);    // < 0 by construction
    double gamma = gamma_max;
    if (curvature > 0.0) gamma = std::min(gamma_max, -slope / (2.0 * curvature));
    if (gamma <= 0.0) break;

    for (std::size_t i = 0; i < m; ++i) alpha[i] += gamma * d[i];
    // Clean tiny negatives from the away-step boundary arithmetic.
    double sum = 0.0;
    for (double& a : alpha) {
      if (a < 1e-16) a = 0.0;
      sum += a;
    }
    for (double& a : alpha) a /= sum;
  }
  return alpha;
}

}  // namespace

DescentDirection solve_min_norm(const Jacobian& jac) {
  if (jac.m == 0 || jac.n == 0) {
    throw std::invalid_argument("solve_min_norm: empty Jacobian");
  }
  if (!all_finite(jac.data)) {
    throw std::invalid_argument("solve_min_norm: non-finite Jacobian");
  }

  if (jac.m == 1) {
    return assemble(jac, {1.0});
  }

  // Degenerate all-zero Jacobian: any alpha is optimal, pick uniform.
  const bool all_zero =
      std::all_of(jac.data.begin(), jac.data.end(), [](double v) { return v == 0.0; });
  if (all_zero) {
    return assemble(jac, std::vector<double>(jac.m, 1.0 / static_cast<double>(jac.m)));
  }

  if (jac.m == 2) {
    // Min-norm point of the segment [g1, g2]:
    // alpha* = <g2 - g1, g2> / ||g1 - g2||^2 clamped to [0, 1].
    double diff_sq = 0.0, num = 0.0;
    for (std::size_t j = 0; j < jac.n; ++j) {
      const double diff = jac.at(0, j) - jac.at(1, j);
      diff_sq += diff * diff;
      num += -diff * jac.at(1, j);
    }
    double a = 0.5;
    if (diff_sq > 0.0) a = std::clamp(num / diff_sq, 0.0, 1.0);
    return assemble(jac, {a, 1.0 - a});
  }

  return assemble(jac, solve_simplex_qp(gram(jac), jac.m));
}

DescentDirection descent_direction(const Problem& problem, const DecisionVector& x,
                                   double h, EvaluationBudget& budget,
                                   bool use_analytic) {
  if (use_analytic && problem.has_analytic_jacobian()) {
    return solve_min_norm(problem.analytic_jacobian(x));
  }
  return solve_min_norm(fd_jacobian(problem, x, h, budget));
}

}  // namespace ssw
