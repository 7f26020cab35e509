#pragma once

#include "sswkit/core.hpp"

namespace ssw {

struct SimplexWeights {
  std::vector<double> alpha;  // alpha_i >= 0, sum = 1
};

struct DescentDirection {
  std::vector<double> q;  // q = J^T alpha
  SimplexWeights weights;
  double norm_sq = 0.0;
};

// Default finite-difference step: max(1e-6, 1e-6 * ||x||_inf).
double default_fd_step(const DecisionVector& x);

// Centered finite differences; consumes exactly 2n evaluations or none.
Jacobian fd_jacobian(const Problem& problem, const DecisionVector& x, double h,
                     EvaluationBudget& budget);

// Min-norm point of the convex hull of the Jacobian rows: solves
// min ||J^T alpha||^2 over the probability simplex. Closed form for m <= 2,
// away-step Frank-Wolfe with exact line search for m >= 3.
DescentDirection solve_min_norm(const Jacobian& jacobian);

// Jacobian acquisition (analytic when available, else finite differences)
// composed with the min-norm solve.
DescentDirection descent_direction(const Problem& problem, const DecisionVector& x,
                                   double h, EvaluationBudget& budget,
                                   bool use_analytic = true);

}  // namespace ssw
