#include "sswkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sswkit/descent.hpp"

namespace ssw {

DecisionVector em_step(const DecisionVector& x, const std::vector<double>& q,
                       const StepParams& params, const std::vector<double>& eta) {
  if (params.sigma <= 0.0) throw std::invalid_argument("em_step: sigma must be positive");
  if (params.eps < 0.0) throw std::invalid_argument("em_step: eps must be nonnegative");
  if (q.size() != x.size() || eta.size() != x.size()) {
    throw std::invalid_argument("em_step: dimension mismatch");
  }
  const double noise_scale = params.eps * std::sqrt(params.sigma);
  DecisionVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] - params.sigma * q[i] + noise_scale * eta[i];
  }
  if (!all_finite(out)) {
    throw std::runtime_error("em_step: non-finite state");
  }
  return out;
}

DecisionVector project_box(const DecisionVector& x, const BoxBounds& bounds) {
  DecisionVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::clamp(x[i], bounds.lower[i], bounds.upper[i]);
  }
  return out;
}

Trajectory deterministic_flow(const Problem& problem, const DecisionVector& x0,
                              double sigma, std::size_t steps) {
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  // Unlimited internal budget: the flow is a diagnostic, not a benchmark run.
  EvaluationBudget budget(std::numeric_limits<std::int64_t>::max());
  DecisionVector x = x0;
  for (std::size_t k = 0; k < steps; ++k) {
    DescentDirection dir;
    try {
      dir = descent_direction(problem, x, default_fd_step(x), budget);
    } catch (const std::invalid_argument& e) {
      // A diverging state first shows up as a non-finite Jacobian.
      throw TrajectoryOverflowError(
          std::string("deterministic_flow: ") + e.what(), std::move(traj));
    }
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= sigma * dir.q[i];
    if (!all_finite(x)) {
      throw TrajectoryOverflowError(
          "deterministic_flow: non-finite state at step " + std::to_string(k + 1),
          std::move(traj));
    }
    traj.times.push_back(static_cast<double>(k + 1) * sigma);
    traj.states.push_back(x);
  }
  return traj;
}

}  // namespace ssw
