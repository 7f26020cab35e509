#pragma once

#include "sswkit/core.hpp"

namespace ssw {

struct StepParams {
  double sigma = 0.05;  // time step, > 0
  double eps = 0.15;    // noise intensity, >= 0; 0 recovers the deterministic flow
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DecisionVector> states;
};

// Raised when a trajectory produces a non-finite state; carries what was
// integrated so far.
struct TrajectoryOverflowError : std::runtime_error {
  TrajectoryOverflowError(const std::string& msg, Trajectory partial_)
      : std::runtime_error(msg), partial(std::move(partial_)) {}
  Trajectory partial;
};

// One Euler-Maruyama update: x - sigma*q + eps*sqrt(sigma)*eta.
DecisionVector em_step(const DecisionVector& x, const std::vector<double>& q,
                       const StepParams& params, const std::vector<double>& eta);

// Componentwise clamp to the box.
DecisionVector project_box(const DecisionVector& x, const BoxBounds& bounds);

// Drift-only flow x <- x - sigma*q(x), no noise, no projection. Records every
// state including x0.
Trajectory deterministic_flow(const Problem& problem, const DecisionVector& x0,
                              double sigma, std::size_t steps);

}  // namespace ssw
