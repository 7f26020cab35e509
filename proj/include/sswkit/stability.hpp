#pragma once

#include "sswkit/core.hpp"
#include "sswkit/dynamics.hpp"

namespace ssw {

// Evaluable drift field q: R^n -> R^n, either a synthetic diagnostic field or
// the descent field of a problem.
struct DriftField {
  std::function<std::vector<double>(const DecisionVector&)> q;
  std::size_t n = 0;
  std::string descriptor;
};

struct AssumptionReport {
  double theta0 = 0.0;
  double r = 0.0;
  double mu = 0.0;
  std::size_t samples_tested = 0;
  double pass_fraction = 0.0;
  double worst_violation = 0.0;  // most negative slack observed
  double kappa = 0.0;            // (1 + theta0^2/2)^-1
};

struct GrowthEstimate {
  double L_hat = 0.0;
  double C1_hat = 0.0;  // 3 L
  double C2_hat = 0.0;  // L + eps^2 n
};

struct HittingTimeEstimate {
  double mean = 0.0;  // time units (steps * sigma); lower bound if not all hit
  double ci_low = 0.0;
  double ci_high = 0.0;
  double hit_fraction = 0.0;
  std::size_t replicas = 0;
};

// Dissipativity probe: x . q(x) >= (1 + theta0^2/2) max{1, ||q||^2} on every
// sample with ||x|| >= r.
AssumptionReport check_assumption_A(const DriftField& field, double theta0, double r,
                                    const std::vector<DecisionVector>& samples);

// Coercivity probe: ||q(x)|| >= mu ||x|| on every sample with ||x|| >= r.
AssumptionReport check_assumption_B(const DriftField& field, double mu, double r,
                                    const std::vector<DecisionVector>& samples);

// Radial sample sweep: 64 points on each of the spheres of radius r, 2r, 4r,
// 8r, directions from normalized seeded Gaussian draws.
std::vector<DecisionVector> radial_sweep_samples(std::size_t n, double r,
                                                 std::uint64_t seed,
                                                 std::size_t per_sphere = 64);

// Empirical linear-growth constant L_hat = max ||q(x)|| / (1 + ||x||), with
// the derived generator-bound constants.
GrowthEstimate estimate_growth(const DriftField& field,
                               const std::vector<DecisionVector>& samples, double eps,
                               std::size_t n);

// Generator on V(x) = ||x||^2:  -2 x.q(x) + eps^2 n.
double generator_V(const DriftField& field, const DecisionVector& x, double eps);

// Generator on W(x) = ||x - xbar||^2 / 2:  -(x - xbar).q(x) + eps^2 n / 2.
double generator_W(const DriftField& field, const DecisionVector& x,
                   const DecisionVector& xbar, double eps);

// Foster-Lyapunov drift probe: generator_W <= -lambda on all samples outside
// radius R around the origin.
bool drift_condition_holds(const DriftField& field, const DecisionVector& xbar, double eps,
                           double lambda, double radius,
                           const std::vector<DecisionVector>& samples);

// Monte Carlo first hitting time of S_p = {||x - xbar|| <= p} under the
// unconstrained Euler-Maruyama dynamics. Replicas that do not hit within
// max_steps contribute max_steps*sigma (the mean becomes a lower bound) and
// are surfaced via hit_fraction.
HittingTimeEstimate estimate_hitting_time(const DriftField& field, const DecisionVector& x0,
                                          const DecisionVector& xbar, double p,
                                          const StepParams& params, std::size_t replicas,
                                          std::size_t max_steps, std::uint64_t seed);

// Time average of phi over one trajectory after burn-in.
double ergodic_average(const DriftField& field, const DecisionVector& x0,
                       const StepParams& params, std::size_t horizon_steps,
                       std::size_t burn_in_steps,
                       const std::function<double(const DecisionVector&)>& phi,
                       std::uint64_t seed);

// Simulates one trajectory and returns max ||X_t||; throws on overflow.
double max_norm_along_trajectory(const DriftField& field, const DecisionVector& x0,
                                 const StepParams& params, std::size_t steps,
                                 std::uint64_t seed);

}  // namespace ssw
