#include "sswkit/ssw.hpp"

#include <chrono>

#include "sswkit/descent.hpp"

namespace ssw {

std::size_t generations_for_budget(std::int64_t budget, std::size_t population,
                                   std::size_t n, bool analytic) {
  const auto N = static_cast<std::int64_t>(population);
  if (budget < N) throw BudgetExceededError("budget smaller than one population evaluation");
  const std::int64_t per_generation =
      analytic ? N : N * static_cast<std::int64_t>(2 * n + 1);
  return static_cast<std::size_t>((budget - N) / per_generation);
}

RunResult run_ssw(const Problem& problem, const SswConfig& config) {
  if (config.population < 1) throw std::invalid_argument("run_ssw: population must be >= 1");
  if (config.sigma <= 0.0) throw std::invalid_argument("run_ssw: sigma must be positive");
  if (config.eps < 0.0) throw std::invalid_argument("run_ssw: eps must be nonnegative");

  const auto start = std::chrono::steady_clock::now();
  const std::size_t N = config.population;
  const std::size_t n = problem.n;
  const bool analytic = config.use_analytic_jacobian && problem.has_analytic_jacobian();

  std::size_t generations = generations_for_budget(config.budget, N, n, analytic);
  if (config.max_generations) generations = std::min(generations, *config.max_generations);

  EvaluationBudget budget(config.budget);
  RunResult result;

  // Stream 0: initialization. Noise streams are keyed by (generation,
  // particle) so results do not depend on execution order.
  RngStream init_stream(config.seed, 0);
  std::vector<DecisionVector> population(N, DecisionVector(n));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      population[i][j] =
          init_stream.next_uniform_in(problem.bounds.lower[j], problem.bounds.upper[j]);
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    result.archive.insert(population[i], evaluate_counted(problem, population[i], budget));
  }
  result.per_generation.push_back({0, result.archive.size()});

  const StepParams params{config.sigma, config.eps};
  for (std::size_t g = 0; g < generations; ++g) {
    for (std::size_t i = 0; i < N; ++i) {
      const double h = config.fd_step > 0.0 ? config.fd_step : default_fd_step(population[i]);
      DescentDirection dir =
          descent_direction(problem, population[i], h, budget, analytic);
      RngStream noise(config.seed, stream_key(g + 1, i));
      const std::vector<double> eta = noise.gaussian_vector(n);
      population[i] = project_box(em_step(population[i], dir.q, params, eta), problem.bounds);
    }
    for (std::size_t i = 0; i < N; ++i) {
      result.archive.insert(population[i], evaluate_counted(problem, population[i], budget));
    }
    result.generations_completed = g + 1;
    result.per_generation.push_back({g + 1, result.archive.size()});
  }

  result.evaluations_used = budget.used();
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace ssw
