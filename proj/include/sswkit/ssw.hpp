#pragma once

#include <optional>

#include "sswkit/core.hpp"
#include "sswkit/dynamics.hpp"

namespace ssw {

struct SswConfig {
  std::size_t population = 100;
  double sigma = 0.05;
  double eps = 0.15;
  std::int64_t budget = 30000;
  std::uint64_t seed = 0;
  double fd_step = 0.0;  // <= 0 selects the default rule per point
  bool use_analytic_jacobian = false;
  std::optional<std::size_t> max_generations;  // test override; budget still binds
};

struct GenerationStats {
  std::size_t generation = 0;
  std::size_t archive_size = 0;
};

struct RunResult {
  ParetoArchive archive;
  std::size_t generations_completed = 0;
  std::int64_t evaluations_used = 0;
  double wall_time_seconds = 0.0;
  std::vector<GenerationStats> per_generation;
};

// Number of whole generations affordable after the initial N evaluations.
// With finite differences each generation costs N*(2n+1); with analytic
// Jacobians it costs N.
std::size_t generations_for_budget(std::int64_t budget, std::size_t population,
                                   std::size_t n, bool analytic);

// The full SSW loop: uniform initialization, then per generation and per
// particle Jacobian -> simplex QP -> Gaussian kick -> Euler-Maruyama step ->
// box projection, with archive updates at the generation barrier.
RunResult run_ssw(const Problem& problem, const SswConfig& config);

}  // namespace ssw
