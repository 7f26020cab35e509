#pragma once

#include "sswkit/core.hpp"
#include "sswkit/ssw.hpp"  // RunResult

namespace ssw {

struct Nsga2Config {
  std::size_t population = 100;  // even, >= 4
  double crossover_prob = 0.9;
  double crossover_eta = 15.0;
  double mutation_prob = -1.0;  // < 0 selects 1/n
  double mutation_eta = 20.0;
  std::int64_t budget = 30000;
  std::uint64_t seed = 0;
};

// Rank 0 = non-dominated set of the whole population; rank k = non-dominated
// after removing ranks < k.
std::vector<int> fast_nondominated_sort(const std::vector<ObjectiveVector>& fs);

// Crowding distance within a single rank class; boundary points get +inf.
// Objectives with zero range contribute 0.
std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front);

// Standard elitist generational loop: binary tournament on (rank, crowding),
// simulated binary crossover, polynomial mutation, (mu+lambda) environmental
// selection. The archive is maintained exactly as in run_ssw.
RunResult run_nsga2(const Problem& problem, const Nsga2Config& config);

}  // namespace ssw
