#include "sswkit/nsga2.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

namespace ssw {

std::vector<int> fast_nondominated_sort(const std::vector<ObjectiveVector>& fs) {
  const std::size_t n = fs.size();
  if (n == 0) throw std::invalid_argument("fast_nondominated_sort: empty population");

  std::vector<int> ranks(n, -1);
  std::vector<int> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated_by(n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(fs[i], fs[j])) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(fs[j], fs[i])) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) {
      ranks[i] = 0;
      current.push_back(i);
    }
  }
  int rank = 0;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated_by[i]) {
        if (--domination_count[j] == 0) {
          ranks[j] = rank + 1;
          next.push_back(j);
        }
      }
    }
    ++rank;
    current = std::move(next);
  }
  return ranks;
}

std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
  const std::size_t n = front.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, 0.0);
  if (n == 0) return dist;
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  const std::size_t m = front.front().size();
  std::vector<std::size_t> order(n);
  for (std::size_t obj = 0; obj < m; ++obj) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return front[a][obj] < front[b][obj]; });
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double range = front[order.back()][obj] - front[order.front()][obj];
    if (range <= 0.0) continue;  // degenerate objective contributes nothing
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (dist[order[k]] == inf) continue;
      dist[order[k]] += (front[order[k + 1]][obj] - front[order[k - 1]][obj]) / range;
    }
  }
  return dist;
}

namespace {

struct Individual {
  DecisionVector x;
  ObjectiveVector f;
  int rank = 0;
  double crowding = 0.0;
};

void assign_rank_crowding(std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> fs(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) fs[i] = pop[i].f;
  const std::vector<int> ranks = fast_nondominated_sort(fs);
  const int max_rank = *std::max_element(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < pop.size(); ++i) pop[i].rank = ranks[i];
  for (int r = 0; r <= max_rank; ++r) {
    std::vector<std::size_t> idx;
    std::vector<ObjectiveVector> front;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (ranks[i] == r) {
        idx.push_back(i);
        front.push_back(pop[i].f);
      }
    }
    const std::vector<double> cd = crowding_distance(front);
    for (std::size_t k = 0; k < idx.size(); ++k) pop[idx[k]].crowding = cd[k];
  }
}

// Smaller rank wins; within a rank, larger crowding wins.
const Individual& tournament(const std::vector<Individual>& pop, RngStream& rng) {
  const std::size_t a = rng.next_u64() % pop.size();
  const std::size_t b = rng.next_u64() % pop.size();
  const Individual& ia = pop[a];
  const Individual& ib = pop[b];
  if (ia.rank != ib.rank) return ia.rank < ib.rank ? ia : ib;
  return ia.crowding >= ib.crowding ? ia : ib;
}

void sbx_crossover(const DecisionVector& p1, const DecisionVector& p2, DecisionVector& c1,
                   DecisionVector& c2, const BoxBounds& bounds, double prob, double eta,
                   RngStream& rng) {
  c1 = p1;
  c2 = p2;
  if (rng.next_uniform() > prob) return;
  for (std::size_t j = 0; j < p1.size(); ++j) {
    if (rng.next_uniform() > 0.5) continue;
    if (std::abs(p1[j] - p2[j]) < 1e-14) continue;
    const double y1 = std::min(p1[j], p2[j]);
    const double y2 = std::max(p1[j], p2[j]);
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    const double u = rng.next_uniform();

    auto spread = [&](double beta_bound) {
      const double alpha = 2.0 - std::pow(beta_bound, -(eta + 1.0));
      if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
      return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };

    double beta = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
    double betaq = spread(beta);
    double child1 = 0.5 * ((y1 + y2) - betaq * (y2 - y1));
    beta = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
    betaq = spread(beta);
    double child2 = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

    child1 = std::clamp(child1, lo, hi);
    child2 = std::clamp(child2, lo, hi);
    if (rng.next_uniform() <= 0.5) std::swap(child1, child2);
    c1[j] = child1;
    c2[j] = child2;
  }
}

void polynomial_mutation(DecisionVector& x, const BoxBounds& bounds, double prob, double eta,
                         RngStream& rng) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (rng.next_uniform() > prob) continue;
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    const double range = hi - lo;
    const double u = rng.next_uniform();
    const double delta1 = (x[j] - lo) / range;
    const double delta2 = (hi - x[j]) / range;
    double deltaq;
    if (u < 0.5) {
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - delta1, eta + 1.0);
      deltaq = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
    } else {
      const double val =
          2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - delta2, eta + 1.0);
      deltaq = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
    }
    x[j] = std::clamp(x[j] + deltaq * range, lo, hi);
  }
}

}  // namespace

RunResult run_nsga2(const Problem& problem, const Nsga2Config& config) {
  const std::size_t N = config.population;
  if (N < 4 || N % 2 != 0) {
    throw std::invalid_argument("run_nsga2: population must be even and >= 4");
  }
  if (config.budget < static_cast<std::int64_t>(N)) {
    throw BudgetExceededError("run_nsga2: budget smaller than one population evaluation");
  }

  const auto start = std::chrono::steady_clock::now();
  const double mutation_prob =
      config.mutation_prob >= 0.0 ? config.mutation_prob : 1.0 / static_cast<double>(problem.n);

  EvaluationBudget budget(config.budget);
  RngStream rng(config.seed, stream_key(0x6e56a2u, 0));
  RunResult result;

  std::vector<Individual> pop(N);
  for (Individual& ind : pop) {
    ind.x.resize(problem.n);
    for (std::size_t j = 0; j < problem.n; ++j) {
      ind.x[j] = rng.next_uniform_in(problem.bounds.lower[j], problem.bounds.upper[j]);
    }
    ind.f = evaluate_counted(problem, ind.x, budget);
    result.archive.insert(ind.x, ind.f);
  }
  assign_rank_crowding(pop);
  result.per_generation.push_back({0, result.archive.size()});

  std::size_t generation = 0;
  while (budget.remaining() >= static_cast<std::int64_t>(N)) {
    std::vector<Individual> offspring;
    offspring.reserve(N);
    while (offspring.size() < N) {
      const Individual& p1 = tournament(pop, rng);
      const Individual& p2 = tournament(pop, rng);
      Individual c1, c2;
      sbx_crossover(p1.x, p2.x, c1.x, c2.x, problem.bounds, config.crossover_prob,
                    config.crossover_eta, rng);
      polynomial_mutation(c1.x, problem.bounds, mutation_prob, config.mutation_eta, rng);
      polynomial_mutation(c2.x, problem.bounds, mutation_prob, config.mutation_eta, rng);
      offspring.push_back(std::move(c1));
      if (offspring.size() < N) offspring.push_back(std::move(c2));
    }
    for (Individual& ind : offspring) {
      ind.f = evaluate_counted(problem, ind.x, budget);
      result.archive.insert(ind.x, ind.f);
    }

    // (mu + lambda) environmental selection.
    std::vector<Individual> merged = std::move(pop);
    merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
    assign_rank_crowding(merged);
    std::vector<std::size_t> order(merged.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (merged[a].rank != merged[b].rank) return merged[a].rank < merged[b].rank;
      return merged[a].crowding > merged[b].crowding;
    });
    pop.clear();
    pop.reserve(N);
    for (std::size_t k = 0; k < N; ++k) pop.push_back(std::move(merged[order[k]]));
    assign_rank_crowding(pop);

    ++generation;
    result.per_generation.push_back({generation, result.archive.size()});
  }

  result.generations_completed = generation;
  result.evaluations_used = budget.used();
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace ssw
