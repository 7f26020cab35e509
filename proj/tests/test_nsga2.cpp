#include <doctest.h>

#include <cmath>
#include <limits>

#include "sswkit/nsga2.hpp"
#include "sswkit/problems.hpp"

using namespace ssw;

namespace {

// O(N^2 m) oracle: rank by repeatedly peeling the non-dominated set.
std::vector<int> brute_force_ranks(const std::vector<ObjectiveVector>& fs) {
  std::vector<int> ranks(fs.size(), -1);
  int rank = 0;
  std::size_t assigned = 0;
  while (assigned < fs.size()) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (ranks[i] != -1) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (j != i && ranks[j] == -1 && dominates(fs[j], fs[i])) {
          dominated = true;
          break;
        }
      }
      if (!dominated) layer.push_back(i);
    }
    for (std::size_t i : layer) ranks[i] = rank;
    assigned += layer.size();
    ++rank;
  }
  return ranks;
}

}  // namespace

TEST_CASE("fast_nondominated_sort examples") {
  CHECK(fast_nondominated_sort({{1, 1}, {2, 2}, {0, 3}}) == std::vector<int>{0, 1, 0});
  CHECK(fast_nondominated_sort({{0, 3}, {1, 2}, {2, 1}}) == std::vector<int>{0, 0, 0});
  CHECK(fast_nondominated_sort({{1, 1}, {2, 2}, {3, 3}}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("fast_nondominated_sort agrees with the brute-force oracle") {
  RngStream rng(404, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = 2 + rng.next_u64() % 63;
    const std::size_t m = 2 + rng.next_u64() % 3;
    std::vector<ObjectiveVector> fs(count, ObjectiveVector(m));
    for (auto& f : fs) {
      for (double& v : f) v = std::floor(rng.next_uniform() * 5);
    }
    CHECK(fast_nondominated_sort(fs) == brute_force_ranks(fs));
  }
}

TEST_CASE("crowding distance boundary and interior rules") {
  const double inf = std::numeric_limits<double>::infinity();

  const auto two = crowding_distance({{0, 1}, {1, 0}});
  CHECK(two == std::vector<double>{inf, inf});

  // Equally spaced collinear points: middle distance 1 + 1 = 2 after
  // per-objective normalization.
  const auto three = crowding_distance({{0, 2}, {1, 1}, {2, 0}});
  CHECK(three[0] == inf);
  CHECK(three[2] == inf);
  CHECK(three[1] == doctest::Approx(2.0));

  // Duplicates: zero-range objective contributes nothing, no NaN.
  const auto dup = crowding_distance({{1, 1}, {1, 1}, {1, 1}});
  for (double d : dup) CHECK((d >= 0.0 || d == inf));
  CHECK_FALSE(std::isnan(dup[1]));
}

TEST_CASE("run_nsga2 is deterministic and budget-exact") {
  const Problem p = make_dtlz2(Dtlz2Spec{3, 4});
  Nsga2Config config;
  config.population = 20;
  config.budget = 2000;
  config.seed = 9;
  const RunResult a = run_nsga2(p, config);
  const RunResult b = run_nsga2(p, config);
  REQUIRE(a.archive.size() == b.archive.size());
  for (std::size_t i = 0; i < a.archive.size(); ++i) {
    CHECK(a.archive.entries()[i].f == b.archive.entries()[i].f);
  }
  // N at initialization plus N per generation.
  CHECK(a.evaluations_used == 20 + a.generations_completed * 20);
  CHECK(a.evaluations_used <= config.budget);
  CHECK(a.evaluations_used + 20 > config.budget);  // ran until exhaustion
}

TEST_CASE("run_nsga2 rejects invalid configs") {
  const Problem p = make_dtlz2(Dtlz2Spec{2, 3});
  Nsga2Config odd;
  odd.population = 7;
  CHECK_THROWS_AS(run_nsga2(p, odd), std::invalid_argument);
  Nsga2Config tiny;
  tiny.population = 20;
  tiny.budget = 10;
  CHECK_THROWS_AS(run_nsga2(p, tiny), BudgetExceededError);
}

TEST_CASE("elitism: the first front never regresses") {
  const Problem p = make_dtlz2(Dtlz2Spec{2, 4});
  Nsga2Config config;
  config.population = 20;
  config.budget = 3000;
  config.seed = 31;
  const RunResult r = run_nsga2(p, config);
  // The archive accumulates every non-dominated point ever seen, so the final
  // archive must cover (dominate-or-equal) a rerun with a smaller budget.
  Nsga2Config half = config;
  half.budget = 1500;
  const RunResult rh = run_nsga2(p, half);
  for (const auto& old_entry : rh.archive.entries()) {
    bool covered = false;
    for (const auto& e : r.archive.entries()) {
      if (e.f == old_entry.f || dominates(e.f, old_entry.f)) {
        covered = true;
        break;
      }
    }
    CHECK(covered);
  }
}
