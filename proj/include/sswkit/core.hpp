#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssw {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

// m x n matrix of objective gradients; row i = grad f_i(x).
struct Jacobian {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> data;  // row-major

  Jacobian() = default;
  Jacobian(std::size_t m_, std::size_t n_) : m(m_), n(n_), data(m_ * n_, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  const double* row(std::size_t i) const { return data.data() + i * n; }
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoxBounds {
  DecisionVector lower;
  DecisionVector upper;

  BoxBounds() = default;
  BoxBounds(DecisionVector lo, DecisionVector hi);

  std::size_t dim() const { return lower.size(); }
};

// Counts objective evaluations against a hard limit. Safe to share across
// concurrently running replicas.
class EvaluationBudget {
 public:
  explicit EvaluationBudget(std::int64_t limit) : limit_(limit) {}
  EvaluationBudget(const EvaluationBudget& other)
      : limit_(other.limit_), used_(other.used_.load()) {}

  std::int64_t limit() const { return limit_; }
  std::int64_t used() const { return used_.load(); }
  std::int64_t remaining() const { return limit_ - used_.load(); }

  // Reserves `count` evaluations atomically; throws without consuming
  // anything if they are not available.
  void charge(std::int64_t count);

 private:
  std::int64_t limit_;
  std::atomic<std::int64_t> used_{0};
};

struct Problem {
  std::string name;
  std::size_t n = 0;  // decision dimension
  std::size_t m = 0;  // objective count
  BoxBounds bounds;
  std::function<ObjectiveVector(const DecisionVector&)> evaluate;
  std::function<Jacobian(const DecisionVector&)> analytic_jacobian;  // optional

  bool has_analytic_jacobian() const { return static_cast<bool>(analytic_jacobian); }
};

// Single counting gateway: every objective evaluation in the toolkit goes
// through here so budget arithmetic stays exact.
ObjectiveVector evaluate_counted(const Problem& problem, const DecisionVector& x,
                                 EvaluationBudget& budget);

// Pareto dominance: a dominates b iff a <= b componentwise and a != b.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

struct ArchiveEntry {
  DecisionVector x;
  ObjectiveVector f;
};

// Mutually non-dominated (x, f) pairs. Ties on identical objective vectors
// keep the incumbent. Unbounded by default.
class ParetoArchive {
 public:
  // Returns true if the candidate was added.
  bool insert(DecisionVector x, ObjectiveVector f);

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<ObjectiveVector> objectives() const;

 private:
  std::vector<ArchiveEntry> entries_;
};

// Counter-keyed deterministic random stream. Streams with distinct
// (master_seed, stream_id) are independent; the draw sequence depends only
// on the pair and the position, never on scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double next_uniform();           // [0, 1)
  double next_uniform_open();      // (0, 1]
  double next_gaussian();          // N(0, 1)
  void fill_gaussian(double* out, std::size_t count);
  std::vector<double> gaussian_vector(std::size_t count);
  // Uniform over [lo, hi).
  double next_uniform_in(double lo, double hi);

 private:
  std::uint64_t state_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

// Key mixer for deriving per-(generation, particle) stream ids.
std::uint64_t stream_key(std::uint64_t a, std::uint64_t b);

// Small vector helpers shared across modules.
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);
double norm2_sq(const std::vector<double>& v);
bool all_finite(const std::vector<double>& v);

}  // namespace ssw
