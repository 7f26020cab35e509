#include "sswkit/core.hpp"

#include <algorithm>
#include <cmath>

namespace ssw {

BoxBounds::BoxBounds(DecisionVector lo, DecisionVector hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("BoxBounds: lower/upper length mismatch");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("BoxBounds: lower[i] must be < upper[i]");
    }
  }
}

void EvaluationBudget::charge(std::int64_t count) {
  std::int64_t current = used_.load();
  for (;;) {
    if (current + count > limit_) {
      throw BudgetExceededError("evaluation budget exceeded: need " +
                                std::to_string(count) + ", remaining " +
                                std::to_string(limit_ - current));
    }
    if (used_.compare_exchange_weak(current, current + count)) return;
  }
}

ObjectiveVector evaluate_counted(const Problem& problem, const DecisionVector& x,
                                 EvaluationBudget& budget) {
  budget.charge(1);
  ObjectiveVector f = problem.evaluate(x);
  if (!all_finite(f)) {
    throw EvaluationError("non-finite objective value for problem " + problem.name);
  }
  return f;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: objective length mismatch");
  }
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

bool ParetoArchive::insert(DecisionVector x, ObjectiveVector f) {
  for (const ArchiveEntry& e : entries_) {
    if (e.f == f || dominates(e.f, f)) return false;
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(f, e.f); });
  entries_.push_back(ArchiveEntry{std::move(x), std::move(f)});
  return true;
}

std::vector<ObjectiveVector> ParetoArchive::objectives() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const ArchiveEntry& e : entries_) out.push_back(e.f);
  return out;
}

namespace {

// splitmix64 step (Steele et al.); also used as the key mixer.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a;
  std::uint64_t h = splitmix64(s);
  s = h ^ b;
  return splitmix64(s);
}

}  // namespace

std::uint64_t stream_key(std::uint64_t a, std::uint64_t b) { return mix(a, b); }

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : state_(mix(master_seed, stream_id)) {}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  // Box-Muller; u1 in (0,1] keeps the log finite.
  const double u1 = next_uniform_open();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_gaussian_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

void RngStream::fill_gaussian(double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out[i] = next_gaussian();
}

std::vector<double> RngStream::gaussian_vector(std::size_t count) {
  std::vector<double> out(count);
  fill_gaussian(out.data(), count);
  return out;
}

double RngStream::next_uniform_in(double lo, double hi) {
  return lo + (hi - lo) * next_uniform();
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2_sq(const std::vector<double>& v) { return dot(v, v); }

double norm2(const std::vector<double>& v) { return std::sqrt(norm2_sq(v)); }

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace ssw
