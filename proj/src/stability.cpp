#include "sswkit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ssw {

namespace {

double kappa_of(double theta0) { return 1.0 / (1.0 + theta0 * theta0 / 2.0); }

}  // namespace

AssumptionReport check_assumption_A(const DriftField& field, double theta0, double r,
                                    const std::vector<DecisionVector>& samples) {
  if (!(theta0 > 0.0)) throw std::invalid_argument("assumption A: theta0 must be positive");
  if (!(r >= 1.0)) throw std::invalid_argument("assumption A: r must be >= 1");

  AssumptionReport report;
  report.theta0 = theta0;
  report.r = r;
  report.kappa = kappa_of(theta0);
  report.samples_tested = samples.size();

  const double factor = 1.0 + theta0 * theta0 / 2.0;
  std::size_t passed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const DecisionVector& x : samples) {
    if (norm2(x) < r * (1.0 - 1e-12)) {
      throw std::invalid_argument("assumption A: sample inside radius r");
    }
    const std::vector<double> q = field.q(x);
    const double slack = dot(x, q) - factor * std::max(1.0, norm2_sq(q));
    if (slack >= 0.0) ++passed;
    worst = std::min(worst, slack);
  }
  report.pass_fraction =
      samples.empty() ? 1.0 : static_cast<double>(passed) / static_cast<double>(samples.size());
  report.worst_violation = samples.empty() ? 0.0 : worst;
  return report;
}

AssumptionReport check_assumption_B(const DriftField& field, double mu, double r,
                                    const std::vector<DecisionVector>& samples) {
  if (!(mu > 0.0)) throw std::invalid_argument("assumption B: mu must be positive");

  AssumptionReport report;
  report.mu = mu;
  report.r = r;
  report.samples_tested = samples.size();

  std::size_t passed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const DecisionVector& x : samples) {
    if (norm2(x) < r * (1.0 - 1e-12)) {
      throw std::invalid_argument("assumption B: sample inside radius r");
    }
    const double slack = norm2(field.q(x)) - mu * norm2(x);
    if (slack >= 0.0) ++passed;
    worst = std::min(worst, slack);
  }
  report.pass_fraction =
      samples.empty() ? 1.0 : static_cast<double>(passed) / static_cast<double>(samples.size());
  report.worst_violation = samples.empty() ? 0.0 : worst;
  return report;
}

std::vector<DecisionVector> radial_sweep_samples(std::size_t n, double r, std::uint64_t seed,
                                                 std::size_t per_sphere) {
  std::vector<DecisionVector> samples;
  samples.reserve(4 * per_sphere);
  RngStream stream(seed, stream_key(0x5a3d1eu, n));
  for (int shell = 0; shell < 4; ++shell) {
    const double radius = r * static_cast<double>(1 << shell);
    for (std::size_t i = 0; i < per_sphere; ++i) {
      DecisionVector dir = stream.gaussian_vector(n);
      double nrm = norm2(dir);
      while (nrm < 1e-12) {
        dir = stream.gaussian_vector(n);
        nrm = norm2(dir);
      }
      for (double& v : dir) v *= radius / nrm;
      samples.push_back(std::move(dir));
    }
  }
  return samples;
}

GrowthEstimate estimate_growth(const DriftField& field,
                               const std::vector<DecisionVector>& samples, double eps,
                               std::size_t n) {
  if (samples.empty()) throw std::invalid_argument("estimate_growth: no samples");
  GrowthEstimate est;
  for (const DecisionVector& x : samples) {
    est.L_hat = std::max(est.L_hat, norm2(field.q(x)) / (1.0 + norm2(x)));
  }
  est.C1_hat = 3.0 * est.L_hat;
  est.C2_hat = est.L_hat + eps * eps * static_cast<double>(n);
  return est;
}

double generator_V(const DriftField& field, const DecisionVector& x, double eps) {
  return -2.0 * dot(x, field.q(x)) + eps * eps * static_cast<double>(field.n);
}

double generator_W(const DriftField& field, const DecisionVector& x,
                   const DecisionVector& xbar, double eps) {
  const std::vector<double> q = field.q(x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - xbar[i]) * q[i];
  return -s + 0.5 * eps * eps * static_cast<double>(field.n);
}

bool drift_condition_holds(const DriftField& field, const DecisionVector& xbar, double eps,
                           double lambda, double radius,
                           const std::vector<DecisionVector>& samples) {
  for (const DecisionVector& x : samples) {
    if (norm2(x) < radius) continue;
    if (generator_W(field, x, xbar, eps) > -lambda) return false;
  }
  return true;
}

namespace {

DecisionVector em_field_step(const DriftField& field, const DecisionVector& x,
                             const StepParams& params, RngStream& stream,
                             std::vector<double>& eta_buf) {
  stream.fill_gaussian(eta_buf.data(), eta_buf.size());
  return em_step(x, field.q(x), params, eta_buf);
}

}  // namespace

HittingTimeEstimate estimate_hitting_time(const DriftField& field, const DecisionVector& x0,
                                          const DecisionVector& xbar, double p,
                                          const StepParams& params, std::size_t replicas,
                                          std::size_t max_steps, std::uint64_t seed) {
  if (!(p > 0.0)) throw std::invalid_argument("estimate_hitting_time: p must be positive");
  if (replicas < 1) throw std::invalid_argument("estimate_hitting_time: need >= 1 replica");

  auto inside = [&](const DecisionVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - xbar[i];
      s += d * d;
    }
    return s <= p * p;
  };

  std::vector<double> hit_times(replicas);
  std::size_t hits = 0;
  std::vector<double> eta(field.n);
  for (std::size_t rep = 0; rep < replicas; ++rep) {
    RngStream stream(seed, stream_key(0x417u, rep));
    DecisionVector x = x0;
    std::size_t step = 0;
    bool hit = inside(x);
    while (!hit && step < max_steps) {
      x = em_field_step(field, x, params, stream, eta);
      ++step;
      hit = inside(x);
    }
    if (hit) ++hits;
    hit_times[rep] = static_cast<double>(step) * params.sigma;  // cap time if no hit
  }

  HittingTimeEstimate est;
  est.replicas = replicas;
  est.hit_fraction = static_cast<double>(hits) / static_cast<double>(replicas);
  double mean = 0.0;
  for (double t : hit_times) mean += t;
  mean /= static_cast<double>(replicas);
  est.mean = mean;
  double var = 0.0;
  for (double t : hit_times) var += (t - mean) * (t - mean);
  var = replicas > 1 ? var / static_cast<double>(replicas - 1) : 0.0;
  const double half_width = 1.959963984540054 * std::sqrt(var / static_cast<double>(replicas));
  est.ci_low = mean - half_width;
  est.ci_high = mean + half_width;
  return est;
}

double ergodic_average(const DriftField& field, const DecisionVector& x0,
                       const StepParams& params, std::size_t horizon_steps,
                       std::size_t burn_in_steps,
                       const std::function<double(const DecisionVector&)>& phi,
                       std::uint64_t seed) {
  if (horizon_steps <= burn_in_steps) {
    throw std::invalid_argument("ergodic_average: horizon must exceed burn-in");
  }
  RngStream stream(seed, stream_key(0xe26u, 0));
  std::vector<double> eta(field.n);
  DecisionVector x = x0;
  double acc = 0.0;
  for (std::size_t step = 0; step < horizon_steps; ++step) {
    x = em_field_step(field, x, params, stream, eta);
    if (step >= burn_in_steps) acc += phi(x);
  }
  return acc / static_cast<double>(horizon_steps - burn_in_steps);
}

double max_norm_along_trajectory(const DriftField& field, const DecisionVector& x0,
                                 const StepParams& params, std::size_t steps,
                                 std::uint64_t seed) {
  RngStream stream(seed, stream_key(0x1107u, 0));
  std::vector<double> eta(field.n);
  DecisionVector x = x0;
  double max_norm = norm2(x);
  for (std::size_t step = 0; step < steps; ++step) {
    x = em_field_step(field, x, params, stream, eta);
    max_norm = std::max(max_norm, norm2(x));
  }
  return max_norm;
}

}  // namespace ssw
