#include "sswkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ssw {

namespace {

double dist_to_set(const ObjectiveVector& x, const std::vector<ObjectiveVector>& ys) {
  double best = std::numeric_limits<double>::infinity();
  for (const ObjectiveVector& y : ys) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - y[i];
      s += d * d;
    }
    best = std::min(best, s);
  }
  return std::sqrt(best);
}

double gd_p(const std::vector<ObjectiveVector>& from, const std::vector<ObjectiveVector>& to,
            double p) {
  double acc = 0.0;
  for (const ObjectiveVector& x : from) {
    acc += std::pow(dist_to_set(x, to), p);
  }
  return std::pow(acc / static_cast<double>(from.size()), 1.0 / p);
}

}  // namespace

IndicatorResult delta_p(const std::vector<ObjectiveVector>& approx,
                        const std::vector<ObjectiveVector>& reference, double p) {
  if (approx.empty() || reference.empty()) {
    throw std::invalid_argument("delta_p: sets must be non-empty");
  }
  if (p < 1.0) throw std::invalid_argument("delta_p: p must be >= 1");
  IndicatorResult r;
  r.p = p;
  r.gd_p = gd_p(approx, reference, p);
  r.igd_p = gd_p(reference, approx, p);
  r.delta_p = std::max(r.gd_p, r.igd_p);
  return r;
}

double quantile_sorted(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
  if (sorted.size() == 1) return sorted.front();
  const double h = prob * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::pair<double, double> median_iqr(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_iqr: empty sample");
  std::sort(values.begin(), values.end());
  const double med = quantile_sorted(values, 0.5);
  const double iqr = quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
  return {med, iqr};
}

}  // namespace ssw
