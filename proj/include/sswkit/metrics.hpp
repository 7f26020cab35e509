#pragma once

#include <utility>

#include "sswkit/core.hpp"

namespace ssw {

struct IndicatorResult {
  double gd_p = 0.0;
  double igd_p = 0.0;
  double delta_p = 0.0;  // max(gd_p, igd_p)
  double p = 1.0;
};

// Averaged Hausdorff distance (Schutze et al.):
//   GD_p(X,Y)  = (1/|X| sum_x d(x,Y)^p)^(1/p)
//   IGD_p(X,Y) = GD_p(Y,X)
//   Delta_p    = max(GD_p, IGD_p)
// Euclidean point-to-set distances, no normalization.
IndicatorResult delta_p(const std::vector<ObjectiveVector>& approx,
                        const std::vector<ObjectiveVector>& reference, double p = 1.0);

// Median and interquartile range under the linear-interpolation ("type 7")
// quantile convention.
std::pair<double, double> median_iqr(std::vector<double> values);

// Type-7 quantile of a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double prob);

}  // namespace ssw
