#pragma once

#include "sswkit/core.hpp"

namespace ssw {

struct Dtlz2Spec {
  std::size_t m = 3;   // objectives, >= 2
  std::size_t k = 10;  // distance variables, n = m + k - 1

  std::size_t n() const { return m + k - 1; }
};

ObjectiveVector dtlz2_evaluate(const Dtlz2Spec& spec, const DecisionVector& x);
Jacobian dtlz2_jacobian(const Dtlz2Spec& spec, const DecisionVector& x);
Problem make_dtlz2(const Dtlz2Spec& spec);

// Discretization of the DTLZ2 true front (unit sphere, positive orthant),
// uniform via normalized absolute Gaussian draws.
std::vector<ObjectiveVector> dtlz2_reference_front(std::size_t m, std::size_t count,
                                                   std::uint64_t seed);

// Reference-front size used by the experiment runner: 1000 points up to m=5,
// 5000 beyond.
std::size_t default_reference_front_size(std::size_t m);

// f_i(x) = c_i * ||x - a_i||^2; analytic Jacobian rows 2 c_i (x - a_i).
struct QuadraticFamilySpec {
  std::vector<DecisionVector> centers;
  std::vector<double> scales;
  BoxBounds bounds;  // search box for algorithm runs

  std::size_t m() const { return centers.size(); }
  std::size_t n() const { return centers.empty() ? 0 : centers.front().size(); }
};

ObjectiveVector quadratic_evaluate(const QuadraticFamilySpec& spec, const DecisionVector& x);
Jacobian quadratic_jacobian(const QuadraticFamilySpec& spec, const DecisionVector& x);
Problem make_quadratic(const QuadraticFamilySpec& spec);

// The bi-objective family with centers +/-a and equal scales; its Pareto set
// is the segment [-a, a].
Problem make_quad2(std::size_t n, double spread = 1.0, double scale = 1.0);

}  // namespace ssw
