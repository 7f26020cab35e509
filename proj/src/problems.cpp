#include "sswkit/problems.hpp"

#include <cmath>

namespace ssw {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

// Finite-difference probes may poke a hair outside [0,1] when a particle sits
// on the box boundary; the DTLZ2 formula is well defined there, so accept a
// small overshoot and reject anything larger.
constexpr double kBoxSlack = 1e-3;

void check_dtlz2_input(const Dtlz2Spec& spec, const DecisionVector& x) {
  if (x.size() != spec.n()) {
    throw std::invalid_argument("dtlz2: expected dimension " + std::to_string(spec.n()));
  }
  for (double xi : x) {
    if (!(xi >= -kBoxSlack && xi <= 1.0 + kBoxSlack)) {
      throw std::invalid_argument("dtlz2: input outside [0,1]^n");
    }
  }
}

double dtlz2_g(const Dtlz2Spec& spec, const DecisionVector& x) {
  double g = 0.0;
  for (std::size_t i = spec.m - 1; i < spec.n(); ++i) {
    g += (x[i] - 0.5) * (x[i] - 0.5);
  }
  return g;
}

// Trig product for objective j (0-based): cos(theta_0)..cos(theta_{m-2-j}),
// times sin(theta_{m-1-j}) for j >= 1. `deriv_wrt` replaces that position's
// factor by its theta-derivative; pass m-1 (or more) for the plain product.
double trig_product(const Dtlz2Spec& spec, const DecisionVector& x, std::size_t j,
                    std::size_t deriv_wrt) {
  const std::size_t m = spec.m;
  double p = 1.0;
  for (std::size_t i = 0; i + j + 2 <= m; ++i) {  // i <= m-2-j
    const double theta = x[i] * kHalfPi;
    p *= (i == deriv_wrt) ? -std::sin(theta) : std::cos(theta);
  }
  if (j >= 1) {
    const std::size_t i = m - 1 - j;
    const double theta = x[i] * kHalfPi;
    p *= (i == deriv_wrt) ? std::cos(theta) : std::sin(theta);
  } else if (deriv_wrt < m) {
    // j = 0 has no sin factor; a derivative index outside the cos range kills
    // the whole product.
    if (deriv_wrt + 2 > m) p = 0.0;
  }
  return p;
}

}  // namespace

ObjectiveVector dtlz2_evaluate(const Dtlz2Spec& spec, const DecisionVector& x) {
  check_dtlz2_input(spec, x);
  const double g = dtlz2_g(spec, x);
  ObjectiveVector f(spec.m);
  for (std::size_t j = 0; j < spec.m; ++j) {
    f[j] = (1.0 + g) * trig_product(spec, x, j, spec.m);
  }
  return f;
}

Jacobian dtlz2_jacobian(const Dtlz2Spec& spec, const DecisionVector& x) {
  check_dtlz2_input(spec, x);
  const std::size_t m = spec.m;
  const std::size_t n = spec.n();
  const double g = dtlz2_g(spec, x);
  Jacobian jac(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    const double p = trig_product(spec, x, j, m);
    // Position variables: derivative of the trig product, chain rule pi/2.
    for (std::size_t i = 0; i + 1 < m; ++i) {
      bool appears = (i + j + 2 <= m) || (j >= 1 && i == m - 1 - j);
      jac.at(j, i) = appears ? (1.0 + g) * kHalfPi * trig_product(spec, x, j, i) : 0.0;
    }
    // Distance variables: d g / d x_i = 2 (x_i - 0.5).
    for (std::size_t i = m - 1; i < n; ++i) {
      jac.at(j, i) = 2.0 * (x[i] - 0.5) * p;
    }
  }
  return jac;
}

Problem make_dtlz2(const Dtlz2Spec& spec) {
  if (spec.m < 2 || spec.k < 1) {
    throw std::invalid_argument("dtlz2: need m >= 2 and k >= 1");
  }
  Problem p;
  p.name = "dtlz2";
  p.n = spec.n();
  p.m = spec.m;
  p.bounds = BoxBounds(DecisionVector(p.n, 0.0), DecisionVector(p.n, 1.0));
  p.evaluate = [spec](const DecisionVector& x) { return dtlz2_evaluate(spec, x); };
  p.analytic_jacobian = [spec](const DecisionVector& x) { return dtlz2_jacobian(spec, x); };
  return p;
}

std::vector<ObjectiveVector> dtlz2_reference_front(std::size_t m, std::size_t count,
                                                   std::uint64_t seed) {
  if (count < m) throw std::invalid_argument("dtlz2_reference_front: count < m");
  RngStream stream(seed, stream_key(0x5e7f07u, m));
  std::vector<ObjectiveVector> front;
  front.reserve(count);
  while (front.size() < count) {
    ObjectiveVector p = stream.gaussian_vector(m);
    double nrm = norm2(p);
    if (nrm < 1e-12) continue;
    for (double& v : p) v = std::abs(v) / nrm;
    front.push_back(std::move(p));
  }
  return front;
}

std::size_t default_reference_front_size(std::size_t m) { return m <= 5 ? 100 : 5000; }

ObjectiveVector quadratic_evaluate(const QuadraticFamilySpec& spec, const DecisionVector& x) {
  ObjectiveVector f(spec.m());
  for (std::size_t i = 0; i < spec.m(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d = x[j] - spec.centers[i][j];
      s += d * d;
    }
    f[i] = spec.scales[i] * s;
  }
  return f;
}

Jacobian quadratic_jacobian(const QuadraticFamilySpec& spec, const DecisionVector& x) {
  Jacobian jac(spec.m(), x.size());
  for (std::size_t i = 0; i < spec.m(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      jac.at(i, j) = 2.0 * spec.scales[i] * (x[j] - spec.centers[i][j]);
    }
  }
  return jac;
}

Problem make_quadratic(const QuadraticFamilySpec& spec) {
  if (spec.m() == 0) throw std::invalid_argument("quadratic: need at least one center");
  for (double c : spec.scales) {
    if (!(c > 0.0)) throw std::invalid_argument("quadratic: scales must be positive");
  }
  Problem p;
  p.name = "quadratic";
  p.n = spec.n();
  p.m = spec.m();
  p.bounds = spec.bounds;
  p.evaluate = [spec](const DecisionVector& x) { return quadratic_evaluate(spec, x); };
  p.analytic_jacobian = [spec](const DecisionVector& x) { return quadratic_jacobian(spec, x); };
  return p;
}

Problem make_quad2(std::size_t n, double spread, double scale) {
  QuadraticFamilySpec spec;
  DecisionVector a(n, 0.0);
  a[0] = spread;
  DecisionVector neg_a(n, 0.0);
  neg_a[0] = -spread;
  spec.centers = {a, neg_a};
  spec.scales = {scale, scale};
  spec.bounds = BoxBounds(DecisionVector(n, -4.0 * spread), DecisionVector(n, 4.0 * spread));
  Problem p = make_quadratic(spec);
  p.name = "quad2";
  return p;
}

}  // namespace ssw
