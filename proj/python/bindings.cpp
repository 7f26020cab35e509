// Python bindings for the main toolkit operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sswkit/descent.hpp"
#include "sswkit/dynamics.hpp"
#include "sswkit/metrics.hpp"
#include "sswkit/nsga2.hpp"
#include "sswkit/problems.hpp"
#include "sswkit/ssw.hpp"
#include "sswkit/stability.hpp"

namespace py = pybind11;
using namespace ssw;

namespace {

Jacobian jacobian_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("jacobian rows must be non-empty");
  }
  Jacobian jac(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != jac.n) throw std::invalid_argument("ragged jacobian rows");
    for (std::size_t j = 0; j < jac.n; ++j) jac.at(i, j) = rows[i][j];
  }
  return jac;
}

DriftField field_from_callable(py::function fn, std::size_t n) {
  DriftField field;
  field.n = n;
  field.descriptor = "python";
  field.q = [fn = std::move(fn)](const DecisionVector& x) {
    return fn(x).cast<std::vector<double>>();
  };
  return field;
}

}  // namespace

PYBIND11_MODULE(_sswkit, m) {
  m.doc() = "Stochastic steepest-weights multi-objective optimization toolkit";

  py::class_<SimplexWeights>(m, "SimplexWeights")
      .def_readonly("alpha", &SimplexWeights::alpha);

  py::class_<DescentDirection>(m, "DescentDirection")
      .def_readonly("q", &DescentDirection::q)
      .def_readonly("weights", &DescentDirection::weights)
      .def_readonly("norm_sq", &DescentDirection::norm_sq);

  py::class_<ArchiveEntry>(m, "ArchiveEntry")
      .def_readonly("x", &ArchiveEntry::x)
      .def_readonly("f", &ArchiveEntry::f);

  py::class_<ParetoArchive>(m, "ParetoArchive")
      .def(py::init<>())
      .def("insert", &ParetoArchive::insert, py::arg("x"), py::arg("f"))
      .def("objectives", &ParetoArchive::objectives)
      .def_property_readonly("entries", &ParetoArchive::entries)
      .def("__len__", &ParetoArchive::size);

  py::class_<Problem>(m, "Problem")
      .def_readonly("name", &Problem::name)
      .def_readonly("n", &Problem::n)
      .def_readonly("m", &Problem::m)
      .def("evaluate", [](const Problem& p, const DecisionVector& x) { return p.evaluate(x); });

  py::class_<SswConfig>(m, "SswConfig")
      .def(py::init<>())
      .def_readwrite("population", &SswConfig::population)
      .def_readwrite("sigma", &SswConfig::sigma)
      .def_readwrite("eps", &SswConfig::eps)
      .def_readwrite("budget", &SswConfig::budget)
      .def_readwrite("seed", &SswConfig::seed)
      .def_readwrite("fd_step", &SswConfig::fd_step)
      .def_readwrite("use_analytic_jacobian", &SswConfig::use_analytic_jacobian);

  py::class_<Nsga2Config>(m, "Nsga2Config")
      .def(py::init<>())
      .def_readwrite("population", &Nsga2Config::population)
      .def_readwrite("crossover_prob", &Nsga2Config::crossover_prob)
      .def_readwrite("crossover_eta", &Nsga2Config::crossover_eta)
      .def_readwrite("mutation_prob", &Nsga2Config::mutation_prob)
      .def_readwrite("mutation_eta", &Nsga2Config::mutation_eta)
      .def_readwrite("budget", &Nsga2Config::budget)
      .def_readwrite("seed", &Nsga2Config::seed);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("archive", &RunResult::archive)
      .def_readonly("generations_completed", &RunResult::generations_completed)
      .def_readonly("evaluations_used", &RunResult::evaluations_used)
      .def_readonly("wall_time_seconds", &RunResult::wall_time_seconds);

  py::class_<IndicatorResult>(m, "IndicatorResult")
      .def_readonly("gd_p", &IndicatorResult::gd_p)
      .def_readonly("igd_p", &IndicatorResult::igd_p)
      .def_readonly("delta_p", &IndicatorResult::delta_p)
      .def_readonly("p", &IndicatorResult::p);

  py::class_<AssumptionReport>(m, "AssumptionReport")
      .def_readonly("theta0", &AssumptionReport::theta0)
      .def_readonly("r", &AssumptionReport::r)
      .def_readonly("mu", &AssumptionReport::mu)
      .def_readonly("samples_tested", &AssumptionReport::samples_tested)
      .def_readonly("pass_fraction", &AssumptionReport::pass_fraction)
      .def_readonly("worst_violation", &AssumptionReport::worst_violation)
      .def_readonly("kappa", &AssumptionReport::kappa);

  py::class_<HittingTimeEstimate>(m, "HittingTimeEstimate")
      .def_readonly("mean", &HittingTimeEstimate::mean)
      .def_readonly("ci_low", &HittingTimeEstimate::ci_low)
      .def_readonly("ci_high", &HittingTimeEstimate::ci_high)
      .def_readonly("hit_fraction", &HittingTimeEstimate::hit_fraction)
      .def_readonly("replicas", &HittingTimeEstimate::replicas);

  m.def("dominates", &dominates, py::arg("a"), py::arg("b"));

  m.def("make_dtlz2",
        [](std::size_t m_, std::size_t k) { return make_dtlz2(Dtlz2Spec{m_, k}); },
        py::arg("m") = 3, py::arg("k") = 10);
  m.def("make_quad2", &make_quad2, py::arg("n") = 2, py::arg("spread") = 1.0,
        py::arg("scale") = 1.0);
  m.def("dtlz2_reference_front", &dtlz2_reference_front, py::arg("m"), py::arg("count"),
        py::arg("seed"));

  m.def("solve_min_norm",
        [](const std::vector<std::vector<double>>& rows) {
          return solve_min_norm(jacobian_from_rows(rows));
        },
        py::arg("jacobian_rows"));

  m.def("em_step",
        [](const DecisionVector& x, const std::vector<double>& q, double sigma, double eps,
           const std::vector<double>& eta) { return em_step(x, q, StepParams{sigma, eps}, eta); },
        py::arg("x"), py::arg("q"), py::arg("sigma"), py::arg("eps"), py::arg("eta"));

  m.def("run_ssw", &run_ssw, py::arg("problem"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_nsga2", &run_nsga2, py::arg("problem"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.def("delta_p", &delta_p, py::arg("approx"), py::arg("reference"), py::arg("p") = 1.0);
  m.def("median_iqr", &median_iqr, py::arg("values"));

  m.def("generations_for_budget", &generations_for_budget, py::arg("budget"),
        py::arg("population"), py::arg("n"), py::arg("analytic"));

  m.def("check_assumption_a",
        [](py::function q, std::size_t n, double theta0, double r,
           const std::vector<DecisionVector>& samples) {
          return check_assumption_A(field_from_callable(std::move(q), n), theta0, r, samples);
        },
        py::arg("q"), py::arg("n"), py::arg("theta0"), py::arg("r"), py::arg("samples"));
  m.def("check_assumption_b",
        [](py::function q, std::size_t n, double mu, double r,
           const std::vector<DecisionVector>& samples) {
          return check_assumption_B(field_from_callable(std::move(q), n), mu, r, samples);
        },
        py::arg("q"), py::arg("n"), py::arg("mu"), py::arg("r"), py::arg("samples"));
  m.def("radial_sweep_samples", &radial_sweep_samples, py::arg("n"), py::arg("r"),
        py::arg("seed"), py::arg("per_sphere") = 64);
  m.def("generator_v",
        [](py::function q, std::size_t n, const DecisionVector& x, double eps) {
          return generator_V(field_from_callable(std::move(q), n), x, eps);
        },
        py::arg("q"), py::arg("n"), py::arg("x"), py::arg("eps"));
  m.def("generator_w",
        [](py::function q, std::size_t n, const DecisionVector& x, const DecisionVector& xbar,
           double eps) {
          return generator_W(field_from_callable(std::move(q), n), x, xbar, eps);
        },
        py::arg("q"), py::arg("n"), py::arg("x"), py::arg("xbar"), py::arg("eps"));
  m.def("estimate_hitting_time",
        [](py::function q, std::size_t n, const DecisionVector& x0, const DecisionVector& xbar,
           double p, double sigma, double eps, std::size_t replicas, std::size_t max_steps,
           std::uint64_t seed) {
          return estimate_hitting_time(field_from_callable(std::move(q), n), x0, xbar, p,
                                       StepParams{sigma, eps}, replicas, max_steps, seed);
        },
        py::arg("q"), py::arg("n"), py::arg("x0"), py::arg("xbar"), py::arg("p"),
        py::arg("sigma"), py::arg("eps"), py::arg("replicas"), py::arg("max_steps"),
        py::arg("seed"));
  m.def("ergodic_average",
        [](py::function q, std::size_t n, const DecisionVector& x0, double sigma, double eps,
           std::size_t horizon, std::size_t burn_in, py::function phi, std::uint64_t seed) {
          return ergodic_average(
              field_from_callable(std::move(q), n), x0, StepParams{sigma, eps}, horizon,
              burn_in,
              [phi = std::move(phi)](const DecisionVector& x) { return phi(x).cast<double>(); },
              seed);
        },
        py::arg("q"), py::arg("n"), py::arg("x0"), py::arg("sigma"), py::arg("eps"),
        py::arg("horizon_steps"), py::arg("burn_in_steps"), py::arg("phi"), py::arg("seed"));
}
