#pragma once

#include <nlohmann/json.hpp>

#include "sswkit/core.hpp"
#include "sswkit/nsga2.hpp"
#include "sswkit/ssw.hpp"
#include "sswkit/stability.hpp"

namespace ssw {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem registry: "dtlz2" (params m, k) and "quad2" (params n).
Problem make_registered_problem(const std::string& name, std::size_t m, std::size_t k,
                                std::size_t n_quad = 2);

// Drift-field registry for the stability CLI: "ou:beta=<b>" (q = b x),
// "identity" (q = x), "bounded" (q = x/||x||), with dimension n.
DriftField make_registered_field(const std::string& name, std::size_t n);

struct MetricConfig {
  double p = 1.0;
  std::size_t reference_front_size = 0;  // 0 selects the per-m default
};

struct ExperimentConfig {
  std::string problem = "dtlz2";
  std::size_t m = 3;
  std::size_t k = 10;
  std::string algorithm = "ssw";  // "ssw" | "nsga2"
  SswConfig ssw;
  Nsga2Config nsga2;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  MetricConfig metric;
  std::string output_dir;
  std::size_t jobs = 1;
};

struct RunRecord {
  std::uint64_t seed = 0;
  double delta_p = 0.0;
  double gd_p = 0.0;
  double igd_p = 0.0;
  std::int64_t evaluations = 0;
  double wall_time_seconds = 0.0;
  std::vector<ObjectiveVector> front;
};

struct ExperimentSummary {
  std::vector<RunRecord> per_run;
  double median = 0.0;
  double iqr = 0.0;
  nlohmann::json provenance;  // fully resolved config + version
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::json experiment_config_to_json(const ExperimentConfig& config);

// Runs `runs` seeds (base_seed + index), computes Delta_p of each archive
// against the problem's reference front, and — when output_dir is set —
// writes runs.csv, fronts.csv and summary.json. Deterministic for a given
// config regardless of the jobs count.
ExperimentSummary run_experiment(const ExperimentConfig& config);

// CSV text for the per-run table (header: seed,delta_p,gd_p,igd_p,evaluations).
std::string per_run_csv(const ExperimentSummary& summary);

struct StabilityReportConfig {
  std::string field = "ou:beta=0.5";
  std::size_t n = 2;
  double theta0 = 1.0;
  double r = 2.0;
  double mu = 0.5;
  double eps = 0.15;
  double sigma = 0.01;
  std::size_t replicas = 200;
  std::size_t max_steps = 1000000;
  double hitting_radius = 1.0;
  double x0_norm = 5.0;
  std::size_t ergodic_horizon = 200000;
  std::size_t ergodic_burn_in = 20000;
  std::uint64_t seed = 1;
};

StabilityReportConfig stability_config_from_json(const nlohmann::json& j);

// Packages the stability-module probes into one JSON report.
nlohmann::json run_stability_report(const StabilityReportConfig& config);

}  // namespace ssw
