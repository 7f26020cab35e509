#include "sswkit/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sswkit/metrics.hpp"
#include "sswkit/problems.hpp"

namespace ssw {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

Problem make_registered_problem(const std::string& name, std::size_t m, std::size_t k,
                                std::size_t n_quad) {
  if (name == "dtlz2") return make_dtlz2(Dtlz2Spec{m, k});
  if (name == "quad2") return make_quad2(n_quad);
  throw ConfigurationError("unknown problem: " + name);
}

DriftField make_registered_field(const std::string& name, std::size_t n) {
  DriftField field;
  field.n = n;
  field.descriptor = name;
  if (name.rfind("ou:beta=", 0) == 0) {
    double beta = 0.0;
    try {
      std::size_t pos = 0;
      const std::string value = name.substr(8);
      beta = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ConfigurationError("malformed field name: " + name);
    }
    field.q = [beta](const DecisionVector& x) {
      std::vector<double> q(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) q[i] = beta * x[i];
      return q;
    };
    return field;
  }
  if (name == "identity") {
    field.q = [](const DecisionVector& x) { return x; };
    return field;
  }
  if (name == "bounded") {
    field.q = [](const DecisionVector& x) {
      const double nrm = norm2(x);
      std::vector<double> q(x.size(), 0.0);
      if (nrm > 0.0) {
        for (std::size_t i = 0; i < x.size(); ++i) q[i] = x[i] / nrm;
      }
      return q;
    };
    return field;
  }
  throw ConfigurationError("unknown drift field: " + name);
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.problem = j.value("problem", c.problem);
  c.m = j.value("m", c.m);
  c.k = j.value("k", c.k);
  c.algorithm = j.value("algorithm", c.algorithm);
  c.runs = j.value("runs", c.runs);
  c.base_seed = j.value("base_seed", c.base_seed);
  c.output_dir = j.value("output_dir", c.output_dir);
  c.jobs = j.value("jobs", c.jobs);
  if (j.contains("metric")) {
    c.metric.p = j["metric"].value("p", c.metric.p);
    c.metric.reference_front_size =
        j["metric"].value("reference_front_size", c.metric.reference_front_size);
  }
  if (j.contains("ssw")) {
    const auto& s = j["ssw"];
    c.ssw.population = s.value("population", c.ssw.population);
    c.ssw.sigma = s.value("sigma", c.ssw.sigma);
    c.ssw.eps = s.value("eps", c.ssw.eps);
    c.ssw.budget = s.value("budget", c.ssw.budget);
    c.ssw.fd_step = s.value("fd_step", c.ssw.fd_step);
    c.ssw.use_analytic_jacobian = s.value("use_analytic_jacobian", c.ssw.use_analytic_jacobian);
  }
  if (j.contains("nsga2")) {
    const auto& s = j["nsga2"];
    c.nsga2.population = s.value("population", c.nsga2.population);
    c.nsga2.crossover_prob = s.value("crossover_prob", c.nsga2.crossover_prob);
    c.nsga2.crossover_eta = s.value("crossover_eta", c.nsga2.crossover_eta);
    c.nsga2.mutation_prob = s.value("mutation_prob", c.nsga2.mutation_prob);
    c.nsga2.mutation_eta = s.value("mutation_eta", c.nsga2.mutation_eta);
    c.nsga2.budget = s.value("budget", c.nsga2.budget);
  }
  return c;
}

nlohmann::json experiment_config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["problem"] = c.problem;
  j["m"] = c.m;
  j["k"] = c.k;
  j["algorithm"] = c.algorithm;
  j["runs"] = c.runs;
  j["base_seed"] = c.base_seed;
  j["output_dir"] = c.output_dir;
  j["jobs"] = c.jobs;
  j["metric"] = {{"p", c.metric.p},
                 {"reference_front_size", c.metric.reference_front_size},
                 {"computed_on", "archive"}};
  j["ssw"] = {{"population", c.ssw.population},
              {"sigma", c.ssw.sigma},
              {"eps", c.ssw.eps},
              {"budget", c.ssw.budget},
              {"fd_step", c.ssw.fd_step},
              {"use_analytic_jacobian", c.ssw.use_analytic_jacobian}};
  j["nsga2"] = {{"population", c.nsga2.population},
                {"crossover_prob", c.nsga2.crossover_prob},
                {"crossover_eta", c.nsga2.crossover_eta},
                {"mutation_prob", c.nsga2.mutation_prob},
                {"mutation_eta", c.nsga2.mutation_eta},
                {"budget", c.nsga2.budget}};
  return j;
}

std::string per_run_csv(const ExperimentSummary& summary) {
  std::string csv = "seed,delta_p,gd_p,igd_p,evaluations\n";
  for (const RunRecord& r : summary.per_run) {
    csv += std::to_string(r.seed) + "," + fmt_double(r.delta_p) + "," + fmt_double(r.gd_p) +
           "," + fmt_double(r.igd_p) + "," + std::to_string(r.evaluations) + "\n";
  }
  return csv;
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  if (config.runs < 1) throw ConfigurationError("runs must be >= 1");
  if (config.algorithm != "ssw" && config.algorithm != "nsga2") {
    throw ConfigurationError("unknown algorithm: " + config.algorithm);
  }
  const Problem problem = make_registered_problem(config.problem, config.m, config.k);

  std::size_t ref_size = config.metric.reference_front_size;
  if (ref_size == 0) ref_size = default_reference_front_size(problem.m);
  std::vector<ObjectiveVector> reference;
  if (config.problem == "dtlz2") {
    reference = dtlz2_reference_front(problem.m, ref_size, config.base_seed);
  } else {
    // quad2 front: image of the Pareto segment [-a, a] sampled uniformly.
    const Problem quad = problem;
    for (std::size_t i = 0; i < ref_size; ++i) {
      DecisionVector x(quad.n, 0.0);
      x[0] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(ref_size - 1);
      reference.push_back(quad.evaluate(x));
    }
  }

  ExperimentSummary summary;
  summary.per_run.resize(config.runs);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= config.runs) return;
      const std::uint64_t seed = config.base_seed + idx;
      RunResult run;
      if (config.algorithm == "ssw") {
        SswConfig sc = config.ssw;
        sc.seed = seed;
        run = run_ssw(problem, sc);
      } else {
        Nsga2Config nc = config.nsga2;
        nc.seed = seed;
        run = run_nsga2(problem, nc);
      }
      RunRecord rec;
      rec.seed = seed;
      rec.front = run.archive.objectives();
      const IndicatorResult ind = delta_p(rec.front, reference, config.metric.p);
      rec.delta_p = ind.delta_p;
      rec.gd_p = ind.gd_p;
      rec.igd_p = ind.igd_p;
      rec.evaluations = run.evaluations_used;
      rec.wall_time_seconds = run.wall_time_seconds;
      summary.per_run[idx] = std::move(rec);
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  std::vector<double> deltas;
  deltas.reserve(config.runs);
  for (const RunRecord& r : summary.per_run) deltas.push_back(r.delta_p);
  std::tie(summary.median, summary.iqr) = median_iqr(deltas);

  summary.provenance = experiment_config_to_json(config);
  summary.provenance["toolkit_version"] = kToolkitVersion;
  summary.provenance["reference_front_size"] = ref_size;

  if (!config.output_dir.empty()) {
    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "runs.csv", per_run_csv(summary));

    std::string fronts = "seed";
    for (std::size_t i = 0; i < problem.m; ++i) fronts += ",f" + std::to_string(i + 1);
    fronts += "\n";
    for (const RunRecord& r : summary.per_run) {
      for (const ObjectiveVector& f : r.front) {
        fronts += std::to_string(r.seed);
        for (double v : f) fronts += "," + fmt_double(v);
        fronts += "\n";
      }
    }
    write_file(dir / "fronts.csv", fronts);

    nlohmann::json js;
    js["provenance"] = summary.provenance;
    js["aggregate"] = {{"median", summary.median}, {"iqr", summary.iqr}};
    nlohmann::json per_run = nlohmann::json::array();
    for (const RunRecord& r : summary.per_run) {
      per_run.push_back({{"seed", r.seed},
                         {"delta_p", r.delta_p},
                         {"gd_p", r.gd_p},
                         {"igd_p", r.igd_p},
                         {"evaluations", r.evaluations},
                         {"wall_time_s", r.wall_time_seconds}});
    }
    js["per_run"] = per_run;
    write_file(dir / "summary.json", js.dump(2) + "\n");
  }
  return summary;
}

StabilityReportConfig stability_config_from_json(const nlohmann::json& j) {
  StabilityReportConfig c;
  c.field = j.value("field", c.field);
  c.n = j.value("n", c.n);
  c.theta0 = j.value("theta0", c.theta0);
  c.r = j.value("r", c.r);
  c.mu = j.value("mu", c.mu);
  c.eps = j.value("eps", c.eps);
  c.sigma = j.value("sigma", c.sigma);
  c.replicas = j.value("replicas", c.replicas);
  c.max_steps = j.value("max_steps", c.max_steps);
  c.hitting_radius = j.value("hitting_radius", c.hitting_radius);
  c.x0_norm = j.value("x0_norm", c.x0_norm);
  c.ergodic_horizon = j.value("ergodic_horizon", c.ergodic_horizon);
  c.ergodic_burn_in = j.value("ergodic_burn_in", c.ergodic_burn_in);
  c.seed = j.value("seed", c.seed);
  return c;
}

nlohmann::json run_stability_report(const StabilityReportConfig& c) {
  const DriftField field = make_registered_field(c.field, c.n);
  const std::vector<DecisionVector> samples = radial_sweep_samples(c.n, c.r, c.seed);

  const AssumptionReport a = check_assumption_A(field, c.theta0, c.r, samples);
  const AssumptionReport b = check_assumption_B(field, c.mu, c.r, samples);
  const GrowthEstimate growth = estimate_growth(field, samples, c.eps, c.n);

  DecisionVector x0(c.n, 0.0);
  x0[0] = c.x0_norm;
  const DecisionVector xbar(c.n, 0.0);
  const StepParams params{c.sigma, c.eps};
  const HittingTimeEstimate hit = estimate_hitting_time(
      field, x0, xbar, c.hitting_radius, params, c.replicas, c.max_steps, c.seed);
  const double second_moment = ergodic_average(
      field, xbar, params, c.ergodic_horizon, c.ergodic_burn_in,
      [](const DecisionVector& x) { return x[0] * x[0]; }, c.seed);

  nlohmann::json report;
  report["toolkit_version"] = kToolkitVersion;
  report["config"] = {{"field", c.field},       {"n", c.n},
                      {"theta0", c.theta0},     {"r", c.r},
                      {"mu", c.mu},             {"eps", c.eps},
                      {"sigma", c.sigma},       {"replicas", c.replicas},
                      {"max_steps", c.max_steps}, {"hitting_radius", c.hitting_radius},
                      {"x0_norm", c.x0_norm},   {"ergodic_horizon", c.ergodic_horizon},
                      {"ergodic_burn_in", c.ergodic_burn_in}, {"seed", c.seed}};
  report["assumption_A"] = {{"theta0", a.theta0},
                            {"r", a.r},
                            {"samples_tested", a.samples_tested},
                            {"pass_fraction", a.pass_fraction},
                            {"worst_violation", a.worst_violation},
                            {"kappa", a.kappa}};
  report["assumption_B"] = {{"mu", b.mu},
                            {"r", b.r},
                            {"samples_tested", b.samples_tested},
                            {"pass_fraction", b.pass_fraction},
                            {"worst_violation", b.worst_violation}};
  report["growth"] = {{"L_hat", growth.L_hat}, {"C1_hat", growth.C1_hat}, {"C2_hat", growth.C2_hat}};
  report["hitting_time"] = {{"mean", hit.mean},
                            {"ci_low", hit.ci_low},
                            {"ci_high", hit.ci_high},
                            {"hit_fraction", hit.hit_fraction},
                            {"replicas", hit.replicas}};
  report["ergodic"] = {{"phi", "x1^2"}, {"time_average", second_moment}};
  return report;
}

}  // namespace ssw
