// Command-line experiment runner: `run` executes multi-seed benchmark
// experiments, `stability` emits drift-field diagnostic reports, `front`
// emits a discretized DTLZ2 reference front.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sswkit/experiment.hpp"
#include "sswkit/problems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssw::ConfigurationError("cannot read config file " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SSW multi-objective optimization toolkit"};
  app.require_subcommand(1);

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "Run a multi-seed benchmark experiment");
  std::string config_path;
  ssw::ExperimentConfig base;
  bool have_problem = false, have_m = false, have_k = false, have_algo = false;
  bool have_pop = false, have_sigma = false, have_eps = false, have_budget = false;
  bool have_runs = false, have_seed = false, have_jobs = false, have_out = false;
  std::string problem, algo, out_dir;
  std::size_t m = 3, k = 10, pop = 100, runs = 30, jobs = 1;
  double sigma = 0.05, eps = 0.15;
  std::int64_t budget = 30000;
  std::uint64_t seed = 1;

  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--problem", problem)->each([&](const std::string&) { have_problem = true; });
  run_cmd->add_option("--m", m)->each([&](const std::string&) { have_m = true; });
  run_cmd->add_option("--k", k)->each([&](const std::string&) { have_k = true; });
  run_cmd->add_option("--algo", algo)->each([&](const std::string&) { have_algo = true; });
  run_cmd->add_option("--pop", pop)->each([&](const std::string&) { have_pop = true; });
  run_cmd->add_option("--sigma", sigma)->each([&](const std::string&) { have_sigma = true; });
  run_cmd->add_option("--eps", eps)->each([&](const std::string&) { have_eps = true; });
  run_cmd->add_option("--budget", budget)->each([&](const std::string&) { have_budget = true; });
  run_cmd->add_option("--runs", runs)->each([&](const std::string&) { have_runs = true; });
  run_cmd->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
  run_cmd->add_option("--jobs", jobs)->each([&](const std::string&) { have_jobs = true; });
  run_cmd->add_option("--out", out_dir)->each([&](const std::string&) { have_out = true; });

  // --- stability ---
  auto* stab_cmd = app.add_subcommand("stability", "Emit a drift-field stability report");
  std::string stab_config_path, field_name = "ou:beta=0.5", stab_out;
  ssw::StabilityReportConfig stab;
  bool have_field = false;
  stab_cmd->add_option("--config", stab_config_path, "JSON config file");
  stab_cmd->add_option("--field", field_name)->each([&](const std::string&) { have_field = true; });
  stab_cmd->add_option("--n", stab.n);
  stab_cmd->add_option("--theta0", stab.theta0);
  stab_cmd->add_option("--r", stab.r);
  stab_cmd->add_option("--mu", stab.mu);
  stab_cmd->add_option("--eps", stab.eps);
  stab_cmd->add_option("--sigma", stab.sigma);
  stab_cmd->add_option("--replicas", stab.replicas);
  stab_cmd->add_option("--seed", stab.seed);
  stab_cmd->add_option("--out", stab_out, "Output JSON path (default stdout)");

  // --- front ---
  auto* front_cmd = app.add_subcommand("front", "Emit a DTLZ2 reference front as CSV");
  std::size_t front_m = 3, front_count = 1000;
  std::uint64_t front_seed = 1;
  std::string front_out;
  front_cmd->add_option("--m", front_m);
  front_cmd->add_option("--count", front_count);
  front_cmd->add_option("--seed", front_seed);
  front_cmd->add_option("--out", front_out, "Output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ssw::ExperimentConfig config;
      if (!config_path.empty()) {
        config = ssw::experiment_config_from_json(load_json_file(config_path));
      }
      if (have_problem) config.problem = problem;
      if (have_m) config.m = m;
      if (have_k) config.k = k;
      if (have_algo) config.algorithm = algo;
      if (have_pop) {
        config.ssw.population = pop;
        config.nsga2.population = pop;
      }
      if (have_sigma) config.ssw.sigma = sigma;
      if (have_eps) config.ssw.eps = eps;
      if (have_budget) {
        config.ssw.budget = budget;
        config.nsga2.budget = budget;
      }
      if (have_runs) config.runs = runs;
      if (have_seed) config.base_seed = seed;
      if (have_jobs) config.jobs = jobs;
      if (have_out) config.output_dir = out_dir;

      const ssw::ExperimentSummary summary = ssw::run_experiment(config);
      std::printf("%s %s m=%zu runs=%zu: median delta_p = %.6f, IQR = %.6f\n",
                  config.algorithm.c_str(), config.problem.c_str(), config.m,
                  config.runs, summary.median, summary.iqr);
      return kExitOk;
    }

    if (*stab_cmd) {
      if (!stab_config_path.empty()) {
        stab = ssw::stability_config_from_json(load_json_file(stab_config_path));
      }
      if (have_field) stab.field = field_name;
      const nlohmann::json report = ssw::run_stability_report(stab);
      if (stab_out.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::ofstream out(stab_out);
        if (!out) throw std::ios_base::failure("cannot write " + stab_out);
        out << report.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*front_cmd) {
      const auto front = ssw::dtlz2_reference_front(front_m, front_count, front_seed);
      std::string csv;
      for (std::size_t i = 0; i < front_m; ++i) {
        csv += (i ? ",f" : "f") + std::to_string(i + 1);
      }
      csv += "\n";
      char buf[40];
      for (const auto& p : front) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          std::snprintf(buf, sizeof(buf), "%.17g", p[i]);
          if (i) csv += ",";
          csv += buf;
        }
        csv += "\n";
      }
      if (front_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(front_out);
        if (!out) throw std::ios_base::failure("cannot write " + front_out);
        out << csv;
      }
      return kExitOk;
    }
  } catch (const ssw::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
