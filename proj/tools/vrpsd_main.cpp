#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vrpsd/experiment.hpp"
#include "vrpsd/generate.hpp"
#include "vrpsd/solution_io.hpp"

namespace {

struct InstancePaths {
  std::string matrix;
  std::string requests;
  std::string config;
};

void add_instance_options(CLI::App* cmd, InstancePaths& paths) {
  cmd->add_option("--matrix", paths.matrix, "cost matrix CSV")->required();
  cmd->add_option("--requests", paths.requests, "requests file")->required();
  cmd->add_option("--config", paths.config, "instance config file")->required();
}

// Applies "key value" overrides by re-parsing the config file with the
// override lines appended, so CLI overrides accept exactly the config keys.
vrpsd::InstanceConfig load_config_with_overrides(const std::string& path,
                                                 const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw vrpsd::LoadError("cannot open " + path);
  std::stringstream text;
  text << in.rdbuf() << '\n';
  for (const auto& line : overrides) text << line << '\n';
  return vrpsd::parse_config(text, path);
}

int cmd_solve(const InstancePaths& paths, vrpsd::ExperimentSpec& spec, double time_limit,
              long iteration_limit, bool fail_on_infeasible, const std::string& summary_path,
              const std::vector<std::string>& overrides) {
  if (iteration_limit > 0) {
    spec.budget.use_iterations = true;
    spec.budget.iterations = iteration_limit;
  } else if (time_limit > 0) {
    spec.budget.use_iterations = false;
    spec.budget.wall_seconds = time_limit;
  } else {
    std::cerr << "one of --iteration-limit or --time-limit-seconds is required\n";
    return 2;
  }

  vrpsd::Instance instance;
  instance.config = load_config_with_overrides(paths.config, overrides);
  instance.matrix = vrpsd::load_cost_matrix(paths.matrix, instance.config.depot_id);
  instance.requests = vrpsd::load_requests(paths.requests);
  vrpsd::link_instance(instance);
  vrpsd::ExperimentSummary summary = vrpsd::run_experiment(spec, instance);
  vrpsd::print_summary(std::cout, spec, summary);

  if (!summary_path.empty()) {
    std::ofstream out(summary_path);
    vrpsd::write_summary_json(out, spec, summary);
  } else if (!spec.output_dir.empty()) {
    std::ofstream out(spec.output_dir + "/summary.json");
    vrpsd::write_summary_json(out, spec, summary);
  }

  if (summary.failed_count > 0) return 1;
  if (fail_on_infeasible && summary.feasible_count < static_cast<int>(summary.attempts.size())) {
    return 1;
  }
  return 0;
}

int cmd_audit(const InstancePaths& paths, const std::string& solution_path) {
  vrpsd::Instance instance = vrpsd::load_instance(paths.matrix, paths.requests, paths.config);
  vrpsd::AuditReport report = vrpsd::audit_solution_file(solution_path, instance);
  std::cout << "deadline_misses " << report.recomputed.deadline_misses << '\n'
            << "back_to_back_pairs " << report.recomputed.back_to_back_pairs << '\n'
            << "overlong_shifts " << report.recomputed.overlong_shifts << '\n'
            << "total_service_time " << report.total_service_time << '\n'
            << "feasible " << (report.feasible() ? 1 : 0) << '\n'
            << "matches_reported " << (report.consistent() ? 1 : 0) << '\n';
  return report.feasible() && report.consistent() ? 0 : 1;
}

int cmd_gen(const vrpsd::GenerateOptions& options, const std::string& out_dir) {
  vrpsd::Instance instance = vrpsd::generate_instance(options);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir + "/matrix.csv");
    vrpsd::write_cost_matrix(out, instance.matrix);
  }
  {
    std::ofstream out(out_dir + "/requests.txt");
    vrpsd::write_requests(out, instance.requests);
  }
  {
    std::ofstream out(out_dir + "/config.txt");
    vrpsd::write_config(out, instance.config);
  }
  std::cout << "wrote " << instance.requests.size() << " requests, "
            << instance.config.shift_count() << " shifts to " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VRPSD metaheuristic solver"};
  app.require_subcommand(1);

  InstancePaths paths;
  vrpsd::ExperimentSpec spec;
  std::string algorithm = "hybrid";
  double time_limit = 0;
  long iteration_limit = 0;
  bool fail_on_infeasible = false;
  bool no_trace = false;
  std::string summary_path;

  auto* solve = app.add_subcommand("solve", "run an experiment");
  add_instance_options(solve, paths);
  solve->add_option("--algorithm", algorithm, "ssga | alns-ta | multiphase | hybrid");
  solve->add_option("--time-limit-seconds", time_limit, "wall-clock budget per attempt");
  solve->add_option("--iteration-limit", iteration_limit,
                    "candidate-evaluation budget per attempt (deterministic mode)");
  solve->add_option("--attempts", spec.attempts, "independent attempts");
  solve->add_option("--seed", spec.budget.seed, "master seed; attempt k uses seed+k");
  solve->add_option("--seeds", spec.seeds, "explicit per-attempt seeds");
  solve->add_option("--out", spec.output_dir, "output directory for solutions and traces");
  solve->add_option("--summary-json", summary_path, "machine-readable summary path");
  solve->add_option("--round-iterations", spec.budget.round_iterations,
                    "hybrid round length in iteration mode");
  solve->add_option("--round-seconds", spec.budget.round_wall_seconds,
                    "hybrid round length in wall-clock mode");
  std::vector<std::string> overrides;
  solve->add_option("--override", overrides,
                    "config override as \"key value\" (repeatable), e.g. "
                    "--override \"downtime_surcharge 0.5\"");
  solve->add_flag("--no-trace", no_trace, "skip convergence trace files");
  solve->add_flag("--fail-on-infeasible", fail_on_infeasible,
                  "nonzero exit unless every attempt is feasible");

  std::string solution_path;
  auto* audit = app.add_subcommand("audit", "independently validate a solution file");
  add_instance_options(audit, paths);
  audit->add_option("--solution", solution_path, "solution file to audit")->required();

  vrpsd::GenerateOptions gen_options;
  std::string gen_out = "data";
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--requests", gen_options.request_count, "number of requests");
  gen->add_option("--shifts", gen_options.shift_count, "number of shifts");
  gen->add_option("--seed", gen_options.seed, "generator seed");
  gen->add_option("--out", gen_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      spec.algorithm = vrpsd::algorithm_from_name(algorithm);
      spec.write_trace = !no_trace;
      return cmd_solve(paths, spec, time_limit, iteration_limit, fail_on_infeasible,
                       summary_path, overrides);
    }
    if (audit->parsed()) return cmd_audit(paths, solution_path);
    if (gen->parsed()) return cmd_gen(gen_options, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
