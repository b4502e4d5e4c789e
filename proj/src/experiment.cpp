#include "vrpsd/experiment.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "vrpsd/baseline.hpp"
#include "vrpsd/solution_io.hpp"

namespace vrpsd {

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "ssga") return Algorithm::ssga;
  if (name == "alns-ta") return Algorithm::alns_ta;
  if (name == "multiphase") return Algorithm::multiphase;
  if (name == "hybrid") return Algorithm::hybrid;
  throw LoadError("unknown algorithm '" + name + "' (ssga, alns-ta, multiphase, hybrid)");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::ssga: return "ssga";
    case Algorithm::alns_ta: return "alns-ta";
    case Algorithm::multiphase: return "multiphase";
    case Algorithm::hybrid: return "hybrid";
  }
  return "?";
}

namespace {

RunResult dispatch(Algorithm a, const Instance& instance, const RunBudget& budget) {
  switch (a) {
    case Algorithm::ssga: return run_ssga(instance, budget);
    case Algorithm::alns_ta: return run_algorithm1(instance, budget);
    case Algorithm::multiphase: return run_algorithm2(instance, budget);
    case Algorithm::hybrid: return run_algorithm3(instance, budget);
  }
  throw LoadError("unknown algorithm");
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentSpec& spec, const Instance& instance) {
  if (spec.attempts < 1) throw LoadError("attempts must be at least 1");
  ExperimentSummary summary;

  if (!spec.output_dir.empty()) std::filesystem::create_directories(spec.output_dir);

  for (int attempt = 0; attempt < spec.attempts; ++attempt) {
    AttemptResult result;
    result.seed = attempt < static_cast<int>(spec.seeds.size())
                      ? spec.seeds[static_cast<std::size_t>(attempt)]
                      : spec.budget.seed + static_cast<std::uint64_t>(attempt);
    try {
      RunBudget budget = spec.budget;
      budget.seed = result.seed;
      RunResult run = dispatch(spec.algorithm, instance, budget);

      Solution reported = strip_redundant_shifts(run.best);
      result.ok = true;
      result.feasible = run.best.feasible;
      result.total_service_time = total_service_time(run.best);
      result.objective_total = run.best.objective.total;
      result.initial_total_service_time = total_service_time(run.initial);

      if (!spec.output_dir.empty()) {
        const std::string stem = spec.output_dir + "/" + algorithm_name(spec.algorithm) +
                                 "_seed" + std::to_string(result.seed);
        result.solution_path = stem + ".solution.txt";
        std::ofstream sout(result.solution_path);
        write_solution(sout, reported, instance.requests);
        if (spec.write_trace) {
          result.trace_path = stem + ".trace.csv";
          std::ofstream tout(result.trace_path);
          write_trace(tout, run.trace);
        }
      }
    } catch (const std::exception& e) {
      // one crashed attempt fails only itself
      result.ok = false;
      result.error = e.what();
    }
    summary.attempts.push_back(std::move(result));
  }

  bool any = false;
  double sum = 0;
  int counted = 0;
  for (const auto& a : summary.attempts) {
    if (!a.ok) {
      ++summary.failed_count;
      continue;
    }
    if (a.feasible) ++summary.feasible_count;
    if (!any) {
      summary.min_total = summary.max_total = a.total_service_time;
      any = true;
    } else {
      summary.min_total = std::min(summary.min_total, a.total_service_time);
      summary.max_total = std::max(summary.max_total, a.total_service_time);
    }
    sum += static_cast<double>(a.total_service_time);
    ++counted;
  }
  if (counted > 0) summary.mean_total = sum / counted;
  return summary;
}

void print_summary(std::ostream& out, const ExperimentSpec& spec,
                   const ExperimentSummary& summary) {
  out << "Algorithm  Attempts  Feasible  Min Total (s)  Max Total (s)  Average Total (s)\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-10s %-9d %-9d %-14lld %-14lld %.1f\n",
                algorithm_name(spec.algorithm).c_str(),
                static_cast<int>(summary.attempts.size()), summary.feasible_count,
                static_cast<long long>(summary.min_total),
                static_cast<long long>(summary.max_total), summary.mean_total);
  out << buf;
  for (const auto& a : summary.attempts) {
    if (!a.ok) out << "attempt seed=" << a.seed << " FAILED: " << a.error << '\n';
  }
}

void write_summary_json(std::ostream& out, const ExperimentSpec& spec,
                        const ExperimentSummary& summary) {
  nlohmann::json doc;
  doc["algorithm"] = algorithm_name(spec.algorithm);
  doc["attempts"] = nlohmann::json::array();
  for (const auto& a : summary.attempts) {
    nlohmann::json j;
    j["seed"] = a.seed;
    j["ok"] = a.ok;
    if (!a.ok) j["error"] = a.error;
    j["feasible"] = a.feasible;
    j["total_service_time"] = a.total_service_time;
    j["objective_total"] = a.objective_total;
    j["initial_total_service_time"] = a.initial_total_service_time;
    if (!a.solution_path.empty()) j["solution_file"] = a.solution_path;
    if (!a.trace_path.empty()) j["trace_file"] = a.trace_path;
    doc["attempts"].push_back(std::move(j));
  }
  doc["feasible_count"] = summary.feasible_count;
  doc["failed_count"] = summary.failed_count;
  doc["min_total_service_time"] = summary.min_total;
  doc["max_total_service_time"] = summary.max_total;
  doc["mean_total_service_time"] = summary.mean_total;
  out << doc.dump(2) << '\n';
}

}  // namespace vrpsd
