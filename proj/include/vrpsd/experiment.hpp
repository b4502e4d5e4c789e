#ifndef VRPSD_EXPERIMENT_HPP
#define VRPSD_EXPERIMENT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vrpsd/orchestrate.hpp"

namespace vrpsd {

enum class Algorithm { ssga, alns_ta, multiphase, hybrid };

Algorithm algorithm_from_name(const std::string& name);  // throws LoadError
std::string algorithm_name(Algorithm a);

// One experiment: N independent attempts of one algorithm on one instance,
// reported as min/max/mean total service time plus a feasibility tally.
struct ExperimentSpec {
  Algorithm algorithm = Algorithm::hybrid;
  RunBudget budget;            // per attempt; seed is the master seed
  int attempts = 1;
  std::vector<std::uint64_t> seeds;  // explicit per-attempt seeds; else derived from master
  std::string output_dir;      // per-attempt solution + trace files land here
  bool write_trace = true;
};

struct AttemptResult {
  std::uint64_t seed = 0;
  bool ok = false;          // attempt ran to completion
  std::string error;
  bool feasible = false;
  Seconds total_service_time = 0;
  double objective_total = 0;
  Seconds initial_total_service_time = 0;
  std::string solution_path;
  std::string trace_path;
};

struct ExperimentSummary {
  std::vector<AttemptResult> attempts;
  int feasible_count = 0;
  int failed_count = 0;
  Seconds min_total = 0;
  Seconds max_total = 0;
  double mean_total = 0;
};

ExperimentSummary run_experiment(const ExperimentSpec& spec, const Instance& instance);

// Table-style text summary and a machine-readable JSON document.
void print_summary(std::ostream& out, const ExperimentSpec& spec,
                   const ExperimentSummary& summary);
void write_summary_json(std::ostream& out, const ExperimentSpec& spec,
                        const ExperimentSummary& summary);

}  // namespace vrpsd

#endif
