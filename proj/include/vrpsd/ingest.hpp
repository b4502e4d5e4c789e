#ifndef VRPSD_INGEST_HPP
#define VRPSD_INGEST_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vrpsd/model.hpp"
#include "vrpsd/objective.hpp"
#include "vrpsd/operators_params.hpp"

namespace vrpsd {

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed fleet configuration: shift count and preset start times never change
// during the search.
struct InstanceConfig {
  std::string depot_id;
  std::vector<Seconds> shift_start_times;
  Seconds horizon = 86400;  // 24 h cycle; windows may exceed it

  ObjectiveWeights weights;
  OperatorParams op_params;

  // Search tunables, overridable per file/CLI. Defaults are the published
  // settings where one exists.
  double ta_fraction = 0.02;
  long ta_iterations = 9000;
  bool ta_compare_to_current = false;  // plain-TA experiment switch
  int tabu_capacity = 10;
  Seconds long_arc_threshold = 570;   // 9.5 min
  Seconds short_arc_threshold = 510;  // 8.5 min
  int ga_population = 50;
  double ga_mutation_rate = 0.1;

  int shift_count() const { return static_cast<int>(shift_start_times.size()); }
};

struct Instance {
  CostMatrix matrix;
  RequestSet requests;
  InstanceConfig config;
};

// Cost matrix CSV: header row of stop ids, one row per stop in the same
// order. A zero entry between distinct non-depot stops is always a
// back-to-back marker, never a free edge; the marker is symmetrized and the
// cost entry stays 0.
CostMatrix load_cost_matrix(const std::string& path, const std::string& depot_id);
CostMatrix parse_cost_matrix(std::istream& in, const std::string& depot_id,
                             const std::string& context);
void write_cost_matrix(std::ostream& out, const CostMatrix& matrix);

// Requests file: blank-line separated key-value records, one per visit.
RequestSet load_requests(const std::string& path);
RequestSet parse_requests(std::istream& in, const std::string& context);
void write_requests(std::ostream& out, const RequestSet& requests);

// Config file: depot id, shift start times, optional objective/search keys.
InstanceConfig load_config(const std::string& path);
InstanceConfig parse_config(std::istream& in, const std::string& context);
void write_config(std::ostream& out, const InstanceConfig& config);

// Loads all three files and cross-validates: every request id must appear in
// the matrix (all missing ids reported in one error), the depot must exist,
// and the fleet must be non-empty. Fills Request::matrix_index and the
// matrix's per-stop service durations.
Instance load_instance(const std::string& matrix_path, const std::string& requests_path,
                       const std::string& config_path);

// Cross-validation step, exposed for in-memory instances.
void link_instance(Instance& instance);

}  // namespace vrpsd

#endif
