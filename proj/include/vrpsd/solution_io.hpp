#ifndef VRPSD_SOLUTION_IO_HPP
#define VRPSD_SOLUTION_IO_HPP

#include <iosfwd>
#include <string>

#include "vrpsd/ingest.hpp"
#include "vrpsd/model.hpp"

namespace vrpsd {

// Human-diffable solution listing: per shift the start time and each stop
// with arrival / service start / completion, plus the objective breakdown.
void write_solution(std::ostream& out, const Solution& solution, const RequestSet& requests);

// Reads the stop sequences back. Derived timing is not trusted from the
// file; call refresh() to recompute.
Solution read_solution(std::istream& in, const Instance& instance, const std::string& context);

struct AuditReport {
  Violations recomputed;
  Seconds total_service_time = 0;
  double objective_total = 0;

  // As claimed by the file, for cross-checking against the recomputation.
  bool reported_feasible = false;
  Seconds reported_total_service_time = 0;

  bool feasible() const { return recomputed.total() == 0; }
  bool consistent() const {
    return feasible() == reported_feasible &&
           total_service_time == reported_total_service_time;
  }
};

// Independent validator: reparses the file, rebuilds all timing from scratch
// and recounts violations.
AuditReport audit_solution(std::istream& in, const Instance& instance,
                           const std::string& context);
AuditReport audit_solution_file(const std::string& path, const Instance& instance);

}  // namespace vrpsd

#endif
