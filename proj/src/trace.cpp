#include "vrpsd/trace.hpp"

#include <cstdio>
#include <ostream>

namespace vrpsd {

namespace {

std::string fmt_total(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void write_trace(std::ostream& out, const ConvergenceTrace& trace) {
  out << "iteration,phase,operator,candidate_total,best_total,candidate_feasible,best_feasible,"
         "outcome";
  if (trace.include_wall_time) out << ",wall_ms";
  out << '\n';
  for (const auto& r : trace.records) {
    out << r.iteration << ',' << r.phase << ',' << r.op << ',' << fmt_total(r.candidate_total)
        << ',' << fmt_total(r.best_total) << ',' << (r.candidate_feasible ? 1 : 0) << ','
        << (r.best_feasible ? 1 : 0) << ',' << r.outcome_class;
    if (trace.include_wall_time) out << ',' << r.wall_ms;
    out << '\n';
  }
}

}  // namespace vrpsd
