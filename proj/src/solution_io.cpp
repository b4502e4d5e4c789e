#include "vrpsd/solution_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "vrpsd/objective.hpp"

namespace vrpsd {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void write_solution(std::ostream& out, const Solution& solution, const RequestSet& requests) {
  out << "# vrpsd solution\n";
  out << "feasible " << (solution.feasible ? 1 : 0) << '\n';
  out << "deadline_misses " << solution.violations.deadline_misses << '\n';
  out << "back_to_back_pairs " << solution.violations.back_to_back_pairs << '\n';
  out << "overlong_shifts " << solution.violations.overlong_shifts << '\n';
  out << "total_service_time " << total_service_time(solution) << '\n';
  out << "objective_total " << fmt(solution.objective.total) << '\n';
  out << "objective_setup " << fmt(solution.objective.shift_setup_cost) << '\n';
  out << "objective_time " << fmt(solution.objective.time_cost) << '\n';
  out << "objective_violation " << fmt(solution.objective.violation_cost) << '\n';
  out << "objective_shape " << fmt(solution.objective.shift_shape_cost) << '\n';
  for (const auto& shift : solution.shifts) {
    out << "shift " << shift.shift_id << " start " << shift.start_time << " duration "
        << shift.duration << " downtime " << shift.downtime_total << '\n';
    for (std::size_t k = 0; k < shift.stops.size(); ++k) {
      const auto& t = shift.timing[k];
      out << "stop " << requests[shift.stops[k]].id << " arrival " << t.arrival
          << " service_start " << t.service_start << " completion " << t.completion << '\n';
    }
    out << "end\n";
  }
}

Solution read_solution(std::istream& in, const Instance& instance, const std::string& context) {
  Solution solution;
  std::string line;
  int line_no = 0;
  Shift* open_shift = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    const std::string where = context + ": line " + std::to_string(line_no);
    if (key == "shift") {
      std::string id, kw_start, kw;
      Seconds start = 0;
      ls >> id >> kw_start >> start;
      if (kw_start != "start" || !ls) throw LoadError(where + ": malformed shift header");
      Shift shift;
      shift.shift_id = id;
      shift.start_time = start;
      solution.shifts.push_back(std::move(shift));
      open_shift = &solution.shifts.back();
    } else if (key == "stop") {
      if (!open_shift) throw LoadError(where + ": stop outside a shift block");
      std::string id;
      ls >> id;
      const int ri = instance.requests.index_of(id);
      if (ri < 0) throw LoadError(where + ": unknown request id '" + id + "'");
      open_shift->stops.push_back(ri);
    } else if (key == "end") {
      open_shift = nullptr;
    }
    // header metrics are read by the audit, not here
  }
  return solution;
}

AuditReport audit_solution(std::istream& in, const Instance& instance,
                           const std::string& context) {
  std::stringstream buffer;
  buffer << in.rdbuf();

  AuditReport report;
  {
    std::istringstream header(buffer.str());
    std::string line;
    while (std::getline(header, line)) {
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key == "feasible") {
        int v = 0;
        ls >> v;
        report.reported_feasible = v != 0;
      } else if (key == "total_service_time") {
        ls >> report.reported_total_service_time;
      }
    }
  }

  std::istringstream body(buffer.str());
  Solution solution = read_solution(body, instance, context);
  refresh(solution, instance.matrix, instance.requests, instance.config.weights);
  report.recomputed = solution.violations;
  report.total_service_time = total_service_time(solution);
  report.objective_total = solution.objective.total;
  return report;
}

AuditReport audit_solution_file(const std::string& path, const Instance& instance) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  return audit_solution(in, instance, path);
}

}  // namespace vrpsd
