#include "vrpsd/model.hpp"

#include <algorithm>

namespace vrpsd {

int RequestSet::add(Request r) {
  if (by_id_.count(r.id)) {
    throw StructuralError("duplicate request id: " + r.id);
  }
  int idx = static_cast<int>(items_.size());
  by_id_.emplace(r.id, idx);
  items_.push_back(std::move(r));
  return idx;
}

CostMatrix::CostMatrix(std::vector<std::string> stop_ids, int depot_index)
    : stop_ids_(std::move(stop_ids)), depot_(depot_index) {
  const std::size_t n = stop_ids_.size();
  cost_.assign(n * n, 0);
  b2b_.assign(n * n, 0);
  service_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(stop_ids_[i], static_cast<int>(i));
  if (index_.size() != n) throw StructuralError("duplicate stop id in matrix");
  if (depot_ < 0 || depot_ >= static_cast<int>(n)) throw StructuralError("depot index out of range");
}

void evaluate_shift_timing(Shift& shift, const CostMatrix& matrix, const RequestSet& requests) {
  shift.timing.assign(shift.stops.size(), StopTiming{});
  shift.downtime_total = 0;

  Seconds ready = shift.start_time + kCheckIn;
  int prev = matrix.depot();
  for (std::size_t k = 0; k < shift.stops.size(); ++k) {
    int ri = shift.stops[k];
    if (ri < 0 || ri >= static_cast<int>(requests.size())) {
      throw StructuralError("unknown stop in shift " + shift.shift_id);
    }
    const Request& req = requests[ri];
    if (req.matrix_index < 0) {
      throw StructuralError("request " + req.id + " has no matrix entry");
    }
    StopTiming& t = shift.timing[k];
    // The matrix bundles travel and the destination's service time.
    t.arrival = ready + matrix.cost(prev, req.matrix_index) - req.service_duration;
    t.service_start = std::max(t.arrival, req.window_start);
    t.completion = t.service_start + req.service_duration;
    shift.downtime_total += t.service_start - t.arrival;
    ready = t.completion;
    prev = req.matrix_index;
  }
  shift.completion_time = ready + matrix.cost(prev, matrix.depot()) + kCheckOut + kBreak;
  shift.duration = shift.completion_time - shift.start_time;
}

Violations count_violations(const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests) {
  Violations v;
  for (const auto& shift : solution.shifts) {
    for (std::size_t k = 0; k < shift.stops.size(); ++k) {
      const Request& req = requests[shift.stops[k]];
      if (shift.timing[k].completion > req.window_end) ++v.deadline_misses;
      if (k + 1 < shift.stops.size()) {
        const Request& next = requests[shift.stops[k + 1]];
        if (matrix.back_to_back(req.matrix_index, next.matrix_index)) ++v.back_to_back_pairs;
      }
    }
    if (shift.duration > kMaxShiftDuration) ++v.overlong_shifts;
  }
  return v;
}

RequestSet expand_multi_visits(std::vector<Request> raw_requests) {
  RequestSet out;
  std::unordered_map<std::string, int> groups;
  for (auto& r : raw_requests) {
    if (r.window_start >= r.window_end) {
      throw StructuralError("request " + r.id + ": window_start must precede window_end");
    }
    if (r.service_duration <= 0) {
      throw StructuralError("request " + r.id + ": service_duration must be positive");
    }
    std::string key = r.site_id + "\x1f" + r.service_type;
    auto [it, inserted] = groups.emplace(key, static_cast<int>(groups.size()));
    r.back_to_back_group = it->second;
    out.add(std::move(r));
  }
  return out;
}

Solution strip_redundant_shifts(const Solution& solution) {
  Solution out = solution;
  out.shifts.clear();
  for (const auto& s : solution.shifts) {
    if (!s.empty()) out.shifts.push_back(s);
  }
  return out;
}

}  // namespace vrpsd
