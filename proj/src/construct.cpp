#include "vrpsd/construct.hpp"

#include <algorithm>
#include <limits>

namespace vrpsd {

namespace {

struct AppendOutcome {
  bool feasible = false;
  Seconds arrival = 0;  // completion of the current route plus travel to the stop
};

// Appending at the route end leaves earlier stops untouched (monotone forward
// sweep), so only the new stop and the return leg need checking.
AppendOutcome try_append(const Shift& shift, const Request& req, const CostMatrix& matrix,
                         const RequestSet& requests) {
  AppendOutcome out;
  Seconds ready = shift.start_time + kCheckIn;
  int prev = matrix.depot();
  if (!shift.empty()) {
    ready = shift.timing.back().completion;
    prev = requests[shift.stops.back()].matrix_index;
  }
  out.arrival = ready + matrix.cost(prev, req.matrix_index) - req.service_duration;
  const Seconds service_start = std::max(out.arrival, req.window_start);
  const Seconds completion = service_start + req.service_duration;
  const Seconds duration =
      completion + matrix.cost(req.matrix_index, matrix.depot()) + kCheckOut + kBreak -
      shift.start_time;
  out.feasible = completion <= req.window_end && duration <= kMaxShiftDuration &&
                 (prev == matrix.depot() || !matrix.back_to_back(prev, req.matrix_index));
  return out;
}

}  // namespace

Solution build_initial(const RequestSet& requests, const CostMatrix& matrix,
                       const InstanceConfig& config, RngStream& rng) {
  Solution solution;
  solution.shifts.resize(static_cast<std::size_t>(config.shift_count()));
  for (int s = 0; s < config.shift_count(); ++s) {
    Shift& shift = solution.shifts[static_cast<std::size_t>(s)];
    shift.shift_id = "S" + std::to_string(s + 1);
    shift.start_time = config.shift_start_times[static_cast<std::size_t>(s)];
    evaluate_shift_timing(shift, matrix, requests);
  }

  std::vector<int> order(requests.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (requests[a].window_end != requests[b].window_end) {
      return requests[a].window_end < requests[b].window_end;
    }
    return requests[a].id < requests[b].id;
  });

  for (int ri : order) {
    const Request& req = requests[ri];
    int chosen = -1;
    Seconds best_arrival = std::numeric_limits<Seconds>::max();
    for (std::size_t s = 0; s < solution.shifts.size(); ++s) {
      AppendOutcome o = try_append(solution.shifts[s], req, matrix, requests);
      if (o.feasible && o.arrival < best_arrival) {
        best_arrival = o.arrival;
        chosen = static_cast<int>(s);
      }
    }
    if (chosen < 0) chosen = static_cast<int>(rng.below(solution.shifts.size()));
    Shift& shift = solution.shifts[static_cast<std::size_t>(chosen)];
    shift.stops.push_back(ri);
    evaluate_shift_timing(shift, matrix, requests);
  }

  solution.violations = count_violations(solution, matrix, requests);
  solution.feasible = solution.violations.total() == 0;
  return solution;
}

}  // namespace vrpsd
