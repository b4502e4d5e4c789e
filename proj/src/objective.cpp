#include "vrpsd/objective.hpp"

#include <cmath>
#include <string>

namespace vrpsd {

void ObjectiveWeights::validate(Seconds horizon, int shift_count) const {
  const double big_m_floor = static_cast<double>(horizon) * shift_count;
  auto check_penalty = [&](double p, const char* name) {
    if (!(p > big_m_floor)) {
      throw StructuralError(std::string(name) + " must exceed horizon * shift_count (" +
                            std::to_string(static_cast<long long>(big_m_floor)) + ")");
    }
  };
  check_penalty(penalty_per_deadline_miss, "penalty_per_deadline_miss");
  check_penalty(penalty_per_back_to_back, "penalty_per_back_to_back");
  check_penalty(penalty_per_overlong_shift, "penalty_per_overlong_shift");
  if (setup_per_shift < 0 || downtime_surcharge_factor < 0 ||
      short_shift_penalty_per_second < 0 || dissimilarity_weight < 0) {
    throw StructuralError("objective weights must be nonnegative");
  }
}

namespace {

struct ShiftCosts {
  double setup = 0, time = 0, violation = 0, shape = 0;
};

ShiftCosts shift_costs(const Shift& shift, const CostMatrix& matrix, const RequestSet& requests,
                       const ObjectiveWeights& w) {
  ShiftCosts c;
  if (shift.empty()) return c;  // a shift counts only when it serves a customer

  c.setup = w.setup_per_shift;
  // duration = travel + service + downtime + fixed overheads; the surcharge
  // adds an extra multiple of downtime on top of its plain-time share.
  c.time = static_cast<double>(shift.duration - kShiftOverhead) +
           w.downtime_surcharge_factor * static_cast<double>(shift.downtime_total);

  for (std::size_t k = 0; k < shift.stops.size(); ++k) {
    const Request& req = requests[shift.stops[k]];
    if (shift.timing[k].completion > req.window_end) c.violation += w.penalty_per_deadline_miss;
    if (k + 1 < shift.stops.size()) {
      const Request& next = requests[shift.stops[k + 1]];
      if (matrix.back_to_back(req.matrix_index, next.matrix_index)) {
        c.violation += w.penalty_per_back_to_back;
      }
    }
  }

  if (shift.duration > kMaxShiftDuration) c.shape += w.penalty_per_overlong_shift;
  if (shift.duration < w.short_shift_threshold) {
    c.shape += w.short_shift_penalty_per_second *
               static_cast<double>(w.short_shift_threshold - shift.duration);
  }
  return c;
}

}  // namespace

ObjectiveBreakdown evaluate(const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests, const ObjectiveWeights& weights) {
  ObjectiveBreakdown b;
  for (const auto& shift : solution.shifts) {
    ShiftCosts c = shift_costs(shift, matrix, requests, weights);
    b.shift_setup_cost += c.setup;
    b.time_cost += c.time;
    b.violation_cost += c.violation;
    b.shift_shape_cost += c.shape;
  }

  if (weights.dissimilarity_weight > 0) {
    double sum = 0;
    int used = 0;
    for (const auto& shift : solution.shifts) {
      if (!shift.empty()) {
        sum += static_cast<double>(shift.duration);
        ++used;
      }
    }
    if (used > 1) {
      const double mean = sum / used;
      for (const auto& shift : solution.shifts) {
        if (!shift.empty()) {
          b.shift_shape_cost +=
              weights.dissimilarity_weight * std::abs(static_cast<double>(shift.duration) - mean);
        }
      }
    }
  }

  b.total = b.shift_setup_cost + b.time_cost + b.violation_cost + b.shift_shape_cost;
  return b;
}

Seconds total_service_time(const Solution& solution) {
  Seconds total = 0;
  for (const auto& shift : solution.shifts) {
    if (!shift.empty()) total += shift.duration;
  }
  return total;
}

void refresh(Solution& solution, const CostMatrix& matrix, const RequestSet& requests,
             const ObjectiveWeights& weights) {
  for (auto& shift : solution.shifts) evaluate_shift_timing(shift, matrix, requests);
  solution.violations = count_violations(solution, matrix, requests);
  solution.feasible = solution.violations.total() == 0;
  solution.objective = evaluate(solution, matrix, requests, weights);
}

double shift_contribution(const Shift& shift, const CostMatrix& matrix,
                          const RequestSet& requests, const ObjectiveWeights& weights) {
  ShiftCosts c = shift_costs(shift, matrix, requests, weights);
  return c.setup + c.time + c.violation + c.shape;
}

}  // namespace vrpsd
