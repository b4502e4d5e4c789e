#include "vrpsd/acceptance.hpp"

#include "vrpsd/selection.hpp"

namespace vrpsd {

ThresholdSchedule make_schedule(double reference_objective, double fraction, long iterations) {
  if (!(reference_objective > 0)) {
    throw std::invalid_argument("threshold schedule needs a positive reference objective");
  }
  if (fraction < 0 || fraction > 1) throw std::invalid_argument("fraction must be in [0, 1]");
  if (iterations < 1) throw std::invalid_argument("schedule needs at least one iteration");
  ThresholdSchedule s;
  s.start_threshold = reference_objective;
  s.end_threshold = fraction * reference_objective;
  s.num_iterations = iterations;
  return s;
}

AcceptDecision accept(double candidate_total, double current_total, double best_total,
                      ThresholdSchedule& schedule) {
  const double threshold = schedule.threshold_at(schedule.current_iteration);
  ++schedule.current_iteration;

  const double baseline = schedule.compare_to_current ? current_total : best_total;
  AcceptDecision d;
  d.accepted = candidate_total < baseline + threshold;
  if (candidate_total < best_total) {
    d.outcome_class = kOutcomeNewGlobal;
  } else if (d.accepted && candidate_total < current_total) {
    d.outcome_class = kOutcomeBetter;
  } else if (d.accepted) {
    d.outcome_class = kOutcomeAccepted;
  } else {
    d.outcome_class = kOutcomeRejected;
  }
  return d;
}

}  // namespace vrpsd
