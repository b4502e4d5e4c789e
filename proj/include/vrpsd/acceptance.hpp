#ifndef VRPSD_ACCEPTANCE_HPP
#define VRPSD_ACCEPTANCE_HPP

#include <stdexcept>

namespace vrpsd {

// Linear record-to-record threshold: starts at the reference objective,
// shrinks linearly to end_threshold over num_iterations, then stays clamped
// at the end value for the remainder of the run.
struct ThresholdSchedule {
  double start_threshold = 0;
  double end_threshold = 0;
  long num_iterations = 9000;
  long current_iteration = 0;
  bool compare_to_current = false;  // plain-TA variant; default is record-to-record

  double threshold_at(long iteration) const {
    if (iteration >= num_iterations) return end_threshold;
    double frac = static_cast<double>(iteration) / static_cast<double>(num_iterations);
    return start_threshold + (end_threshold - start_threshold) * frac;
  }
};

ThresholdSchedule make_schedule(double reference_objective, double fraction = 0.02,
                                long iterations = 9000);

struct AcceptDecision {
  bool accepted = false;
  int outcome_class = 3;  // OutcomeClass values
};

// Record-to-record criterion: accept iff candidate < best + threshold
// (strict at the boundary). Advances the iteration counter.
AcceptDecision accept(double candidate_total, double current_total, double best_total,
                      ThresholdSchedule& schedule);

}  // namespace vrpsd

#endif
