#ifndef VRPSD_OBJECTIVE_HPP
#define VRPSD_OBJECTIVE_HPP

#include "vrpsd/model.hpp"

namespace vrpsd {

// Objective component weights. The penalty constants are validated to be
// large enough that one violation outweighs any feasible time difference on
// the instance (big-M, feasibility-first).
struct ObjectiveWeights {
  double setup_per_shift = 1800.0;
  double downtime_surcharge_factor = 1.0;  // downtime counts (1 + factor)x vs travel
  double penalty_per_deadline_miss = 1e7;
  double penalty_per_back_to_back = 1e7;
  double penalty_per_overlong_shift = 1e7;
  double short_shift_penalty_per_second = 0.2;
  Seconds short_shift_threshold = 28800;  // shifts under 8 h are discouraged
  double dissimilarity_weight = 0.0;      // opt-in soft term

  // Throws StructuralError when any penalty fails the big-M requirement
  // penalty > horizon * shift_count, or any weight is negative.
  void validate(Seconds horizon, int shift_count) const;
};

// Full component breakdown. Empty shifts contribute nothing; incomplete
// solutions are evaluated on assigned stops only. Requires derived timing.
ObjectiveBreakdown evaluate(const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests, const ObjectiveWeights& weights);

// Reporting metric: sum of shift durations over non-empty shifts. Distinct
// from the search objective.
Seconds total_service_time(const Solution& solution);

// Retimes every shift and refreshes the cached objective, violation counts
// and feasible flag in place.
void refresh(Solution& solution, const CostMatrix& matrix, const RequestSet& requests,
             const ObjectiveWeights& weights);

// Objective contribution of a single shift, excluding the cross-shift
// dissimilarity term. Used for incremental insertion-cost evaluation; must
// agree with evaluate() when dissimilarity_weight is 0.
double shift_contribution(const Shift& shift, const CostMatrix& matrix,
                          const RequestSet& requests, const ObjectiveWeights& weights);

}  // namespace vrpsd

#endif
