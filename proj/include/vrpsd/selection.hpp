#ifndef VRPSD_SELECTION_HPP
#define VRPSD_SELECTION_HPP

#include <array>
#include <vector>

#include "vrpsd/operators.hpp"
#include "vrpsd/rng.hpp"

namespace vrpsd {

// Candidate outcome classes and their weight-update scores.
enum OutcomeClass : int {
  kOutcomeNewGlobal = 0,
  kOutcomeBetter = 1,    // better than the current solution, not the global best
  kOutcomeAccepted = 2,
  kOutcomeRejected = 3,
};

// Weighted operator registry with the multiplicative-decay weight update
// w_new = d * w_old + (1 - d) * s_j. Initial weights are 1, scores
// [6, 5, 1, 0], decay 0.9. A raw weight may decay toward 0; the floor is
// applied only at pick time so the update arithmetic stays exact while no
// operator is permanently starved.
struct OperatorBank {
  struct Entry {
    OperatorId id;
    double weight = 1.0;
  };
  std::vector<Entry> entries;
  double decay = 0.9;
  std::array<double, 4> scores{6.0, 5.0, 1.0, 0.0};
  double weight_floor = 1e-6;
};

OperatorBank make_bank(OperatorKind kind, int count);

// Weight-proportional pick using the floored effective weights.
OperatorId roulette_pick(const OperatorBank& bank, RngStream& rng);

// Applies the update to exactly one entry. Throws on unknown id.
void update_weight(OperatorBank& bank, OperatorId id, int outcome_class);

}  // namespace vrpsd

#endif
