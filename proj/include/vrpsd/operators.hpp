#ifndef VRPSD_OPERATORS_HPP
#define VRPSD_OPERATORS_HPP

#include <string>
#include <vector>

#include "vrpsd/model.hpp"
#include "vrpsd/objective.hpp"
#include "vrpsd/operators_params.hpp"
#include "vrpsd/rng.hpp"

namespace vrpsd {

enum class OperatorKind { destroy, repair, tabu };

inline constexpr int kDestroyCount = 17;
inline constexpr int kRepairCount = 17;
inline constexpr int kTabuCount = 2;

struct OperatorId {
  OperatorKind kind = OperatorKind::destroy;
  int index = 1;  // 1-based catalog number

  bool operator==(const OperatorId& o) const { return kind == o.kind && index == o.index; }
};

std::string operator_name(OperatorId id);  // "D3", "R16", "T1"

// Destroyed solution plus the removal order, which several repairs consume.
struct DestroyResult {
  Solution partial;
  std::vector<int> removed;  // request indices, in removal order
};

// Applies one catalog destroy. A destroy whose precondition is unmet (e.g.
// no overlong shift for D13) removes zero stops. Shifts touched by removals
// are retimed before returning.
DestroyResult apply_destroy(OperatorId id, const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests, const ObjectiveWeights& weights,
                            RngStream& rng, const OperatorParams& params);

// Reinserts every removed customer exactly once and returns the refreshed
// complete solution.
Solution apply_repair(OperatorId id, const DestroyResult& destroyed, const CostMatrix& matrix,
                      const RequestSet& requests, const ObjectiveWeights& weights, RngStream& rng,
                      const OperatorParams& params);

// Regret-k selection: the customer whose k-th best insertion cost exceeds
// its best by the most. Customers with fewer than k open positions get
// infinite regret and are placed first.
int regret_select(const std::vector<int>& removed, const Solution& partial,
                  const CostMatrix& matrix, const RequestSet& requests,
                  const ObjectiveWeights& weights, int k);

// max(0, service completion - deadline) for an assigned request. Throws
// StructuralError when the request is unassigned.
Seconds lateness(int request_index, const Solution& solution, const RequestSet& requests);

}  // namespace vrpsd

#endif
