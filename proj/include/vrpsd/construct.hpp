#ifndef VRPSD_CONSTRUCT_HPP
#define VRPSD_CONSTRUCT_HPP

#include "vrpsd/ingest.hpp"
#include "vrpsd/model.hpp"
#include "vrpsd/rng.hpp"

namespace vrpsd {

// Greedy initial solution: customers in nondecreasing deadline order (ties
// by request id) are appended to the violation-free route reaching them
// earliest; when no route qualifies, a uniformly random route takes the
// customer. Never fails, but the result may be infeasible.
Solution build_initial(const RequestSet& requests, const CostMatrix& matrix,
                       const InstanceConfig& config, RngStream& rng);

}  // namespace vrpsd

#endif
