#ifndef VRPSD_GENERATE_HPP
#define VRPSD_GENERATE_HPP

#include <cstdint>

#include "vrpsd/ingest.hpp"

namespace vrpsd {

// Synthetic instance generator. Builds a hidden feasible schedule first and
// derives time windows from it, so every generated instance is solvable;
// window slack, multi-visit sites and back-to-back pairs make the greedy
// initial solution typically infeasible anyway.
struct GenerateOptions {
  int request_count = 251;
  int shift_count = 7;
  std::uint64_t seed = 2024;

  double narrow_window_share = 0.15;  // windows as tight as a few minutes
  double revisit_share = 0.15;        // visits that reuse an existing site+service
};

Instance generate_instance(const GenerateOptions& options);

}  // namespace vrpsd

#endif
