#ifndef VRPSD_BASELINE_HPP
#define VRPSD_BASELINE_HPP

#include "vrpsd/orchestrate.hpp"

namespace vrpsd {

// Steady-state GA benchmark: random parent pair, order crossover, relocation
// mutation, offspring replaces the least fit individual. Representation is a
// request permutation plus per-shift segment sizes.
struct Chromosome {
  std::vector<int> perm;   // request indices
  std::vector<int> sizes;  // stops per shift, sums to |perm|
  double fitness = 0;
};

Solution decode(const Chromosome& c, const Instance& instance);

RunResult run_ssga(const Instance& instance, const RunBudget& budget);

}  // namespace vrpsd

#endif
