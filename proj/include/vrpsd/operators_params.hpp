#ifndef VRPSD_OPERATORS_PARAMS_HPP
#define VRPSD_OPERATORS_PARAMS_HPP

namespace vrpsd {

// Tunables shared by the destroy/repair catalog.
struct OperatorParams {
  // Number of removals for the n-removal destroys. 0 means automatic:
  // max(2, ceil(5% of request count)).
  int remove_count = 0;
  int regret_k = 2;

  int resolve_remove_count(int request_count) const {
    if (remove_count > 0) return remove_count;
    int five_percent = (request_count + 19) / 20;
    return five_percent < 2 ? 2 : five_percent;
  }
};

}  // namespace vrpsd

#endif
