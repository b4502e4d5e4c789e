#include "vrpsd/tabu.hpp"

namespace vrpsd {

ArcClass classify_arc(int i, int j, const CostMatrix& matrix, Seconds long_threshold,
                      Seconds short_threshold) {
  if (i == matrix.depot() || j == matrix.depot()) return ArcClass::neither;
  const Seconds travel = matrix.travel(i, j);
  if (travel > long_threshold) return ArcClass::long_arc;
  if (travel < short_threshold) return ArcClass::short_arc;
  return ArcClass::neither;
}

namespace {

struct StopRef {
  int shift;
  int pos;
};

std::vector<StopRef> assigned_stops(const Solution& solution) {
  std::vector<StopRef> refs;
  for (int s = 0; s < static_cast<int>(solution.shifts.size()); ++s) {
    for (int p = 0; p < static_cast<int>(solution.shifts[s].stops.size()); ++p) {
      refs.push_back({s, p});
    }
  }
  return refs;
}

int& stop_at(Solution& solution, StopRef r) {
  return solution.shifts[static_cast<std::size_t>(r.shift)].stops[static_cast<std::size_t>(r.pos)];
}

// First long arc in the route, scanning consecutive pairs from a random
// offset. Returns the position of the arc's tail or -1.
int find_long_arc(const Shift& shift, const CostMatrix& matrix, const RequestSet& requests,
                  RngStream& rng, Seconds long_thr, Seconds short_thr) {
  const int arcs = static_cast<int>(shift.stops.size()) - 1;
  if (arcs <= 0) return -1;
  const int offset = static_cast<int>(rng.below(static_cast<std::size_t>(arcs)));
  for (int k = 0; k < arcs; ++k) {
    const int a = (offset + k) % arcs;
    const int mi = requests[shift.stops[static_cast<std::size_t>(a)]].matrix_index;
    const int mj = requests[shift.stops[static_cast<std::size_t>(a) + 1]].matrix_index;
    if (classify_arc(mi, mj, matrix, long_thr, short_thr) == ArcClass::long_arc) return a;
  }
  return -1;
}

}  // namespace

Solution random_swap(const Solution& solution, const RequestSet& requests, RngStream& rng,
                     TabuList& tabu) {
  auto refs = assigned_stops(solution);
  if (refs.size() < 2) return solution;

  const std::size_t i = rng.below(refs.size());
  std::size_t j = rng.below(refs.size() - 1);
  if (j >= i) ++j;

  Solution out = solution;
  int& a = stop_at(out, refs[i]);
  int& b = stop_at(out, refs[j]);
  const int ma = requests[a].matrix_index;
  const int mb = requests[b].matrix_index;
  if (tabu.contains(ma, mb)) return solution;
  std::swap(a, b);
  tabu.push(ma, mb);
  return out;
}

Solution long_arc_swap(const Solution& solution, const CostMatrix& matrix,
                       const RequestSet& requests, RngStream& rng, TabuList& tabu,
                       Seconds long_thr, Seconds short_thr) {
  if (solution.shifts.empty()) return solution;
  const int r1 = static_cast<int>(rng.below(solution.shifts.size()));
  const int r2 = static_cast<int>(rng.below(solution.shifts.size()));

  const int pa = find_long_arc(solution.shifts[static_cast<std::size_t>(r1)], matrix, requests,
                               rng, long_thr, short_thr);
  const int pc = find_long_arc(solution.shifts[static_cast<std::size_t>(r2)], matrix, requests,
                               rng, long_thr, short_thr);
  if (pa < 0 || pc < 0) return solution;

  const auto& stops1 = solution.shifts[static_cast<std::size_t>(r1)].stops;
  const auto& stops2 = solution.shifts[static_cast<std::size_t>(r2)].stops;
  const int req_a = stops1[static_cast<std::size_t>(pa)];
  const int req_b = stops1[static_cast<std::size_t>(pa) + 1];
  const int req_c = stops2[static_cast<std::size_t>(pc)];
  const int req_d = stops2[static_cast<std::size_t>(pc) + 1];
  if (req_a == req_c || req_b == req_c || req_a == req_d || req_b == req_d) return solution;

  const int a = requests[req_a].matrix_index;
  const int b = requests[req_b].matrix_index;
  const int c = requests[req_c].matrix_index;
  const int d = requests[req_d].matrix_index;

  auto is_short = [&](int i, int j) {
    return classify_arc(i, j, matrix, long_thr, short_thr) == ArcClass::short_arc;
  };

  if (is_short(a, d) && is_short(b, c)) {
    Solution out = solution;
    if (!tabu.contains(b, d)) {
      std::swap(out.shifts[static_cast<std::size_t>(r1)].stops[static_cast<std::size_t>(pa) + 1],
                out.shifts[static_cast<std::size_t>(r2)].stops[static_cast<std::size_t>(pc) + 1]);
    }
    tabu.push(b, d);
    return out;
  }
  if (is_short(a, c) && is_short(b, d)) {
    Solution out = solution;
    if (!tabu.contains(b, c)) {
      std::swap(out.shifts[static_cast<std::size_t>(r1)].stops[static_cast<std::size_t>(pa) + 1],
                out.shifts[static_cast<std::size_t>(r2)].stops[static_cast<std::size_t>(pc)]);
    }
    tabu.push(b, c);
    return out;
  }
  return solution;
}

}  // namespace vrpsd
