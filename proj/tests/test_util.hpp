#ifndef VRPSD_TEST_UTIL_HPP
#define VRPSD_TEST_UTIL_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "vrpsd/ingest.hpp"
#include "vrpsd/objective.hpp"
#include "vrpsd/rng.hpp"

namespace vrpsd::testutil {

// One raw visit for toy instances; index k maps to matrix stop k+1 (depot 0).
struct ToyVisit {
  std::string id;
  std::string site;
  std::string service;
  Seconds q = 0;
  Seconds a = 0;
  Seconds b = 0;
};

// Builds an in-memory instance from a travel matrix over (depot + visits).
// travel must be (n+1)x(n+1) with depot at index 0; costs get the destination
// service bundled and same-(site,service) pairs become back-to-back markers.
inline Instance build_toy(const std::vector<ToyVisit>& visits,
                          const std::vector<std::vector<Seconds>>& travel,
                          const std::vector<Seconds>& starts, Seconds horizon = 400000) {
  std::vector<std::string> stop_ids;
  stop_ids.push_back("0");
  for (const auto& v : visits) stop_ids.push_back(v.id);
  CostMatrix matrix(stop_ids, 0);
  const int n = matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i != 0 && j != 0) {
        const auto& vi = visits[static_cast<std::size_t>(i) - 1];
        const auto& vj = visits[static_cast<std::size_t>(j) - 1];
        if (vi.site == vj.site && vi.service == vj.service) {
          matrix.set_cost(i, j, 0);
          matrix.set_back_to_back(i, j);
          continue;
        }
      }
      const Seconds q = j == 0 ? 0 : visits[static_cast<std::size_t>(j) - 1].q;
      matrix.set_cost(i, j, travel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + q);
    }
  }

  std::vector<Request> raw;
  for (const auto& v : visits) {
    Request r;
    r.id = v.id;
    r.site_id = v.site;
    r.service_type = v.service;
    r.service_duration = v.q;
    r.window_start = v.a;
    r.window_end = v.b;
    raw.push_back(std::move(r));
  }

  Instance inst;
  inst.matrix = std::move(matrix);
  inst.requests = expand_multi_visits(std::move(raw));
  inst.config.depot_id = "0";
  inst.config.shift_start_times = starts;
  inst.config.horizon = horizon;
  link_instance(inst);
  return inst;
}

// Random toy with loose windows; may or may not admit a feasible schedule.
inline Instance random_toy(RngStream& rng, int nreq, int nshift, double revisit_share = 0.2) {
  std::vector<ToyVisit> visits;
  const char* services[] = {"patrol", "inspect"};
  int site_counter = 0;
  for (int k = 0; k < nreq; ++k) {
    ToyVisit v;
    v.id = "r" + std::to_string(k);
    const bool revisit = k > 0 && rng.real01() < revisit_share;
    v.site = "s" + std::to_string(revisit ? static_cast<int>(rng.below(
                                                static_cast<std::size_t>(site_counter)))
                                          : site_counter++);
    v.service = services[rng.below(2)];
    v.q = 300 + static_cast<Seconds>(rng.below(600));
    v.a = 21600 + static_cast<Seconds>(rng.below(8000));
    v.b = v.a + v.q + 1200 + static_cast<Seconds>(rng.below(9000));
    visits.push_back(std::move(v));
  }
  const std::size_t n = visits.size() + 1;
  std::vector<std::vector<Seconds>> travel(n, std::vector<Seconds>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Seconds t = 60 + static_cast<Seconds>(rng.below(840));
      travel[i][j] = travel[j][i] = t;
    }
  }
  std::vector<Seconds> starts;
  for (int s = 0; s < nshift; ++s) starts.push_back(21600 + 1800 * s);
  return build_toy(visits, travel, starts);
}

// Builds a solution from explicit per-shift stop lists and refreshes it.
inline Solution make_solution(const Instance& inst,
                              const std::vector<std::vector<int>>& stops_per_shift) {
  Solution sol;
  for (std::size_t s = 0; s < stops_per_shift.size(); ++s) {
    Shift shift;
    shift.shift_id = "S" + std::to_string(s + 1);
    shift.start_time = inst.config.shift_start_times[s];
    shift.stops = stops_per_shift[s];
    sol.shifts.push_back(std::move(shift));
  }
  refresh(sol, inst.matrix, inst.requests, inst.config.weights);
  return sol;
}

// Exhaustive oracle over every assignment and ordering for 2-shift toys.
inline double brute_force_best(const Instance& inst) {
  const int n = static_cast<int>(inst.requests.size());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> a, b;
    for (int k = 0; k < n; ++k) (mask >> k & 1u ? b : a).push_back(k);
    std::sort(a.begin(), a.end());
    do {
      std::sort(b.begin(), b.end());
      do {
        Solution sol = make_solution(inst, {a, b});
        best = std::min(best, sol.objective.total);
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return best;
}

}  // namespace vrpsd::testutil

#endif
