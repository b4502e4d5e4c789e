#ifndef VRPSD_ORCHESTRATE_HPP
#define VRPSD_ORCHESTRATE_HPP

#include <array>
#include <cstdint>

#include "vrpsd/acceptance.hpp"
#include "vrpsd/construct.hpp"
#include "vrpsd/ingest.hpp"
#include "vrpsd/selection.hpp"
#include "vrpsd/tabu.hpp"
#include "vrpsd/trace.hpp"

namespace vrpsd {

// Run budget: wall-clock for production runs, iteration-capped for
// reproducible tests (wall-clock iteration counts are inherently
// nondeterministic).
struct RunBudget {
  bool use_iterations = true;
  long iterations = 10000;
  double wall_seconds = 0;
  std::uint64_t seed = 1;

  // Hybrid round structure: two ALNS phases and a short TS tail.
  std::array<double, 3> hybrid_split{0.45, 0.45, 0.10};
  long round_iterations = 10000;       // hybrid round length, iteration mode
  double round_wall_seconds = 1800.0;  // one round per 30 min of budget
};

struct RunResult {
  Solution best;          // all shifts retained; strip for reporting
  Solution initial;
  ConvergenceTrace trace;
};

// Single-phase ALNS with threshold accepting.
RunResult run_algorithm1(const Instance& instance, const RunBudget& budget);

// Two equal ALNS phases; weights, seed and TA schedule reinitialized at the
// phase boundary, global best carried across.
RunResult run_algorithm2(const Instance& instance, const RunBudget& budget);

// Hybrid rounds of (ALNS, ALNS, TS). TS operator weights are reinitialized
// per phase while the tabu list persists across rounds.
RunResult run_algorithm3(const Instance& instance, const RunBudget& budget);

// TS tail phase: roulette between the two swap operators, every new solution
// adopted as current, global best updated on improvement. Exposed for tests.
void run_tabu_phase(Solution& current, Solution& best, OperatorBank& ts_bank, TabuList& tabu,
                    PhaseClock clock, RngStream& rng, const Instance& instance,
                    ConvergenceTrace& trace, long& iteration);

}  // namespace vrpsd

#endif
