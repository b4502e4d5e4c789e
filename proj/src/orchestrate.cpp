#include "vrpsd/orchestrate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "vrpsd/operators.hpp"

namespace vrpsd {

namespace {

double positive_reference(double total) { return total > 0 ? total : 1.0; }

struct SearchState {
  const Instance& inst;
  Solution current;
  Solution best;
  long iteration = 0;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  ConvergenceTrace trace;

  explicit SearchState(const Instance& instance) : inst(instance) {}

  long elapsed_ms() const {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
  }

  void record(const char* phase, const std::string& op, const Solution& candidate, int outcome) {
    TraceRecord r;
    r.iteration = iteration;
    r.wall_ms = elapsed_ms();
    r.phase = phase;
    r.op = op;
    r.candidate_total = candidate.objective.total;
    r.best_total = best.objective.total;
    r.candidate_feasible = candidate.feasible;
    r.best_feasible = best.feasible;
    r.outcome_class = outcome;
    trace.records.push_back(std::move(r));
  }

  // Big-M weights make any feasible total beat any infeasible one; the
  // explicit latch keeps a feasible best even if weights were misconfigured.
  void consider_best(const Solution& candidate) {
    if (candidate.objective.total < best.objective.total &&
        (!best.feasible || candidate.feasible)) {
      best = candidate;
    }
  }

  void alns_phase(const char* phase_name, PhaseClock clock, RngStream rng,
                  ThresholdSchedule schedule) {
    OperatorBank destroy_bank = make_bank(OperatorKind::destroy, kDestroyCount);
    OperatorBank repair_bank = make_bank(OperatorKind::repair, kRepairCount);
    while (!clock.expired()) {
      const OperatorId d = roulette_pick(destroy_bank, rng);
      const OperatorId r = roulette_pick(repair_bank, rng);
      DestroyResult destroyed = apply_destroy(d, current, inst.matrix, inst.requests,
                                              inst.config.weights, rng, inst.config.op_params);
      Solution candidate = apply_repair(r, destroyed, inst.matrix, inst.requests,
                                        inst.config.weights, rng, inst.config.op_params);
      ++iteration;
      clock.tick();
      const AcceptDecision decision =
          accept(candidate.objective.total, current.objective.total, best.objective.total,
                 schedule);
      update_weight(destroy_bank, d, decision.outcome_class);
      update_weight(repair_bank, r, decision.outcome_class);
      if (decision.accepted) current = candidate;
      consider_best(candidate);
      record(phase_name, operator_name(d) + "+" + operator_name(r), candidate,
             decision.outcome_class);
    }
  }

  ThresholdSchedule phase_schedule(bool first_phase) const {
    const double ref = positive_reference(first_phase ? current.objective.total
                                                      : best.objective.total);
    ThresholdSchedule s =
        make_schedule(ref, inst.config.ta_fraction, inst.config.ta_iterations);
    s.compare_to_current = inst.config.ta_compare_to_current;
    return s;
  }

  RunResult finish(Solution initial, bool include_wall_time) {
    RunResult result;
    result.best = std::move(best);
    result.initial = std::move(initial);
    result.trace = std::move(trace);
    result.trace.include_wall_time = include_wall_time;
    return result;
  }
};

SearchState start_state(const Instance& instance, const RunBudget& budget) {
  SearchState state(instance);
  RngStream construct_rng = RngStream(budget.seed).derive(0);
  state.current =
      build_initial(instance.requests, instance.matrix, instance.config, construct_rng);
  refresh(state.current, instance.matrix, instance.requests, instance.config.weights);
  state.best = state.current;
  return state;
}

PhaseClock sub_clock(const RunBudget& budget, long iters, double seconds) {
  return budget.use_iterations ? PhaseClock::iterations(iters) : PhaseClock::wall(seconds);
}

}  // namespace

void run_tabu_phase(Solution& current, Solution& best, OperatorBank& ts_bank, TabuList& tabu,
                    PhaseClock clock, RngStream& rng, const Instance& instance,
                    ConvergenceTrace& trace, long& iteration) {
  const auto& cfg = instance.config;
  while (!clock.expired()) {
    const OperatorId op = roulette_pick(ts_bank, rng);
    Solution candidate =
        op.index == 1
            ? random_swap(current, instance.requests, rng, tabu)
            : long_arc_swap(current, instance.matrix, instance.requests, rng, tabu,
                            cfg.long_arc_threshold, cfg.short_arc_threshold);
    refresh(candidate, instance.matrix, instance.requests, cfg.weights);
    ++iteration;
    clock.tick();

    int outcome = kOutcomeAccepted;  // every TS move is adopted
    if (candidate.objective.total < best.objective.total) {
      outcome = kOutcomeNewGlobal;
    } else if (candidate.objective.total < current.objective.total) {
      outcome = kOutcomeBetter;
    }
    update_weight(ts_bank, op, outcome);

    current = candidate;
    if (candidate.objective.total < best.objective.total &&
        (!best.feasible || candidate.feasible)) {
      best = candidate;
    }

    TraceRecord r;
    r.iteration = iteration;
    r.phase = "ts";
    r.op = operator_name(op);
    r.candidate_total = candidate.objective.total;
    r.best_total = best.objective.total;
    r.candidate_feasible = candidate.feasible;
    r.best_feasible = best.feasible;
    r.outcome_class = outcome;
    trace.records.push_back(std::move(r));
  }
}

RunResult run_algorithm1(const Instance& instance, const RunBudget& budget) {
  SearchState state = start_state(instance, budget);
  const Solution initial = state.current;
  RngStream master(budget.seed);

  state.alns_phase("alns1", sub_clock(budget, budget.iterations, budget.wall_seconds),
                   master.derive(1), state.phase_schedule(true));
  return state.finish(initial, !budget.use_iterations);
}

RunResult run_algorithm2(const Instance& instance, const RunBudget& budget) {
  SearchState state = start_state(instance, budget);
  const Solution initial = state.current;
  RngStream master(budget.seed);

  const long half = budget.iterations / 2;
  const double half_wall = budget.wall_seconds / 2;
  state.alns_phase("alns1", sub_clock(budget, half, half_wall), master.derive(1),
                   state.phase_schedule(true));
  state.alns_phase("alns2", sub_clock(budget, budget.iterations - half, half_wall),
                   master.derive(2), state.phase_schedule(false));
  return state.finish(initial, !budget.use_iterations);
}

RunResult run_algorithm3(const Instance& instance, const RunBudget& budget) {
  SearchState state = start_state(instance, budget);
  const Solution initial = state.current;
  RngStream master(budget.seed);

  TabuList tabu(static_cast<std::size_t>(instance.config.tabu_capacity));
  std::uint64_t phase_counter = 1;
  bool first_phase = true;

  const auto& split = budget.hybrid_split;
  if (budget.use_iterations) {
    long remaining = budget.iterations;
    while (remaining > 0) {
      const long round = std::min(budget.round_iterations, remaining);
      remaining -= round;
      const long a1 = static_cast<long>(std::floor(static_cast<double>(round) * split[0]));
      const long a2 = static_cast<long>(std::floor(static_cast<double>(round) * split[1]));
      const long ts = round - a1 - a2;
      state.alns_phase("alns1", PhaseClock::iterations(a1), master.derive(phase_counter++),
                       state.phase_schedule(first_phase));
      first_phase = false;
      state.alns_phase("alns2", PhaseClock::iterations(a2), master.derive(phase_counter++),
                       state.phase_schedule(false));
      OperatorBank ts_bank = make_bank(OperatorKind::tabu, kTabuCount);
      RngStream ts_rng = master.derive(phase_counter++);
      run_tabu_phase(state.current, state.best, ts_bank, tabu, PhaseClock::iterations(ts),
                     ts_rng, instance, state.trace, state.iteration);
    }
  } else {
    const auto end =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(budget.wall_seconds));
    while (std::chrono::steady_clock::now() < end) {
      const double left =
          std::chrono::duration<double>(end - std::chrono::steady_clock::now()).count();
      const double round = std::min(budget.round_wall_seconds, left);
      state.alns_phase("alns1", PhaseClock::wall(round * split[0]),
                       master.derive(phase_counter++), state.phase_schedule(first_phase));
      first_phase = false;
      state.alns_phase("alns2", PhaseClock::wall(round * split[1]),
                       master.derive(phase_counter++), state.phase_schedule(false));
      OperatorBank ts_bank = make_bank(OperatorKind::tabu, kTabuCount);
      RngStream ts_rng = master.derive(phase_counter++);
      run_tabu_phase(state.current, state.best, ts_bank, tabu, PhaseClock::wall(round * split[2]),
                     ts_rng, instance, state.trace, state.iteration);
    }
  }
  return state.finish(initial, !budget.use_iterations);
}

}  // namespace vrpsd
