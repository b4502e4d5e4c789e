#include "vrpsd/operators.hpp"

#include <algorithm>
#include <limits>

namespace vrpsd {

std::string operator_name(OperatorId id) {
  const char* prefix = id.kind == OperatorKind::destroy ? "D"
                       : id.kind == OperatorKind::repair ? "R"
                                                         : "T";
  return prefix + std::to_string(id.index);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct StopRef {
  int shift = -1;
  int pos = -1;
  bool valid() const { return shift >= 0; }
};

std::vector<StopRef> all_stops(const Solution& solution) {
  std::vector<StopRef> refs;
  for (int s = 0; s < static_cast<int>(solution.shifts.size()); ++s) {
    for (int p = 0; p < static_cast<int>(solution.shifts[s].stops.size()); ++p) {
      refs.push_back({s, p});
    }
  }
  return refs;
}

int request_at(const Solution& solution, StopRef r) {
  return solution.shifts[static_cast<std::size_t>(r.shift)].stops[static_cast<std::size_t>(r.pos)];
}

std::vector<int> nonempty_shifts(const Solution& solution) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(solution.shifts.size()); ++s) {
    if (!solution.shifts[static_cast<std::size_t>(s)].empty()) out.push_back(s);
  }
  return out;
}

// Symmetric stop distance used by the farthest-pair destroys.
Seconds pair_distance(const CostMatrix& matrix, int mi, int mj) {
  return std::max(matrix.cost(mi, mj), matrix.cost(mj, mi));
}

class DestroyContext {
 public:
  DestroyContext(const Solution& solution, const CostMatrix& matrix, const RequestSet& requests,
                 const ObjectiveWeights& weights)
      : matrix_(matrix), requests_(requests), weights_(weights) {
    result_.partial = solution;
  }

  Solution& work() { return result_.partial; }
  const Solution& work() const { return result_.partial; }

  void remove(StopRef ref) {
    Shift& shift = result_.partial.shifts[static_cast<std::size_t>(ref.shift)];
    result_.removed.push_back(shift.stops[static_cast<std::size_t>(ref.pos)]);
    shift.stops.erase(shift.stops.begin() + ref.pos);
    evaluate_shift_timing(shift, matrix_, requests_);
  }

  // Positions of the same shift shrink as stops are removed; remove from the
  // back so recorded positions stay valid within one call.
  void remove_pair_in_shift(int shift, int p_low, int p_high) {
    remove({shift, p_low});
    remove({shift, p_high - 1});
  }

  DestroyResult finish() {
    result_.partial.violations = count_violations(result_.partial, matrix_, requests_);
    result_.partial.feasible = result_.partial.violations.total() == 0;
    result_.partial.objective = evaluate(result_.partial, matrix_, requests_, weights_);
    return std::move(result_);
  }

  const CostMatrix& matrix_;
  const RequestSet& requests_;
  const ObjectiveWeights& weights_;

 private:
  DestroyResult result_;
};

StopRef random_stop_in_shift(const Solution& solution, int shift, RngStream& rng) {
  const auto& stops = solution.shifts[static_cast<std::size_t>(shift)].stops;
  return {shift, static_cast<int>(rng.below(stops.size()))};
}

// Lowest-service-time stops, ties by request index.
std::vector<StopRef> by_lowest_service(const Solution& solution, const RequestSet& requests) {
  auto refs = all_stops(solution);
  std::sort(refs.begin(), refs.end(), [&](StopRef x, StopRef y) {
    const int rx = request_at(solution, x);
    const int ry = request_at(solution, y);
    if (requests[rx].service_duration != requests[ry].service_duration) {
      return requests[rx].service_duration < requests[ry].service_duration;
    }
    return rx < ry;
  });
  return refs;
}

void remove_consecutive(DestroyContext& ctx, int count, RngStream& rng) {
  auto shifts = nonempty_shifts(ctx.work());
  if (shifts.empty()) return;
  const int s = shifts[rng.below(shifts.size())];
  auto& stops = ctx.work().shifts[static_cast<std::size_t>(s)].stops;
  const int len = static_cast<int>(stops.size());
  const int k = std::min(count, len);
  const int start = len == k ? 0 : static_cast<int>(rng.below(static_cast<std::size_t>(len - k + 1)));
  for (int i = 0; i < k; ++i) ctx.remove({s, start});  // positions collapse onto start
}

// Farthest pair of stops within one shift; removes the single stop when the
// shift is shorter than two.
void remove_farthest_pair(DestroyContext& ctx, int shift) {
  const auto& stops = ctx.work().shifts[static_cast<std::size_t>(shift)].stops;
  if (stops.empty()) return;
  if (stops.size() == 1) {
    ctx.remove({shift, 0});
    return;
  }
  Seconds best = -1;
  int bp = 0, bq = 1;
  for (int p = 0; p < static_cast<int>(stops.size()); ++p) {
    for (int q = p + 1; q < static_cast<int>(stops.size()); ++q) {
      const Seconds d = pair_distance(ctx.matrix_,
                                      ctx.requests_[stops[static_cast<std::size_t>(p)]].matrix_index,
                                      ctx.requests_[stops[static_cast<std::size_t>(q)]].matrix_index);
      if (d > best) {
        best = d;
        bp = p;
        bq = q;
      }
    }
  }
  ctx.remove_pair_in_shift(shift, bp, bq);
}

int shift_with_highest_duration(const Solution& solution) {
  int best = -1;
  Seconds dur = -1;
  for (int s : nonempty_shifts(solution)) {
    if (solution.shifts[static_cast<std::size_t>(s)].duration > dur) {
      dur = solution.shifts[static_cast<std::size_t>(s)].duration;
      best = s;
    }
  }
  return best;
}

// Objective change from deleting the stop at ref, with the rest of the
// solution fixed.
double removal_delta_objective(const Solution& solution, StopRef ref, const CostMatrix& matrix,
                               const RequestSet& requests, const ObjectiveWeights& weights) {
  const Shift& shift = solution.shifts[static_cast<std::size_t>(ref.shift)];
  Shift without = shift;
  without.stops.erase(without.stops.begin() + ref.pos);
  evaluate_shift_timing(without, matrix, requests);
  return shift_contribution(without, matrix, requests, weights) -
         shift_contribution(shift, matrix, requests, weights);
}

double removal_delta_service_time(const Solution& solution, StopRef ref, const CostMatrix& matrix,
                                  const RequestSet& requests) {
  const Shift& shift = solution.shifts[static_cast<std::size_t>(ref.shift)];
  Shift without = shift;
  without.stops.erase(without.stops.begin() + ref.pos);
  evaluate_shift_timing(without, matrix, requests);
  const Seconds after = without.empty() ? 0 : without.duration;
  return static_cast<double>(after - shift.duration);
}

template <typename DeltaFn>
StopRef min_delta_stop(const Solution& solution, DeltaFn delta) {
  StopRef best;
  double best_delta = kInf;
  for (StopRef ref : all_stops(solution)) {
    const double d = delta(ref);
    if (d < best_delta) {
      best_delta = d;
      best = ref;
    }
  }
  return best;
}

void destroy_dispatch(int index, DestroyContext& ctx, RngStream& rng, int n_remove) {
  Solution& work = ctx.work();
  switch (index) {
    case 1: {  // one random site from one random shift
      auto shifts = nonempty_shifts(work);
      if (shifts.empty()) return;
      ctx.remove(random_stop_in_shift(work, shifts[rng.below(shifts.size())], rng));
      return;
    }
    case 2: {  // n random sites from n random shifts (shifts may repeat)
      for (int i = 0; i < n_remove; ++i) {
        auto shifts = nonempty_shifts(work);
        if (shifts.empty()) return;
        ctx.remove(random_stop_in_shift(work, shifts[rng.below(shifts.size())], rng));
      }
      return;
    }
    case 3:
    case 4: {  // lowest service time
      const int count = index == 3 ? 1 : n_remove;
      auto refs = by_lowest_service(work, ctx.requests_);
      for (int i = 0; i < count && !all_stops(work).empty(); ++i) {
        refs = by_lowest_service(work, ctx.requests_);
        if (refs.empty()) return;
        ctx.remove(refs.front());
      }
      return;
    }
    case 5: {  // random site and its closest non-back-to-back neighbor
      auto refs = all_stops(work);
      if (refs.empty()) return;
      const StopRef chosen = refs[rng.below(refs.size())];
      const int ra = request_at(work, chosen);
      const int ma = ctx.requests_[ra].matrix_index;
      StopRef neighbor;
      Seconds best = std::numeric_limits<Seconds>::max();
      for (StopRef ref : refs) {
        const int rb = request_at(work, ref);
        if (rb == ra) continue;
        const int mb = ctx.requests_[rb].matrix_index;
        if (ctx.matrix_.back_to_back(ma, mb)) continue;
        const Seconds d = ctx.matrix_.cost(ma, mb);
        if (d < best) {
          best = d;
          neighbor = ref;
        }
      }
      const int rn = neighbor.valid() ? request_at(work, neighbor) : -1;
      ctx.remove(chosen);
      if (rn >= 0) {
        // chosen's removal may have shifted the neighbor's position
        for (StopRef ref : all_stops(work)) {
          if (request_at(work, ref) == rn) {
            ctx.remove(ref);
            break;
          }
        }
      }
      return;
    }
    case 6:
      remove_consecutive(ctx, 3, rng);
      return;
    case 7:
      remove_consecutive(ctx, n_remove, rng);
      return;
    case 8: {  // removal leaving the lowest objective
      StopRef best = min_delta_stop(work, [&](StopRef ref) {
        return removal_delta_objective(work, ref, ctx.matrix_, ctx.requests_, ctx.weights_);
      });
      if (best.valid()) ctx.remove(best);
      return;
    }
    case 9: {  // highest lateness
      StopRef best;
      Seconds worst = -1;
      for (StopRef ref : all_stops(work)) {
        const Shift& shift = work.shifts[static_cast<std::size_t>(ref.shift)];
        const Request& req = ctx.requests_[request_at(work, ref)];
        const Seconds late =
            std::max<Seconds>(0, shift.timing[static_cast<std::size_t>(ref.pos)].completion -
                                     req.window_end);
        if (late > worst) {
          worst = late;
          best = ref;
        }
      }
      if (best.valid()) ctx.remove(best);
      return;
    }
    case 10: {  // farthest pair from one random shift
      auto shifts = nonempty_shifts(work);
      if (shifts.empty()) return;
      remove_farthest_pair(ctx, shifts[rng.below(shifts.size())]);
      return;
    }
    case 11: {  // farthest pair from the longest shift
      const int s = shift_with_highest_duration(work);
      if (s >= 0) remove_farthest_pair(ctx, s);
      return;
    }
    case 12: {  // random stop from the lowest-downtime shift
      int best = -1;
      Seconds dt = std::numeric_limits<Seconds>::max();
      for (int s : nonempty_shifts(work)) {
        if (work.shifts[static_cast<std::size_t>(s)].downtime_total < dt) {
          dt = work.shifts[static_cast<std::size_t>(s)].downtime_total;
          best = s;
        }
      }
      if (best >= 0) ctx.remove(random_stop_in_shift(work, best, rng));
      return;
    }
    case 13:    // final stop of every overlong shift
    case 14: {  // first stop of every overlong shift
      for (int s = 0; s < static_cast<int>(work.shifts.size()); ++s) {
        const Shift& shift = work.shifts[static_cast<std::size_t>(s)];
        if (shift.empty() || shift.duration <= kMaxShiftDuration) continue;
        ctx.remove({s, index == 13 ? static_cast<int>(shift.stops.size()) - 1 : 0});
      }
      return;
    }
    case 15: {  // removal leaving the lowest total service time
      StopRef best = min_delta_stop(work, [&](StopRef ref) {
        return removal_delta_service_time(work, ref, ctx.matrix_, ctx.requests_);
      });
      if (best.valid()) ctx.remove(best);
      return;
    }
    case 16: {  // farthest pair from the shift with highest average actual time
      int best = -1;
      double avg = -1;
      for (int s : nonempty_shifts(work)) {
        const Shift& shift = work.shifts[static_cast<std::size_t>(s)];
        // actual time = travel + service, downtime excluded
        const double actual =
            static_cast<double>(shift.duration - kShiftOverhead - shift.downtime_total);
        const double a = actual / static_cast<double>(shift.stops.size());
        if (a > avg) {
          avg = a;
          best = s;
        }
      }
      if (best >= 0) remove_farthest_pair(ctx, best);
      return;
    }
    case 17: {  // farthest same-shift pair across all shifts
      int bs = -1, bp = 0, bq = 1;
      Seconds best = -1;
      for (int s = 0; s < static_cast<int>(work.shifts.size()); ++s) {
        const auto& stops = work.shifts[static_cast<std::size_t>(s)].stops;
        for (int p = 0; p < static_cast<int>(stops.size()); ++p) {
          for (int q = p + 1; q < static_cast<int>(stops.size()); ++q) {
            const Seconds d =
                pair_distance(ctx.matrix_, ctx.requests_[stops[static_cast<std::size_t>(p)]].matrix_index,
                              ctx.requests_[stops[static_cast<std::size_t>(q)]].matrix_index);
            if (d > best) {
              best = d;
              bs = s;
              bp = p;
              bq = q;
            }
          }
        }
      }
      if (bs >= 0) ctx.remove_pair_in_shift(bs, bp, bq);
      return;
    }
    default:
      throw StructuralError("unknown destroy operator D" + std::to_string(index));
  }
}

// ---------------------------------------------------------------------------
// Repair machinery
// ---------------------------------------------------------------------------

struct InsertPos {
  int shift = -1;
  int pos = -1;
  double delta = kInf;
  bool valid() const { return shift >= 0; }
};

double insertion_delta_objective(const Solution& solution, int shift, int pos, int ri,
                                 const CostMatrix& matrix, const RequestSet& requests,
                                 const ObjectiveWeights& weights) {
  const Shift& base = solution.shifts[static_cast<std::size_t>(shift)];
  Shift with = base;
  with.stops.insert(with.stops.begin() + pos, ri);
  evaluate_shift_timing(with, matrix, requests);
  return shift_contribution(with, matrix, requests, weights) -
         shift_contribution(base, matrix, requests, weights);
}

double insertion_delta_service_time(const Solution& solution, int shift, int pos, int ri,
                                    const CostMatrix& matrix, const RequestSet& requests) {
  const Shift& base = solution.shifts[static_cast<std::size_t>(shift)];
  Shift with = base;
  with.stops.insert(with.stops.begin() + pos, ri);
  evaluate_shift_timing(with, matrix, requests);
  const Seconds before = base.empty() ? 0 : base.duration;
  return static_cast<double>(with.duration - before);
}

enum class InsertMetric { objective, service_time };

double insertion_delta(InsertMetric metric, const Solution& solution, int shift, int pos, int ri,
                       const CostMatrix& matrix, const RequestSet& requests,
                       const ObjectiveWeights& weights) {
  return metric == InsertMetric::objective
             ? insertion_delta_objective(solution, shift, pos, ri, matrix, requests, weights)
             : insertion_delta_service_time(solution, shift, pos, ri, matrix, requests);
}

// Best position across the given shifts; ties broken by (shift, position).
InsertPos best_position(InsertMetric metric, const Solution& solution, int ri,
                        const std::vector<int>& shifts, const CostMatrix& matrix,
                        const RequestSet& requests, const ObjectiveWeights& weights) {
  InsertPos best;
  for (int s : shifts) {
    const int len = static_cast<int>(solution.shifts[static_cast<std::size_t>(s)].stops.size());
    for (int pos = 0; pos <= len; ++pos) {
      const double d = insertion_delta(metric, solution, s, pos, ri, matrix, requests, weights);
      if (d < best.delta) best = {s, pos, d};
    }
  }
  return best;
}

std::vector<int> every_shift(const Solution& solution) {
  std::vector<int> out(solution.shifts.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = static_cast<int>(s);
  return out;
}

class RepairContext {
 public:
  RepairContext(const DestroyResult& destroyed, const CostMatrix& matrix,
                const RequestSet& requests, const ObjectiveWeights& weights)
      : matrix_(matrix), requests_(requests), weights_(weights), solution_(destroyed.partial),
        removed_(destroyed.removed) {}

  Solution& solution() { return solution_; }
  std::vector<int>& removed() { return removed_; }

  void insert(int shift, int pos, int ri) {
    Shift& s = solution_.shifts[static_cast<std::size_t>(shift)];
    s.stops.insert(s.stops.begin() + pos, ri);
    evaluate_shift_timing(s, matrix_, requests_);
  }

  void insert_best(InsertMetric metric, int ri, const std::vector<int>& shifts) {
    InsertPos p = best_position(metric, solution_, ri, shifts, matrix_, requests_, weights_);
    insert(p.shift, p.pos, ri);
  }

  void insert_random(int ri, int shift, RngStream& rng) {
    const auto& stops = solution_.shifts[static_cast<std::size_t>(shift)].stops;
    insert(shift, static_cast<int>(rng.below(stops.size() + 1)), ri);
  }

  int highest_downtime_shift() const {
    int best = 0;
    Seconds dt = -1;
    for (int s = 0; s < static_cast<int>(solution_.shifts.size()); ++s) {
      if (solution_.shifts[static_cast<std::size_t>(s)].downtime_total > dt) {
        dt = solution_.shifts[static_cast<std::size_t>(s)].downtime_total;
        best = s;
      }
    }
    return best;
  }

  int shortest_shift() const {
    int best = 0;
    Seconds dur = std::numeric_limits<Seconds>::max();
    for (int s = 0; s < static_cast<int>(solution_.shifts.size()); ++s) {
      if (solution_.shifts[static_cast<std::size_t>(s)].duration < dur) {
        dur = solution_.shifts[static_cast<std::size_t>(s)].duration;
        best = s;
      }
    }
    return best;
  }

  Solution finish() {
    refresh(solution_, matrix_, requests_, weights_);
    return std::move(solution_);
  }

  const CostMatrix& matrix_;
  const RequestSet& requests_;
  const ObjectiveWeights& weights_;

 private:
  Solution solution_;
  std::vector<int> removed_;
};

// Regret of one candidate under the given metric, with its best position.
struct Regret {
  double value = 0;
  InsertPos best;
};

Regret regret_of(InsertMetric metric, const Solution& solution, int ri, const CostMatrix& matrix,
                 const RequestSet& requests, const ObjectiveWeights& weights, int k) {
  std::vector<double> deltas;
  Regret out;
  for (int s = 0; s < static_cast<int>(solution.shifts.size()); ++s) {
    const int len = static_cast<int>(solution.shifts[static_cast<std::size_t>(s)].stops.size());
    for (int pos = 0; pos <= len; ++pos) {
      const double d = insertion_delta(metric, solution, s, pos, ri, matrix, requests, weights);
      deltas.push_back(d);
      if (d < out.best.delta) out.best = {s, pos, d};
    }
  }
  std::sort(deltas.begin(), deltas.end());
  if (static_cast<int>(deltas.size()) < k) {
    out.value = kInf;
  } else {
    out.value = deltas[static_cast<std::size_t>(k) - 1] - deltas[0];
  }
  return out;
}

void repair_regret(RepairContext& ctx, InsertMetric metric, int k) {
  std::vector<int> pending = ctx.removed();
  while (!pending.empty()) {
    std::size_t pick = 0;
    Regret best;
    best.value = -kInf;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      Regret r = regret_of(metric, ctx.solution(), pending[i], ctx.matrix_, ctx.requests_,
                           ctx.weights_, k);
      if (r.value > best.value) {
        best = r;
        pick = i;
      }
    }
    ctx.insert(best.best.shift, best.best.pos, pending[pick]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

void repair_dispatch(int index, RepairContext& ctx, RngStream& rng, int regret_k) {
  std::vector<int> order = ctx.removed();
  const auto shifts = every_shift(ctx.solution());
  const RequestSet& req = ctx.requests_;

  auto sorted = [&](auto less) {
    std::stable_sort(order.begin(), order.end(), less);
  };

  switch (index) {
    case 1:  // random order, random shift, random position
      rng.shuffle(order);
      [[fallthrough]];
    case 2:  // removed order, random shift, random position
      for (int ri : order) {
        ctx.insert_random(ri, static_cast<int>(rng.below(ctx.solution().shifts.size())), rng);
      }
      return;
    case 3:  // random order, lowest objective increase
      rng.shuffle(order);
      [[fallthrough]];
    case 4:  // removed order, lowest objective increase
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, shifts);
      return;
    case 5:  // random order, lowest service-time increase
      rng.shuffle(order);
      [[fallthrough]];
    case 6:  // removed order, lowest service-time increase
      for (int ri : order) ctx.insert_best(InsertMetric::service_time, ri, shifts);
      return;
    case 7:  // longest service time first
      sorted([&](int a, int b) {
        if (req[a].service_duration != req[b].service_duration) {
          return req[a].service_duration > req[b].service_duration;
        }
        return a < b;
      });
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, shifts);
      return;
    case 8:  // shortest service window first
      sorted([&](int a, int b) {
        const Seconds wa = req[a].window_end - req[a].window_start;
        const Seconds wb = req[b].window_end - req[b].window_start;
        if (wa != wb) return wa < wb;
        return a < b;
      });
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, shifts);
      return;
    case 9:  // earliest deadline first
      sorted([&](int a, int b) {
        if (req[a].window_end != req[b].window_end) return req[a].window_end < req[b].window_end;
        return a < b;
      });
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, shifts);
      return;
    case 10:   // closest to depot first
    case 11: {  // farthest from depot first
      const int depot = ctx.matrix_.depot();
      sorted([&](int a, int b) {
        const Seconds da = ctx.matrix_.travel(depot, req[a].matrix_index);
        const Seconds db = ctx.matrix_.travel(depot, req[b].matrix_index);
        if (da != db) return index == 10 ? da < db : da > db;
        return a < b;
      });
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, shifts);
      return;
    }
    case 12:  // highest-downtime shift, random position
      for (int ri : order) ctx.insert_random(ri, ctx.highest_downtime_shift(), rng);
      return;
    case 13:  // highest-downtime shift, best position within it
      for (int ri : order) {
        ctx.insert_best(InsertMetric::objective, ri, {ctx.highest_downtime_shift()});
      }
      return;
    case 14:  // shortest shift, random position
      for (int ri : order) ctx.insert_random(ri, ctx.shortest_shift(), rng);
      return;
    case 15:  // shortest shift, best position within it
      for (int ri : order) ctx.insert_best(InsertMetric::objective, ri, {ctx.shortest_shift()});
      return;
    case 16:  // regret selection, lowest objective increase
      repair_regret(ctx, InsertMetric::objective, regret_k);
      return;
    case 17:  // regret selection, lowest service-time increase
      repair_regret(ctx, InsertMetric::service_time, regret_k);
      return;
    default:
      throw StructuralError("unknown repair operator R" + std::to_string(index));
  }
}

}  // namespace

DestroyResult apply_destroy(OperatorId id, const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests, const ObjectiveWeights& weights,
                            RngStream& rng, const OperatorParams& params) {
  if (id.kind != OperatorKind::destroy || id.index < 1 || id.index > kDestroyCount) {
    throw StructuralError("not a destroy operator: " + operator_name(id));
  }
  DestroyContext ctx(solution, matrix, requests, weights);
  destroy_dispatch(id.index, ctx, rng, params.resolve_remove_count(static_cast<int>(requests.size())));
  return ctx.finish();
}

Solution apply_repair(OperatorId id, const DestroyResult& destroyed, const CostMatrix& matrix,
                      const RequestSet& requests, const ObjectiveWeights& weights, RngStream& rng,
                      const OperatorParams& params) {
  if (id.kind != OperatorKind::repair || id.index < 1 || id.index > kRepairCount) {
    throw StructuralError("not a repair operator: " + operator_name(id));
  }
  RepairContext ctx(destroyed, matrix, requests, weights);
  repair_dispatch(id.index, ctx, rng, params.regret_k);
  return ctx.finish();
}

int regret_select(const std::vector<int>& removed, const Solution& partial,
                  const CostMatrix& matrix, const RequestSet& requests,
                  const ObjectiveWeights& weights, int k) {
  if (removed.empty()) throw StructuralError("regret_select on empty removal set");
  int pick = removed.front();
  double best = -kInf;
  for (int ri : removed) {
    Regret r = regret_of(InsertMetric::objective, partial, ri, matrix, requests, weights, k);
    if (r.value > best) {
      best = r.value;
      pick = ri;
    }
  }
  return pick;
}

Seconds lateness(int request_index, const Solution& solution, const RequestSet& requests) {
  for (const auto& shift : solution.shifts) {
    for (std::size_t k = 0; k < shift.stops.size(); ++k) {
      if (shift.stops[k] == request_index) {
        return std::max<Seconds>(0, shift.timing[k].completion -
                                        requests[request_index].window_end);
      }
    }
  }
  throw StructuralError("lateness of unassigned request " + requests[request_index].id);
}

}  // namespace vrpsd
