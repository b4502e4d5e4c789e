// End-to-end acceptance checks for the solver. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
// Usage: acceptance_suite <data-dir>   (expects matrix.csv, requests.txt,
// config.txt for the bundled 251-request / 7-shift instance)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "vrpsd/baseline.hpp"
#include "vrpsd/orchestrate.hpp"
#include "vrpsd/solution_io.hpp"
#include "vrpsd/tabu.hpp"

using namespace vrpsd;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

RunBudget iteration_budget(long iterations, std::uint64_t seed) {
  RunBudget b;
  b.use_iterations = true;
  b.iterations = iterations;
  b.seed = seed;
  return b;
}

// ---- criterion 1: adaptive weight update arithmetic --------------------

bool check_weight_update() {
  OperatorBank bank = make_bank(OperatorKind::destroy, 2);
  update_weight(bank, {OperatorKind::destroy, 1}, kOutcomeNewGlobal);
  if (bank.entries[0].weight != 1.5) return false;
  update_weight(bank, {OperatorKind::destroy, 2}, kOutcomeRejected);
  if (bank.entries[1].weight != 0.9) return false;

  for (int outcome = 0; outcome < 4; ++outcome) {
    OperatorBank b2 = make_bank(OperatorKind::destroy, 1);
    for (int k = 0; k < 400; ++k) update_weight(b2, {OperatorKind::destroy, 1}, outcome);
    if (std::abs(b2.entries[0].weight - b2.scores[static_cast<std::size_t>(outcome)]) > 1e-9) {
      return false;
    }
  }
  return true;
}

// ---- criterion 2: published cost-matrix fragment ------------------------

bool check_fragment_ingestion() {
  const std::string path = "acceptance_fragment_matrix.csv";
  {
    std::ofstream out(path);
    out << "stop,0,50006,43440,43448,67933\n"
        << "0,0,1000,1000,1000,1000\n"
        << "50006,1000,0,1439,1481,2759\n"
        << "43440,1000,4559,0,0,1800\n"
        << "43448,1000,4559,0,0,1800\n"
        << "67933,1000,4559,480,522,0\n";
  }
  CostMatrix m = load_cost_matrix(path, "0");
  std::filesystem::remove(path);
  const int i50006 = m.index_of("50006");
  const int i43440 = m.index_of("43440");
  const int i43448 = m.index_of("43448");
  const int i67933 = m.index_of("67933");
  if (i50006 < 0 || i43440 < 0 || i43448 < 0 || i67933 < 0) return false;
  return m.cost(i50006, i43440) == 1439 && m.cost(i67933, i43440) == 480 &&
         m.back_to_back(i43440, i43448);
}

// ---- criterion 3: destroy x repair round-trip ---------------------------

bool check_round_trip() {
  RngStream mk(81);
  Instance inst = testutil::random_toy(mk, 12, 3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RngStream crng(seed);
    Solution sol = build_initial(inst.requests, inst.matrix, inst.config, crng);
    refresh(sol, inst.matrix, inst.requests, inst.config.weights);
    RngStream rng(seed * 977);
    for (int d = 1; d <= kDestroyCount; ++d) {
      for (int r = 1; r <= kRepairCount; ++r) {
        DestroyResult destroyed =
            apply_destroy({OperatorKind::destroy, d}, sol, inst.matrix, inst.requests,
                          inst.config.weights, rng, inst.config.op_params);
        Solution out =
            apply_repair({OperatorKind::repair, r}, destroyed, inst.matrix, inst.requests,
                         inst.config.weights, rng, inst.config.op_params);
        std::vector<int> seen(inst.requests.size(), 0);
        for (const auto& s : out.shifts) {
          for (int q : s.stops) {
            if (q < 0 || static_cast<std::size_t>(q) >= seen.size()) return false;
            ++seen[static_cast<std::size_t>(q)];
          }
        }
        for (int c : seen) {
          if (c != 1) return false;
        }
      }
    }
  }
  return true;
}

// ---- criterion 4: exhaustive-enumeration optimality ---------------------

bool check_toy_optimality(std::string& detail) {
  const int kToys = 25;
  int hits1 = 0, hits2 = 0, hits3 = 0;
  RngStream mk(2025);
  for (int t = 0; t < kToys; ++t) {
    const int nreq = 5 + t % 4;  // 5..8 requests, always 2 shifts
    Instance inst = testutil::random_toy(mk, nreq, 2);
    const double optimum = testutil::brute_force_best(inst);
    auto reaches = [&](RunResult (*run)(const Instance&, const RunBudget&)) {
      RunResult r = run(inst, iteration_budget(50000, 7000 + static_cast<std::uint64_t>(t)));
      return std::abs(r.best.objective.total - optimum) <= 1e-6 * std::max(1.0, optimum);
    };
    if (reaches(run_algorithm1)) ++hits1;
    if (reaches(run_algorithm2)) ++hits2;
    if (reaches(run_algorithm3)) ++hits3;
  }
  std::ostringstream os;
  os << "optimum hit rates over " << kToys << " toys: " << hits1 << "/" << hits2 << "/" << hits3;
  detail = os.str();
  const int need = (kToys * 9 + 9) / 10;  // ceil(90%)
  return hits1 >= need && hits2 >= need && hits3 >= need;
}

// ---- criteria 5 & 6: feasibility and ordering at scale ------------------

struct ScaleRun {
  bool feasible = false;
  bool audited_clean = false;
  bool below_initial = false;
  bool monotone = false;
  Seconds total = 0;
};

ScaleRun scale_run(const Instance& inst, RunResult (*run)(const Instance&, const RunBudget&),
                   std::uint64_t seed, long iterations) {
  ScaleRun out;
  RunResult r = run(inst, iteration_budget(iterations, seed));
  out.feasible = r.best.feasible;
  out.total = total_service_time(r.best);
  out.below_initial = out.total < total_service_time(r.initial);

  out.monotone = true;
  double prev = r.trace.records.empty() ? 0 : r.trace.records.front().best_total;
  bool prev_feasible = false;
  for (const auto& rec : r.trace.records) {
    if (prev_feasible && rec.best_total > prev) out.monotone = false;
    prev = rec.best_total;
    prev_feasible = rec.best_feasible;
  }

  // independent audit through the file format
  const std::string path = "acceptance_scale.solution.txt";
  {
    std::ofstream f(path);
    write_solution(f, strip_redundant_shifts(r.best), inst.requests);
  }
  AuditReport audit = audit_solution_file(path, inst);
  std::filesystem::remove(path);
  out.audited_clean = audit.recomputed.total() == 0 && audit.consistent();
  return out;
}

// ---- criterion 7: threshold schedule ------------------------------------

bool check_schedule() {
  const double ref = 123456.0;
  ThresholdSchedule s = make_schedule(ref, 0.02, 9000);
  if (s.threshold_at(0) != ref) return false;
  if (std::abs(s.threshold_at(9000) - 0.02 * ref) > 1e-9) return false;
  for (long it = 0; it <= 9000; it += 250) {
    const double expected = ref + (0.02 * ref - ref) * static_cast<double>(it) / 9000.0;
    if (std::abs(s.threshold_at(it) - expected) > 1e-9 * ref) return false;
  }
  return s.threshold_at(20000) == s.threshold_at(9000);
}

// ---- criterion 8: tabu mechanics -----------------------------------------

Instance four_stop_instance(Seconds ab, Seconds cd, Seconds ad, Seconds bc, Seconds ac,
                            Seconds bd) {
  std::vector<testutil::ToyVisit> visits = {
      {"A", "sa", "s", 100, 0, 900000},
      {"B", "sb", "s", 100, 0, 900000},
      {"C", "sc", "s", 100, 0, 900000},
      {"D", "sd", "s", 100, 0, 900000},
  };
  std::vector<std::vector<Seconds>> t(5, std::vector<Seconds>(5, 540));
  for (int i = 0; i < 5; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  auto set = [&](int i, int j, Seconds v) {
    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  set(1, 2, ab);
  set(3, 4, cd);
  set(1, 4, ad);
  set(2, 3, bc);
  set(1, 3, ac);
  set(2, 4, bd);
  return testutil::build_toy(visits, t, {0, 0});
}

std::uint64_t ordered_route_seed() {
  for (std::uint64_t seed = 0;; ++seed) {
    RngStream probe(seed);
    if (probe.next() % 2 == 0 && probe.next() % 2 == 1) return seed;
  }
}

bool check_tabu_mechanics() {
  // FIFO eviction across an 11-swap sequence
  TabuList fifo;
  for (int k = 0; k < 11; ++k) fifo.push(k, 100 + k);
  if (fifo.size() != 10 || fifo.contains(0, 100) || !fifo.contains(1, 101) ||
      !fifo.contains(10, 110)) {
    return false;
  }

  // no long arc anywhere: identity
  {
    Instance inst = four_stop_instance(540, 540, 500, 500, 500, 500);
    Solution sol = testutil::make_solution(inst, {{0, 1}, {2, 3}});
    TabuList tabu;
    RngStream rng(2);
    for (int k = 0; k < 10; ++k) {
      Solution out = long_arc_swap(sol, inst.matrix, inst.requests, rng, tabu);
      if (out.shifts[0].stops != sol.shifts[0].stops) return false;
    }
    if (tabu.size() != 0) return false;
  }

  // shared stops: identity
  {
    Instance inst = four_stop_instance(600, 600, 540, 540, 540, 540);
    Solution sol = testutil::make_solution(inst, {{0, 1}});
    TabuList tabu;
    RngStream rng(3);
    Solution out = long_arc_swap(sol, inst.matrix, inst.requests, rng, tabu);
    if (out.shifts[0].stops != sol.shifts[0].stops || tabu.size() != 0) return false;
  }

  // AD and BC short: B and D exchanged
  {
    Instance inst = four_stop_instance(600, 620, 500, 490, 540, 540);
    Solution sol = testutil::make_solution(inst, {{0, 1}, {2, 3}});
    TabuList tabu;
    RngStream rng(ordered_route_seed());
    Solution out = long_arc_swap(sol, inst.matrix, inst.requests, rng, tabu);
    if (out.shifts[0].stops != std::vector<int>{0, 3}) return false;
    if (!tabu.contains(inst.requests[1].matrix_index, inst.requests[3].matrix_index)) {
      return false;
    }
  }

  // AC and BD short: B and C exchanged
  {
    Instance inst = four_stop_instance(600, 620, 540, 540, 500, 490);
    Solution sol = testutil::make_solution(inst, {{0, 1}, {2, 3}});
    TabuList tabu;
    RngStream rng(ordered_route_seed());
    Solution out = long_arc_swap(sol, inst.matrix, inst.requests, rng, tabu);
    if (out.shifts[0].stops != std::vector<int>{0, 2}) return false;
  }

  // tabu-blocked: structure unchanged
  {
    Instance inst = four_stop_instance(600, 620, 500, 490, 540, 540);
    Solution sol = testutil::make_solution(inst, {{0, 1}, {2, 3}});
    TabuList tabu;
    tabu.push(inst.requests[1].matrix_index, inst.requests[3].matrix_index);
    RngStream rng(ordered_route_seed());
    Solution out = long_arc_swap(sol, inst.matrix, inst.requests, rng, tabu);
    if (out.shifts[0].stops != sol.shifts[0].stops) return false;
  }
  return true;
}

// ---- criterion 9: byte-identical reruns ----------------------------------

std::string run_fingerprint(const Instance& inst,
                            RunResult (*run)(const Instance&, const RunBudget&),
                            std::uint64_t seed, long iterations) {
  RunResult r = run(inst, iteration_budget(iterations, seed));
  std::ostringstream out;
  write_trace(out, r.trace);
  write_solution(out, strip_redundant_shifts(r.best), inst.requests);
  return out.str();
}

bool check_determinism(const Instance& inst) {
  RunResult (*runs[])(const Instance&, const RunBudget&) = {run_ssga, run_algorithm1,
                                                            run_algorithm2, run_algorithm3};
  for (auto* run : runs) {
    const std::string a = run_fingerprint(inst, run, 17, 3000);
    const std::string b = run_fingerprint(inst, run, 17, 3000);
    if (a != b) return false;
  }
  return true;
}

// ---- criterion 10: roulette frequencies ----------------------------------

bool check_roulette(std::string& detail) {
  OperatorBank bank = make_bank(OperatorKind::destroy, 2);
  bank.entries[0].weight = 3.0;
  RngStream rng(99);
  const int draws = 100000;
  int first = 0;
  for (int k = 0; k < draws; ++k) {
    if (roulette_pick(bank, rng).index == 1) ++first;
  }
  const double freq = static_cast<double>(first) / draws;
  std::ostringstream os;
  os << "weights [3,1] picked 0.75-weight entry at frequency " << freq;
  detail = os.str();
  return std::abs(freq - 0.75) < 0.02;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_suite <data-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];

  report(1, check_weight_update(),
         "weight update w=0.9w+0.1s: 1->1.5 on new-global, 1->0.9 on rejection, fixed point "
         "within 1e-9 after 400 updates");
  report(2, check_fragment_ingestion(),
         "matrix fragment: cost(50006,43440)=1439, cost(67933,43440)=480, "
         "back_to_back(43440,43448)");
  report(3, check_round_trip(),
         "all 289 destroy x repair pairs keep 12-request/3-shift solutions complete over 20 "
         "seeds");

  std::string detail4;
  const bool ok4 = check_toy_optimality(detail4);
  report(4, ok4, "exhaustive-oracle optimality within 50000 iterations; " + detail4);

  Instance inst = load_instance(dir + "/matrix.csv", dir + "/requests.txt", dir + "/config.txt");

  const long scale_iterations = 30000;
  RunResult (*scale_algs[])(const Instance&, const RunBudget&) = {run_algorithm1, run_algorithm2,
                                                                  run_algorithm3};
  const char* scale_names[] = {"alns-ta", "multiphase", "hybrid"};
  bool ok5 = true;
  std::vector<double> totals1, totals3;
  std::ostringstream detail5;
  for (int a = 0; a < 3; ++a) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      ScaleRun r = scale_run(inst, scale_algs[a], seed, scale_iterations);
      ok5 = ok5 && r.feasible && r.audited_clean && r.below_initial && r.monotone;
      if (a == 0) totals1.push_back(static_cast<double>(r.total));
      if (a == 2) totals3.push_back(static_cast<double>(r.total));
      detail5 << scale_names[a] << "/seed" << seed << "=" << r.total
              << (r.feasible && r.audited_clean ? "" : "(INFEASIBLE)") << ' ';
    }
  }
  report(5, ok5,
         "251-request instance, 3 algorithms x 3 seeds: feasible, audit-clean, below the "
         "initial total, monotone trace; " +
             detail5.str());

  const double mean1 = (totals1[0] + totals1[1] + totals1[2]) / 3.0;
  const double mean3 = (totals3[0] + totals3[1] + totals3[2]) / 3.0;
  {
    std::ostringstream os;
    os << "mean totals: hybrid " << mean3 << " vs single-phase " << mean1 << " (+1% margin)";
    report(6, mean3 <= mean1 * 1.01, os.str());
  }

  report(7, check_schedule(),
         "threshold starts at the reference, ends at 0.02x after 9000 iterations, linear and "
         "clamped");
  report(8, check_tabu_mechanics(),
         "FIFO capacity-10 eviction and every long-arc swap branch on hand-built matrices");
  report(9, check_determinism(inst),
         "byte-identical trace and solution files on rerun for all four algorithms");

  std::string detail10;
  const bool ok10 = check_roulette(detail10);
  report(10, ok10, detail10);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
