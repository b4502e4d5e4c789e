#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "vrpsd/construct.hpp"
#include "vrpsd/operators.hpp"

using namespace vrpsd;
using testutil::ToyVisit;
using testutil::build_toy;
using testutil::make_solution;

namespace {

Solution constructed(const Instance& inst, std::uint64_t seed) {
  RngStream rng(seed);
  Solution sol = build_initial(inst.requests, inst.matrix, inst.config, rng);
  refresh(sol, inst.matrix, inst.requests, inst.config.weights);
  return sol;
}

bool complete_once(const Solution& sol, std::size_t nreq) {
  std::vector<int> seen(nreq, 0);
  for (const auto& s : sol.shifts) {
    for (int r : s.stops) {
      if (r < 0 || static_cast<std::size_t>(r) >= nreq) return false;
      ++seen[static_cast<std::size_t>(r)];
    }
  }
  for (int c : seen) {
    if (c != 1) return false;
  }
  return true;
}

// Removes request `victim` wherever it is and refreshes.
Solution without(const Solution& sol, int victim, const Instance& inst) {
  Solution out = sol;
  for (auto& s : out.shifts) {
    for (std::size_t p = 0; p < s.stops.size(); ++p) {
      if (s.stops[p] == victim) {
        s.stops.erase(s.stops.begin() + static_cast<std::ptrdiff_t>(p));
        refresh(out, inst.matrix, inst.requests, inst.config.weights);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("operator names follow the catalog numbering") {
  CHECK(operator_name({OperatorKind::destroy, 3}) == "D3");
  CHECK(operator_name({OperatorKind::repair, 16}) == "R16");
  CHECK(operator_name({OperatorKind::tabu, 1}) == "T1");
}

TEST_CASE("D1 on a single-stop solution removes that stop") {
  RngStream mk(21);
  Instance inst = testutil::random_toy(mk, 1, 2);
  Solution sol = make_solution(inst, {{0}, {}});
  RngStream rng(4);
  DestroyResult d = apply_destroy({OperatorKind::destroy, 1}, sol, inst.matrix, inst.requests,
                                  inst.config.weights, rng, inst.config.op_params);
  CHECK(d.removed == std::vector<int>{0});
  CHECK(d.partial.assigned_count() == 0);
}

TEST_CASE("D9 removes the unique deadline violator") {
  // v2's window closes before anything can reach it; v1 and v3 are easy
  std::vector<ToyVisit> visits = {
      {"v1", "a", "s", 300, 0, 50000},
      {"v2", "b", "s", 300, 0, 1000},  // impossible: check-in alone is 900
      {"v3", "c", "s", 300, 0, 50000},
  };
  std::vector<std::vector<Seconds>> travel = {
      {0, 300, 300, 300}, {300, 0, 300, 300}, {300, 300, 0, 300}, {300, 300, 300, 0}};
  Instance inst = build_toy(visits, travel, {0, 0});
  Solution sol = make_solution(inst, {{0, 1, 2}, {}});
  REQUIRE(sol.violations.deadline_misses == 1);

  RngStream rng(7);
  DestroyResult d = apply_destroy({OperatorKind::destroy, 9}, sol, inst.matrix, inst.requests,
                                  inst.config.weights, rng, inst.config.op_params);
  CHECK(d.removed == std::vector<int>{1});
}

TEST_CASE("lateness matches its definition") {
  std::vector<ToyVisit> visits = {{"v1", "a", "s", 300, 0, 2100}};
  std::vector<std::vector<Seconds>> travel = {{0, 300}, {300, 0}};
  Instance inst = build_toy(visits, travel, {0});
  // completion = 900 + 300 + 300 = 1500 with deadline 2100
  Solution early = make_solution(inst, {{0}});
  CHECK(lateness(0, early, inst.requests) == 0);

  Instance exact = build_toy({{"v1", "a", "s", 300, 0, 1500}}, travel, {0});
  Solution on_time = make_solution(exact, {{0}});
  CHECK(lateness(0, on_time, exact.requests) == 0);

  Instance late = build_toy({{"v1", "a", "s", 300, 0, 1200}}, travel, {0});
  Solution miss = make_solution(late, {{0}});
  CHECK(lateness(0, miss, late.requests) == 300);

  Solution unassigned = make_solution(inst, {{}});
  CHECK_THROWS_AS(lateness(0, unassigned, inst.requests), StructuralError);
}

TEST_CASE("D8 removes the stop whose removal minimizes the objective") {
  RngStream mk(31);
  for (int trial = 0; trial < 5; ++trial) {
    Instance inst = testutil::random_toy(mk, 3, 2);
    Solution sol = constructed(inst, 100 + static_cast<std::uint64_t>(trial));

    double best_total = std::numeric_limits<double>::infinity();
    int best_victim = -1;
    for (int victim = 0; victim < 3; ++victim) {
      const double total = without(sol, victim, inst).objective.total;
      if (total < best_total) {
        best_total = total;
        best_victim = victim;
      }
    }

    RngStream rng(trial);
    DestroyResult d = apply_destroy({OperatorKind::destroy, 8}, sol, inst.matrix, inst.requests,
                                    inst.config.weights, rng, inst.config.op_params);
    REQUIRE(d.removed.size() == 1);
    CHECK(d.removed[0] == best_victim);
    CHECK(d.partial.objective.total == doctest::Approx(best_total));
  }
}

TEST_CASE("D13 and D14 are no-ops without an overlong shift") {
  RngStream mk(41);
  Instance inst = testutil::random_toy(mk, 6, 2);
  Solution sol = constructed(inst, 5);
  REQUIRE(sol.violations.overlong_shifts == 0);
  for (int idx : {13, 14}) {
    RngStream rng(1);
    DestroyResult d = apply_destroy({OperatorKind::destroy, idx}, sol, inst.matrix,
                                    inst.requests, inst.config.weights, rng,
                                    inst.config.op_params);
    CHECK(d.removed.empty());
    CHECK(d.partial.assigned_count() == sol.assigned_count());
  }
}

TEST_CASE("D13 trims the last stop of every overlong shift, D14 the first") {
  // one giant service makes shift 1 overlong no matter the order
  std::vector<ToyVisit> visits = {
      {"v1", "a", "s", 41000, 0, 900000},
      {"v2", "b", "s", 300, 0, 900000},
      {"v3", "c", "s", 300, 0, 900000},
  };
  std::vector<std::vector<Seconds>> travel = {
      {0, 300, 300, 300}, {300, 0, 300, 300}, {300, 300, 0, 300}, {300, 300, 300, 0}};
  Instance inst = build_toy(visits, travel, {0, 0});
  Solution sol = make_solution(inst, {{0, 1, 2}, {}});
  REQUIRE(sol.violations.overlong_shifts == 1);

  RngStream rng(1);
  DestroyResult last = apply_destroy({OperatorKind::destroy, 13}, sol, inst.matrix,
                                     inst.requests, inst.config.weights, rng,
                                     inst.config.op_params);
  CHECK(last.removed == std::vector<int>{2});

  DestroyResult first = apply_destroy({OperatorKind::destroy, 14}, sol, inst.matrix,
                                      inst.requests, inst.config.weights, rng,
                                      inst.config.op_params);
  CHECK(first.removed == std::vector<int>{0});
}

TEST_CASE("R2 with nothing removed is the identity") {
  RngStream mk(51);
  Instance inst = testutil::random_toy(mk, 4, 2);
  Solution sol = constructed(inst, 9);
  DestroyResult none{sol, {}};
  RngStream rng(3);
  Solution out = apply_repair({OperatorKind::repair, 2}, none, inst.matrix, inst.requests,
                              inst.config.weights, rng, inst.config.op_params);
  for (std::size_t s = 0; s < sol.shifts.size(); ++s) {
    CHECK(out.shifts[s].stops == sol.shifts[s].stops);
  }
}

TEST_CASE("R4 lands a single customer in the cheapest position") {
  RngStream mk(61);
  for (int trial = 0; trial < 5; ++trial) {
    Instance inst = testutil::random_toy(mk, 5, 2);
    Solution sol = constructed(inst, 200 + static_cast<std::uint64_t>(trial));
    Solution partial = without(sol, 2, inst);
    DestroyResult destroyed{partial, {2}};

    // oracle: enumerate every insertion position in every shift
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < partial.shifts.size(); ++s) {
      for (std::size_t p = 0; p <= partial.shifts[s].stops.size(); ++p) {
        Solution cand = partial;
        auto& stops = cand.shifts[s].stops;
        stops.insert(stops.begin() + static_cast<std::ptrdiff_t>(p), 2);
        refresh(cand, inst.matrix, inst.requests, inst.config.weights);
        best_total = std::min(best_total, cand.objective.total);
      }
    }

    RngStream rng(trial);
    Solution out = apply_repair({OperatorKind::repair, 4}, destroyed, inst.matrix, inst.requests,
                                inst.config.weights, rng, inst.config.op_params);
    CHECK(out.objective.total == doctest::Approx(best_total));
    CHECK(complete_once(out, inst.requests.size()));
  }
}

TEST_CASE("regret_select follows its definition") {
  RngStream mk(71);
  Instance inst = testutil::random_toy(mk, 6, 2);
  Solution sol = constructed(inst, 17);

  // single candidate: returned as-is
  Solution p1 = without(sol, 3, inst);
  CHECK(regret_select({3}, p1, inst.matrix, inst.requests, inst.config.weights, 2) == 3);

  // four candidates: match an exhaustive regret table
  Solution partial = sol;
  for (int victim : {0, 1, 2, 3}) partial = without(partial, victim, inst);
  std::vector<int> removed{0, 1, 2, 3};

  double best_regret = -1;
  int expected = -1;
  for (int r : removed) {
    std::vector<double> costs;
    for (std::size_t s = 0; s < partial.shifts.size(); ++s) {
      for (std::size_t p = 0; p <= partial.shifts[s].stops.size(); ++p) {
        Solution cand = partial;
        auto& stops = cand.shifts[s].stops;
        stops.insert(stops.begin() + static_cast<std::ptrdiff_t>(p), r);
        refresh(cand, inst.matrix, inst.requests, inst.config.weights);
        costs.push_back(cand.objective.total - partial.objective.total);
      }
    }
    std::sort(costs.begin(), costs.end());
    const double regret = costs.size() > 1 ? costs[1] - costs[0] : 0;
    if (regret > best_regret) {
      best_regret = regret;
      expected = r;
    }
  }
  CHECK(regret_select(removed, partial, inst.matrix, inst.requests, inst.config.weights, 2) ==
        expected);
}

TEST_CASE("all destroy-repair pairs round-trip to complete solutions") {
  RngStream mk(81);
  Instance inst = testutil::random_toy(mk, 12, 3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Solution sol = constructed(inst, seed);
    RngStream rng(seed * 1000);
    for (int d = 1; d <= kDestroyCount; ++d) {
      for (int r = 1; r <= kRepairCount; ++r) {
        DestroyResult destroyed =
            apply_destroy({OperatorKind::destroy, d}, sol, inst.matrix, inst.requests,
                          inst.config.weights, rng, inst.config.op_params);
        // removed and assigned partition the request set
        std::set<int> removed(destroyed.removed.begin(), destroyed.removed.end());
        REQUIRE(removed.size() == destroyed.removed.size());
        REQUIRE(destroyed.partial.assigned_count() + removed.size() == inst.requests.size());

        Solution out =
            apply_repair({OperatorKind::repair, r}, destroyed, inst.matrix, inst.requests,
                         inst.config.weights, rng, inst.config.op_params);
        REQUIRE(complete_once(out, inst.requests.size()));
      }
    }
  }
}

TEST_CASE("deterministic repairs are pure given the destroyed input") {
  RngStream mk(91);
  Instance inst = testutil::random_toy(mk, 8, 2);
  Solution sol = constructed(inst, 2);
  RngStream drng(5);
  DestroyResult destroyed = apply_destroy({OperatorKind::destroy, 2}, sol, inst.matrix,
                                          inst.requests, inst.config.weights, drng,
                                          inst.config.op_params);
  for (int r : {3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 16, 17}) {
    RngStream r1(1), r2(999);
    Solution a = apply_repair({OperatorKind::repair, r}, destroyed, inst.matrix, inst.requests,
                              inst.config.weights, r1, inst.config.op_params);
    Solution b = apply_repair({OperatorKind::repair, r}, destroyed, inst.matrix, inst.requests,
                              inst.config.weights, r2, inst.config.op_params);
    for (std::size_t s = 0; s < a.shifts.size(); ++s) {
      CHECK(a.shifts[s].stops == b.shifts[s].stops);
    }
  }
}

TEST_CASE("unknown operator indices are rejected") {
  RngStream mk(95);
  Instance inst = testutil::random_toy(mk, 3, 2);
  Solution sol = constructed(inst, 1);
  RngStream rng(1);
  CHECK_THROWS(apply_destroy({OperatorKind::destroy, 18}, sol, inst.matrix, inst.requests,
                             inst.config.weights, rng, inst.config.op_params));
  DestroyResult d{sol, {}};
  CHECK_THROWS(apply_repair({OperatorKind::repair, 0}, d, inst.matrix, inst.requests,
                            inst.config.weights, rng, inst.config.op_params));
}
