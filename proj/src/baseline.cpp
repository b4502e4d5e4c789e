#include "vrpsd/baseline.hpp"

#include <algorithm>
#include <chrono>

namespace vrpsd {

Solution decode(const Chromosome& c, const Instance& instance) {
  Solution solution;
  solution.shifts.resize(c.sizes.size());
  std::size_t cursor = 0;
  for (std::size_t s = 0; s < c.sizes.size(); ++s) {
    Shift& shift = solution.shifts[s];
    shift.shift_id = "S" + std::to_string(s + 1);
    shift.start_time = instance.config.shift_start_times[s];
    shift.stops.assign(c.perm.begin() + static_cast<std::ptrdiff_t>(cursor),
                       c.perm.begin() + static_cast<std::ptrdiff_t>(cursor) +
                           c.sizes[s]);
    cursor += static_cast<std::size_t>(c.sizes[s]);
  }
  refresh(solution, instance.matrix, instance.requests, instance.config.weights);
  return solution;
}

namespace {

Chromosome random_chromosome(const Instance& instance, RngStream& rng) {
  Chromosome c;
  const std::size_t n = instance.requests.size();
  c.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.perm[i] = static_cast<int>(i);
  rng.shuffle(c.perm);
  c.sizes.assign(static_cast<std::size_t>(instance.config.shift_count()), 0);
  for (std::size_t i = 0; i < n; ++i) ++c.sizes[rng.below(c.sizes.size())];
  return c;
}

// Order crossover: a slice of parent a, the rest in parent b's order.
std::vector<int> order_crossover(const std::vector<int>& a, const std::vector<int>& b,
                                 RngStream& rng) {
  const std::size_t n = a.size();
  if (n < 2) return a;
  std::size_t i = rng.below(n);
  std::size_t j = rng.below(n);
  if (i > j) std::swap(i, j);
  std::vector<int> child(n, -1);
  std::vector<char> used(n, 0);
  for (std::size_t k = i; k <= j; ++k) {
    child[k] = a[k];
    used[static_cast<std::size_t>(a[k])] = 1;
  }
  std::size_t fill = 0;
  for (int x : b) {
    if (used[static_cast<std::size_t>(x)]) continue;
    while (fill >= i && fill <= j) ++fill;
    child[fill++] = x;
  }
  return child;
}

void mutate(Chromosome& c, RngStream& rng) {
  // Relocate one stop; the segment sizes follow with probability 1/2 so
  // shift loads can drift too.
  if (c.perm.size() >= 2) {
    const std::size_t from = rng.below(c.perm.size());
    const int v = c.perm[from];
    c.perm.erase(c.perm.begin() + static_cast<std::ptrdiff_t>(from));
    const std::size_t to = rng.below(c.perm.size() + 1);
    c.perm.insert(c.perm.begin() + static_cast<std::ptrdiff_t>(to), v);
  }
  if (c.sizes.size() >= 2 && rng.below(2) == 0) {
    const std::size_t give = rng.below(c.sizes.size());
    const std::size_t take = rng.below(c.sizes.size());
    if (give != take && c.sizes[give] > 0) {
      --c.sizes[give];
      ++c.sizes[take];
    }
  }
}

}  // namespace

RunResult run_ssga(const Instance& instance, const RunBudget& budget) {
  RngStream rng = RngStream(budget.seed).derive(0);
  const int population_size = std::max(2, instance.config.ga_population);
  const double mutation_rate = instance.config.ga_mutation_rate;

  std::vector<Chromosome> population;
  population.reserve(static_cast<std::size_t>(population_size));
  Solution best;
  bool have_best = false;
  for (int i = 0; i < population_size; ++i) {
    Chromosome c = random_chromosome(instance, rng);
    Solution decoded = decode(c, instance);
    c.fitness = decoded.objective.total;
    if (!have_best || decoded.objective.total < best.objective.total) {
      best = decoded;
      have_best = true;
    }
    population.push_back(std::move(c));
  }
  const Solution initial = best;

  ConvergenceTrace trace;
  trace.include_wall_time = !budget.use_iterations;
  const auto t0 = std::chrono::steady_clock::now();
  PhaseClock clock = budget.use_iterations ? PhaseClock::iterations(budget.iterations)
                                           : PhaseClock::wall(budget.wall_seconds);
  long iteration = 0;
  while (!clock.expired()) {
    const std::size_t pa = rng.below(population.size());
    std::size_t pb = rng.below(population.size() - 1);
    if (pb >= pa) ++pb;

    Chromosome child;
    child.perm = order_crossover(population[pa].perm, population[pb].perm, rng);
    child.sizes = rng.below(2) == 0 ? population[pa].sizes : population[pb].sizes;
    if (rng.real01() < mutation_rate) mutate(child, rng);

    Solution decoded = decode(child, instance);
    child.fitness = decoded.objective.total;
    ++iteration;
    clock.tick();

    int outcome = kOutcomeAccepted;
    if (decoded.objective.total < best.objective.total) {
      if (!best.feasible || decoded.feasible) {
        best = decoded;
        outcome = kOutcomeNewGlobal;
      }
    }

    auto worst = std::max_element(
        population.begin(), population.end(),
        [](const Chromosome& x, const Chromosome& y) { return x.fitness < y.fitness; });
    *worst = std::move(child);

    TraceRecord r;
    r.iteration = iteration;
    r.wall_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count());
    r.phase = "ga";
    r.op = "ga";
    r.candidate_total = decoded.objective.total;
    r.best_total = best.objective.total;
    r.candidate_feasible = decoded.feasible;
    r.best_feasible = best.feasible;
    r.outcome_class = outcome;
    trace.records.push_back(std::move(r));
  }

  RunResult result;
  result.best = std::move(best);
  result.initial = initial;
  result.trace = std::move(trace);
  return result;
}

}  // namespace vrpsd
