#ifndef VRPSD_TRACE_HPP
#define VRPSD_TRACE_HPP

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace vrpsd {

// One row per evaluated complete candidate solution. The iteration counter
// covers ALNS, TS and GA candidates alike.
struct TraceRecord {
  long iteration = 0;
  long wall_ms = 0;
  std::string phase;     // "alns1", "alns2", "ts", "ga"
  std::string op;        // "D3+R16", "T1", "ga"
  double candidate_total = 0;
  double best_total = 0;
  bool candidate_feasible = false;
  bool best_feasible = false;
  int outcome_class = 3;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;
  // Wall times are omitted from serialized traces in iteration-budget mode
  // so reruns of a seeded run are byte-identical.
  bool include_wall_time = false;
};

void write_trace(std::ostream& out, const ConvergenceTrace& trace);

// Phase budget: either a fixed number of candidate evaluations (reproducible
// test mode) or a wall-clock deadline.
class PhaseClock {
 public:
  static PhaseClock iterations(long n) {
    PhaseClock c;
    c.iteration_mode_ = true;
    c.remaining_ = n;
    return c;
  }

  static PhaseClock wall(double seconds) {
    PhaseClock c;
    c.iteration_mode_ = false;
    c.deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
    return c;
  }

  bool expired() const {
    if (iteration_mode_) return remaining_ <= 0;
    return std::chrono::steady_clock::now() >= deadline_;
  }

  // One candidate evaluation consumed.
  void tick() {
    if (iteration_mode_) --remaining_;
  }

  bool iteration_mode() const { return iteration_mode_; }

 private:
  bool iteration_mode_ = true;
  long remaining_ = 0;
  std::chrono::steady_clock::time_point deadline_{};
};

}  // namespace vrpsd

#endif
