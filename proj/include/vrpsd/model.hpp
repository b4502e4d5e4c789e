#ifndef VRPSD_MODEL_HPP
#define VRPSD_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vrpsd {

using Seconds = std::int64_t;

// Fixed per-shift overheads: 15 min check-in before the first departure,
// 15 min check-out and one 30 min break added to the shift duration.
inline constexpr Seconds kCheckIn = 900;
inline constexpr Seconds kCheckOut = 900;
inline constexpr Seconds kBreak = 1800;
inline constexpr Seconds kShiftOverhead = kCheckIn + kCheckOut + kBreak;
inline constexpr Seconds kMaxShiftDuration = 43200;  // 12 h hard limit

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One expanded visit: the atomic unit routed. Multi-visit sites are expanded
// so that every request is serviced exactly once.
struct Request {
  std::string id;
  std::string site_id;
  std::string service_type;
  Seconds service_duration = 0;
  Seconds window_start = 0;  // seconds from midnight
  Seconds window_end = 0;    // may exceed 86400 (next-day span)
  int back_to_back_group = -1;
  int matrix_index = -1;  // filled when cross-validated against the matrix
};

class RequestSet {
 public:
  RequestSet() = default;

  int add(Request r);  // throws StructuralError on duplicate id

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Request& operator[](int i) const { return items_[static_cast<std::size_t>(i)]; }
  Request& operator[](int i) { return items_[static_cast<std::size_t>(i)]; }
  const std::vector<Request>& items() const { return items_; }

  // -1 when unknown.
  int index_of(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? -1 : it->second;
  }

 private:
  std::vector<Request> items_;
  std::unordered_map<std::string, int> by_id_;
};

// Dense matrix of travel+service seconds between stops. cost[i][j] bundles
// travel(i->j) and the service duration at j. A zero entry between distinct
// non-depot stops marks a back-to-back prohibited pair; the prohibition is
// kept as an explicit relation rather than re-derived from the zeros.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::vector<std::string> stop_ids, int depot_index);

  int size() const { return static_cast<int>(stop_ids_.size()); }
  int depot() const { return depot_; }
  const std::vector<std::string>& stop_ids() const { return stop_ids_; }
  const std::string& stop_id(int i) const { return stop_ids_[static_cast<std::size_t>(i)]; }

  int index_of(const std::string& stop_id) const {
    auto it = index_.find(stop_id);
    return it == index_.end() ? -1 : it->second;
  }

  Seconds cost(int i, int j) const { return cost_[at(i, j)]; }
  void set_cost(int i, int j, Seconds c) { cost_[at(i, j)] = c; }

  bool back_to_back(int i, int j) const { return b2b_[at(i, j)] != 0; }
  void set_back_to_back(int i, int j) {
    b2b_[at(i, j)] = 1;
    b2b_[at(j, i)] = 1;
  }

  // Service duration bundled into column j; 0 for the depot. Lets arc
  // classification recover pure travel time as cost - service.
  Seconds service_duration(int j) const { return service_[static_cast<std::size_t>(j)]; }
  void set_service_duration(int j, Seconds q) { service_[static_cast<std::size_t>(j)] = q; }

  Seconds travel(int i, int j) const { return cost(i, j) - service_duration(j); }

 private:
  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(i) * stop_ids_.size() + static_cast<std::size_t>(j);
  }

  std::vector<std::string> stop_ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Seconds> cost_;
  std::vector<std::uint8_t> b2b_;
  std::vector<Seconds> service_;
  int depot_ = 0;
};

struct StopTiming {
  Seconds arrival = 0;        // at site, before any window wait
  Seconds service_start = 0;  // max(arrival, window_start)
  Seconds completion = 0;     // service_start + service_duration
};

// One driver tour with a preset start time. stops holds request indices.
struct Shift {
  std::string shift_id;
  Seconds start_time = 0;
  std::vector<int> stops;

  // derived by evaluate_shift_timing
  std::vector<StopTiming> timing;
  Seconds downtime_total = 0;
  Seconds completion_time = 0;  // back at depot, overheads included
  Seconds duration = 0;         // completion_time - start_time

  bool empty() const { return stops.empty(); }
};

struct Violations {
  int deadline_misses = 0;
  int back_to_back_pairs = 0;
  int overlong_shifts = 0;
  int total() const { return deadline_misses + back_to_back_pairs + overlong_shifts; }
};

struct ObjectiveBreakdown {
  double shift_setup_cost = 0.0;
  double time_cost = 0.0;
  double violation_cost = 0.0;
  double shift_shape_cost = 0.0;
  double total = 0.0;
};

struct Solution {
  std::vector<Shift> shifts;
  ObjectiveBreakdown objective;
  Violations violations;
  bool feasible = false;

  std::size_t assigned_count() const {
    std::size_t n = 0;
    for (const auto& s : shifts) n += s.stops.size();
    return n;
  }
};

// Forward sweep from the fixed start time. Check-in delays the first
// departure; check-out and the break are lumped into the duration. Pure in
// (stops, matrix, requests); derived fields are overwritten.
void evaluate_shift_timing(Shift& shift, const CostMatrix& matrix, const RequestSet& requests);

Violations count_violations(const Solution& solution, const CostMatrix& matrix,
                            const RequestSet& requests);

// Validates raw visit records and assigns back-to-back groups per
// (site_id, service_type). Each visit is a distinct request.
RequestSet expand_multi_visits(std::vector<Request> raw_requests);

// Drops empty shifts from reported output. Search-internal solutions keep
// all shifts so the fixed fleet stays addressable.
Solution strip_redundant_shifts(const Solution& solution);

}  // namespace vrpsd

#endif
