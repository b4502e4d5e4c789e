#ifndef VRPSD_TABU_HPP
#define VRPSD_TABU_HPP

#include <deque>
#include <utility>

#include "vrpsd/model.hpp"
#include "vrpsd/rng.hpp"

namespace vrpsd {

// FIFO memory of recent swap moves, keyed by unordered stop pairs
// (matrix indices). Default capacity 10.
class TabuList {
 public:
  explicit TabuList(std::size_t capacity = 10) : capacity_(capacity) {}

  bool contains(int a, int b) const {
    auto key = make_key(a, b);
    for (const auto& k : queue_) {
      if (k == key) return true;
    }
    return false;
  }

  void push(int a, int b) {
    if (capacity_ == 0) return;
    if (queue_.size() == capacity_) queue_.pop_front();
    queue_.push_back(make_key(a, b));
  }

  std::size_t size() const { return queue_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::deque<std::pair<int, int>>& entries() const { return queue_; }

 private:
  static std::pair<int, int> make_key(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::deque<std::pair<int, int>> queue_;
  std::size_t capacity_;
};

enum class ArcClass { long_arc, short_arc, neither };

// Arc classification concerns pure travel: the bundled destination service
// time is subtracted from the matrix cost. Arcs touching the depot are
// neither long nor short.
ArcClass classify_arc(int i, int j, const CostMatrix& matrix, Seconds long_threshold = 570,
                      Seconds short_threshold = 510);

// Exchanges two random assigned stops across the solution and records the
// pair; a tabu pair makes the move a no-op. No-op below two assigned stops.
// Returned solution carries stale timing.
Solution random_swap(const Solution& solution, const RequestSet& requests, RngStream& rng,
                     TabuList& tabu);

// Long-arc exchange: finds long arcs AB and CD in two random routes and
// swaps endpoints when the crossing arcs are short and the move is not tabu.
// All failure paths leave the solution unchanged.
Solution long_arc_swap(const Solution& solution, const CostMatrix& matrix,
                       const RequestSet& requests, RngStream& rng, TabuList& tabu,
                       Seconds long_threshold = 570, Seconds short_threshold = 510);

}  // namespace vrpsd

#endif
