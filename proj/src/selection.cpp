#include "vrpsd/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace vrpsd {

OperatorBank make_bank(OperatorKind kind, int count) {
  OperatorBank bank;
  bank.entries.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) bank.entries.push_back({OperatorId{kind, i}, 1.0});
  return bank;
}

OperatorId roulette_pick(const OperatorBank& bank, RngStream& rng) {
  if (bank.entries.empty()) throw std::logic_error("roulette_pick on empty bank");
  double total = 0;
  for (const auto& e : bank.entries) total += std::max(e.weight, bank.weight_floor);
  double u = rng.real01() * total;
  for (const auto& e : bank.entries) {
    u -= std::max(e.weight, bank.weight_floor);
    if (u < 0) return e.id;
  }
  return bank.entries.back().id;  // guards rounding at the upper edge
}

void update_weight(OperatorBank& bank, OperatorId id, int outcome_class) {
  if (outcome_class < 0 || outcome_class > 3) throw std::logic_error("bad outcome class");
  for (auto& e : bank.entries) {
    if (e.id == id) {
      e.weight = bank.decay * e.weight +
                 (1.0 - bank.decay) * bank.scores[static_cast<std::size_t>(outcome_class)];
      return;
    }
  }
  throw std::logic_error("update_weight: operator not in bank");
}

}  // namespace vrpsd
