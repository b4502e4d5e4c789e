#ifndef VRPSD_RNG_HPP
#define VRPSD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace vrpsd {

// Seeded random stream. All randomness in the solver flows through this so
// that a run is reproducible from its seed alone. mt19937_64 output is fully
// specified by the standard; the bounded draw below avoids the
// implementation-defined std::uniform_int_distribution.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return gen_(); }

  // Uniform draw in [0, n). n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  // Uniform double in [0, 1).
  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Child stream derived from the master seed and a salt. Used for per-phase
  // reseeding: the same (master seed, salt) always yields the same stream.
  RngStream derive(std::uint64_t salt) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RngStream(z ^ (z >> 31));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace vrpsd

#endif
