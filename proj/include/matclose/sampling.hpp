#pragma once

#include <cstdint>
#include <random>

#include "matclose/closure.hpp"
#include "matclose/ring.hpp"

namespace matclose {

/// Seeded generator. `below` uses rejection sampling on the raw 64-bit
/// stream, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Shape of random values in infinite rings.
struct SampleShape {
  std::int64_t max_degree = 3;   ///< polynomial degree / Laurent exponent bound
  std::size_t max_level = 2;     ///< closure elements
};

/// Uniform over enumerable rings; bounded random support otherwise.
Value random_value(const Ring& ring, Rng& rng, const SampleShape& shape = {});

/// Random body at a uniformly chosen level <= max_level, normalized.
ClosureElement random_closure(const Ring& closure_ring, Rng& rng, std::size_t max_level,
                              const SampleShape& shape = {});

/// Every element of MC_n(R) of level <= max_level, canonical and sorted.
/// Throws BoundExceeded if more than `budget` bodies would be visited.
std::vector<ClosureElement> closure_classes_up_to(const Ring& closure_ring, std::size_t max_level,
                                                  std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace matclose
