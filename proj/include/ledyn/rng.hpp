// Seeded, platform-pinned random numbers for the property suites. mt19937_64
// output is fixed by the standard and the uniform map below avoids
// distribution-object implementation differences, so a seed fixes every
// sampled value on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace ledyn {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  double unit() { return (g() >> 11) * 0x1.0p-53; } // [0,1)
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }
};

} // namespace ledyn
