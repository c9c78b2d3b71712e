#pragma once

#include <cstdint>
#include <random>

namespace bmg {

/// 64-bit linear congruential generator, x' = a*x + c mod 2^64 with
/// a = 6364136223846793005 and c = 1442695040888963407, seeded with x0 = seed.
/// Draws use the high bits: uniform_below(n) = (x' >> 33) mod n.
class Rng {
 public:
  using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int uniform_below(int n) { return static_cast<int>((next() >> 33) % static_cast<std::uint64_t>(n)); }
  bool coin() { return uniform_below(2) == 1; }

 private:
  Engine engine_;
};

}  // namespace bmg
