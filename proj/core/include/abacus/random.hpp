#pragma once

#include <cstdint>
#include <random>

#include "abacus/multivector.hpp"

namespace abacus {

// Seeded generator with a platform-independent integer draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // uniform on [lo, hi]
  long uniform(long lo, long hi);
  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 engine_;
};

// Seed for trial `t` of a batch started from `seed` (splitmix64 step).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t);

// Random integral homogeneous class of degree k with up to `terms`
// monomials and coefficients in [-bound, bound].
MultiVector random_class(const Space& space, int k, Rng& rng, int terms = 4, long bound = 5);

}  // namespace abacus
