#include "abacus/random.hpp"

namespace abacus {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return lo + static_cast<long>(r % span);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MultiVector random_class(const Space& space, int k, Rng& rng, int terms, long bound) {
  auto masks = masks_of_degree(space.rank(), k);
  MultiVector x(space);
  for (int t = 0; t < terms; ++t) {
    Mask m = masks[rng.uniform(0, static_cast<long>(masks.size()) - 1)];
    x.add_term(m, Rational(rng.uniform(-bound, bound)));
  }
  return x;
}

}  // namespace abacus
