#pragma once

#include <map>
#include <utility>
#include <vector>

#include "abacus/types.hpp"

namespace abacus::numerology {

struct WijResult {
  long i = 0;
  long j = 0;
  Integer value = 1;
  bool certified = false;
  // prime -> (lower exponent, upper exponent)
  std::map<long, std::pair<long, long>> valuations;
  long search_bound = 0;  // brute-force bound at which the result was settled
};

// gcd of m^i - m^j over 2 <= |m| <= bound.
Integer w_bruteforce(long i, long j, long bound);

WijResult w_certified(long i, long j);

// Lower exponent of l in w_{i,j} guaranteed by the converse valuation rule.
long lower_exponent(long l, long i, long j);

Integer lcm_sharp(long r);

struct BoundResult {
  Integer value = 1;
  bool certified = true;
  std::vector<WijResult> factors;
};

BoundResult bound_N(long i, long g, long cd);
Integer bound_M(long g, long cd);
std::vector<long> bound_M_primes(long g, long cd);

struct Bezout {
  Integer gcd = 0;  // nonnegative
  std::vector<Integer> coefficients;  // sum coefficients[s] * values[s] == gcd
};

Bezout bezout(const std::vector<Integer>& values);

bool is_prime(long n);
long valuation(const Integer& x, long l);

}  // namespace abacus::numerology
