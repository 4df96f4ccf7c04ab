#include "abacus/numerology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace abacus::numerology {

namespace {

constexpr long kFirstBound = 50;
constexpr long kLastBound = 3200;

Integer term(long m, long i, long j) { return ipow(m, i) - ipow(m, j); }

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long valuation(const Integer& x, long l) {
  if (x == 0) throw PreconditionError("valuation of zero");
  Integer y = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(l))) {
    y /= l;
    ++v;
  }
  return v;
}

Integer w_bruteforce(long i, long j, long bound) {
  if (j < 0) return 1;
  if (i <= j) throw PreconditionError("w_bruteforce needs i > j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  if (bound < 3) throw PreconditionError("w_bruteforce needs bound >= 3");
  Integer g = 0;
  for (long m = 2; m <= bound; ++m) {
    g = gcd(g, term(m, i, j));
    g = gcd(g, term(-m, i, j));
    if (g == 1) break;
  }
  return g;
}

long lower_exponent(long l, long i, long j) {
  long d = i - j;
  long top = 0;
  if (l == 2) {
    if (d % 2 != 0) top = 1;
    else top = 2 + valuation(Integer(d), 2);
  } else {
    if (d % (l - 1) != 0) return 0;
    // largest s with l^{s-1} | d / (l-1)
    top = 1 + valuation(Integer(d / (l - 1)), l);
  }
  return std::max(0L, std::min(top, j));
}

WijResult w_certified(long i, long j) {
  if (i <= j) throw PreconditionError("w_certified needs i > j");
  WijResult res;
  res.i = i;
  res.j = j;
  if (j < 0) {
    res.value = 1;
    res.certified = true;
    return res;
  }
  std::vector<long> candidates;
  for (long l = 2; l <= std::max(2L, i - j + 1); ++l)
    if (is_prime(l)) candidates.push_back(l);

  Integer lower = 1;
  std::map<long, long> lo;
  for (long l : candidates) {
    lo[l] = lower_exponent(l, i, j);
    lower *= ipow(l, static_cast<unsigned long>(lo[l]));
  }

  for (long bound = kFirstBound; bound <= kLastBound; bound *= 2) {
    Integer upper = w_bruteforce(i, j, bound);
    res.search_bound = bound;
    res.valuations.clear();
    for (long l : candidates)
      res.valuations[l] = {lo[l], valuation(upper, l)};
    if (upper == lower) {
      res.value = lower;
      res.certified = true;
      return res;
    }
    res.value = upper;
  }
  res.certified = false;
  return res;
}

Integer lcm_sharp(long r) {
  if (r < 1) throw PreconditionError("lcm_sharp needs r >= 1");
  Integer l = 1;
  for (long a = 2; a <= r; ++a) l = lcm(l, Integer(a));
  return l;
}

BoundResult bound_N(long i, long g, long cd) {
  if (g < 1 || cd < 0 || i < 0 || i > 2 * g) throw PreconditionError("bound_N needs g >= 1, cd >= 0, 0 <= i <= 2g");
  BoundResult out;
  for (long a = 0; a <= std::min(cd, 2 * g - 1); ++a) {
    WijResult w = w_certified(i, i - a - 1);
    out.value *= w.value;
    out.certified = out.certified && w.certified;
    out.factors.push_back(std::move(w));
  }
  return out;
}

std::vector<long> bound_M_primes(long g, long cd) {
  if (g < 1 || cd < 0) throw PreconditionError("bound_M needs g >= 1, cd >= 0");
  Integer L = lcm_sharp(std::min(cd + 1, 2 * g - 1));
  long n = L.get_si();
  std::set<long> primes;
  for (long dv = 1; dv * dv <= n; ++dv) {
    if (n % dv != 0) continue;
    if (is_prime(dv + 1)) primes.insert(dv + 1);
    if (is_prime(n / dv + 1)) primes.insert(n / dv + 1);
  }
  return {primes.begin(), primes.end()};
}

Integer bound_M(long g, long cd) {
  Integer m = 1;
  for (long l : bound_M_primes(g, cd)) m *= l;
  return m;
}

Bezout bezout(const std::vector<Integer>& values) {
  Bezout b;
  b.coefficients.assign(values.size(), 0);
  for (std::size_t s = 0; s < values.size(); ++s) {
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), b.gcd.get_mpz_t(), values[s].get_mpz_t());
    // new gcd = u * old gcd + v * values[s]
    for (std::size_t t = 0; t < s; ++t) b.coefficients[t] *= u;
    b.coefficients[s] = v;
    b.gcd = g;
  }
  if (b.gcd < 0) {
    b.gcd = -b.gcd;
    for (auto& c : b.coefficients) c = -c;
  }
  return b;
}

}  // namespace abacus::numerology
