#include "abacus/hochschild.hpp"

#include <functional>
#include <map>

#include "abacus/random.hpp"

namespace abacus {

ZmodN::ZmodN(long v, long n) : v_(((v % n) + n) % n), n_(n) {
  if (n < 1) throw PreconditionError("ZmodN needs a positive modulus");
}

ZmodN operator*(const Integer& c, const ZmodN& x) {
  Integer r = c % x.modulus();
  return ZmodN(r.get_si() * x.value(), x.modulus());
}

bool HochschildReport::pass() const {
  return w_certified && hh0_match() && extension_consistent && annihilated && coboundaries && square_law &&
         four_law && double_law;
}

namespace {

long powmod(long base, long e, long n) {
  long b = ((base % n) + n) % n, r = 1 % n;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % n;
    b = b * b % n;
  }
  return r;
}

struct Level {
  long i, j, N;
  long act(long m, long x) const { return (powmod(m, j, N) * x) % N; }   // m . x
  long ract(long x, long n) const { return (x * powmod(n, i, N)) % N; }  // x . n
  long theta(long n) const { return ((powmod(n, i, N) - powmod(n, j, N)) % N + N) % N; }
};

// f(-1), f(p) for the generators -> f(n) for n in [-range, range] whose prime
// factors are generators; unreachable n are skipped.
std::map<long, long> extend(const Level& lv, const std::vector<long>& gens, const std::vector<long>& vals, long range) {
  std::map<long, long> f;
  f[1] = 0;
  for (long n = 2; n <= range; ++n) {
    long m = n, p = 0;
    for (std::size_t k = 1; k < gens.size(); ++k)
      if (m % gens[k] == 0) {
        p = static_cast<long>(k);
        break;
      }
    if (!p) continue;
    m = n / gens[p];
    if (!f.count(m)) continue;
    // f(p m) = p^j f(m) + m^i f(p)
    f[n] = (lv.act(gens[p], f[m]) + lv.ract(vals[p], m)) % lv.N;
  }
  std::map<long, long> out = f;
  for (const auto& [n, v] : f)  // f(-n) = (-1)^j f(n) + n^i f(-1)
    out[-n] = (lv.act(-1, v) + lv.ract(vals[0], n)) % lv.N;
  return out;
}

bool consistent_pair(const Level& lv, long m, long fm, long n, long fn) {
  // (m^i - m^j) f(n) = (n^i - n^j) f(m)
  return lv.theta(m) * fn % lv.N == lv.theta(n) * fm % lv.N;
}

bool consistent_unit(const Level& lv, long fneg) {
  // f(1) = f((-1)(-1)) = ((-1)^j + (-1)^i) f(-1) = 0
  return ((powmod(-1, lv.j, lv.N) + powmod(-1, lv.i, lv.N)) * fneg) % lv.N == 0;
}

}  // namespace

HochschildReport hochschild_verify(long i, long j, long N, long prime_bound, long trials, std::uint64_t seed,
                                   long range) {
  if (!(i > j && j >= 0)) throw PreconditionError("hochschild_verify needs i > j >= 0");
  if (N < 1 || prime_bound < 2 || range < 4) throw PreconditionError("hochschild_verify needs N >= 1, prime_bound >= 2");
  HochschildReport rep;
  rep.i = i;
  rep.j = j;
  rep.N = N;
  rep.prime_bound = prime_bound;
  rep.range = range;
  const Level lv{i, j, N};
  auto wr = numerology::w_certified(i, j);
  rep.w = wr.value;
  rep.w_certified = wr.certified;
  const long w = wr.value.get_si();

  for (long x = 0; x < N; ++x) {
    bool inv = true;
    for (long m = -50; m <= 50 && inv; ++m)
      if (m != 0 && lv.act(m, x) != lv.ract(x, m)) inv = false;
    if (inv) rep.hh0_direct.push_back(x);
    if ((w % N) * x % N == 0) rep.hh0_expected.push_back(x);
  }

  std::vector<long> gens{-1};
  for (long p = 2; p <= prime_bound; ++p)
    if (numerology::is_prime(p)) gens.push_back(p);

  rep.j_zero = j == 0;
  rep.parity_case = j == i - 1 && j > 0 && (2 % N == 0) && (w % N == 0);

  auto examine = [&](const std::vector<long>& vals) {
    std::map<long, long> f = extend(lv, gens, vals, range);
    Cocycle<ZmodN> c;
    c.i = i;
    c.j = j;
    for (const auto& [n, v] : f) c.values.emplace(n, ZmodN(v, N));
    auto fail = [&](const char* what) {
      if (rep.witness.is_null()) rep.witness = {{"check", what}, {"generators", gens}, {"values", vals}};
    };
    bool consistent = true;
    for (auto mi = f.begin(); mi != f.end() && consistent; ++mi)
      for (auto ni = f.begin(); ni != f.end(); ++ni) {
        auto it = f.find(mi->first * ni->first);
        if (it == f.end()) continue;
        if ((lv.act(mi->first, ni->second) + lv.ract(mi->second, ni->first) - it->second) % N != 0) {
          consistent = false;
          break;
        }
      }
    if (!consistent) {
      rep.extension_consistent = false;
      fail("cocycle-extension");
    }
    try {
      split_refined_coboundary(c);
    } catch (const std::exception&) {
      rep.annihilated = false;
      fail("refined-coboundary");
    }
    if (rep.j_zero) {
      bool found = false;
      for (long a = 0; a < N && !found; ++a) {
        bool ok = true;
        for (const auto& [n, v] : f)
          if ((lv.act(n, a) - lv.ract(a, n) - v) % N != 0) {
            ok = false;
            break;
          }
        found = ok;
      }
      if (!found) {
        rep.coboundaries = false;
        fail("coboundary");
      }
    }
    if (rep.parity_case) {
      for (const auto& [n, v] : f) {
        long r = 1;
        while ((r + 1) * (r + 1) <= std::labs(n)) ++r;
        if (n > 0 && r * r == n && v != 0) {
          rep.square_law = false;
          fail("square");
        }
        if (n % 4 == 0 && v != 0) {
          rep.four_law = false;
          fail("four");
        }
        if (n % 2 != 0 && f.count(2 * n) && f.at(2 * n) != f.at(2)) {
          rep.double_law = false;
          fail("double");
        }
      }
    }
  };

  // exhaustive enumeration by backtracking over generator values
  std::vector<long> vals(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      ++rep.cocycles;
      examine(vals);
      return;
    }
    for (long v = 0; v < N; ++v) {
      if (k == 0 && !consistent_unit(lv, v)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < k && ok; ++q) ok = consistent_pair(lv, gens[q], vals[q], gens[k], v);
      if (!ok) continue;
      vals[k] = v;
      rec(k + 1);
    }
  };
  rec(0);

  Rng rng(seed);
  for (long t = 0; t < trials; ++t) {
    std::vector<long> r(gens.size());
    for (auto& v : r) v = rng.uniform(0, N - 1);
    ++rep.sampled;
    bool ok = consistent_unit(lv, r[0]);
    for (std::size_t a = 0; a < gens.size() && ok; ++a)
      for (std::size_t b = a + 1; b < gens.size() && ok; ++b) ok = consistent_pair(lv, gens[a], r[a], gens[b], r[b]);
    if (!ok) ++rep.rejected;
  }
  return rep;
}

}  // namespace abacus
