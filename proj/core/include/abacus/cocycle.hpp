#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abacus/numerology.hpp"

namespace abacus {

class CocycleViolation : public std::logic_error {
 public:
  explicit CocycleViolation(const std::string& what) : std::logic_error(what) {}
};

class BezoutFailure : public std::runtime_error {
 public:
  explicit BezoutFailure(const std::string& what) : std::runtime_error(what) {}
};

// 1-cocycle of the multiplicative monoid with values in a bimodule of level
// (i, j): f(mn) = m^j f(n) + n^i f(m).
template <class M>
struct Cocycle {
  long i = 0;
  long j = 0;
  std::map<long, M> values;
};

// b with w_{i,j} f(n) = (n^i - n^j) b for every stored n. M needs +, ==,
// and multiplication by an Integer on the left.
template <class M>
M split_refined_coboundary(Cocycle<M>& f) {
  if (f.values.empty()) throw PreconditionError("split_refined_coboundary needs stored values");
  numerology::WijResult w = numerology::w_certified(f.i, f.j);
  if (!w.certified) throw BezoutFailure("w_{i,j} is not certified");
  auto theta = [&](long n) -> Integer { return ipow(n, f.i) - ipow(n, f.j); };

  for (int round = 0;; ++round) {
    std::vector<long> ns;
    std::vector<Integer> vals;
    for (const auto& [n, v] : f.values) {
      ns.push_back(n);
      vals.push_back(theta(n));
    }
    numerology::Bezout bz = numerology::bezout(vals);
    if (bz.gcd == w.value) {
      const M& any = f.values.begin()->second;
      M b = Integer(0) * any;
      for (std::size_t s = 0; s < ns.size(); ++s)
        if (bz.coefficients[s] != 0) b = b + bz.coefficients[s] * f.values.at(ns[s]);
      for (const auto& [n, v] : f.values)
        if (!(w.value * v == theta(n) * b))
          throw CocycleViolation("w f(n) != (n^i - n^j) b at n=" + std::to_string(n));
      return b;
    }
    if (round > 0) throw BezoutFailure("stored values do not reach w_{i,j}");
    // extend through the cocycle relation on products of stored arguments
    std::map<long, M> extra;
    for (const auto& [m, fm] : f.values)
      for (const auto& [n, fn] : f.values) {
        const long mn = m * n;
        if (f.values.count(mn) || extra.count(mn)) continue;
        extra.emplace(mn, ipow(m, f.j) * fn + ipow(n, f.i) * fm);
      }
    f.values.insert(extra.begin(), extra.end());
  }
}

// Checks f(mn) = m^j f(n) + n^i f(m) whenever m, n, mn are all stored;
// returns the first failing pair or nullopt.
template <class M>
std::optional<std::pair<long, long>> first_cocycle_failure(const Cocycle<M>& f) {
  for (const auto& [m, fm] : f.values)
    for (const auto& [n, fn] : f.values) {
      auto it = f.values.find(m * n);
      if (it == f.values.end()) continue;
      if (!(it->second == ipow(m, f.j) * fn + ipow(n, f.i) * fm)) return std::make_pair(m, n);
    }
  return std::nullopt;
}

}  // namespace abacus
