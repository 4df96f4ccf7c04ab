#pragma once

#include <cstdint>
#include <vector>


#include "abacus/cocycle.hpp"
#include "abacus/report.hpp"

namespace abacus {

// Element of Z/N.
class ZmodN {
 public:
  ZmodN(long v, long n);
  long value() const { return v_; }
  long modulus() const { return n_; }
  ZmodN operator+(const ZmodN& o) const { return ZmodN(v_ + o.v_, n_); }
  ZmodN operator-(const ZmodN& o) const { return ZmodN(v_ - o.v_, n_); }
  bool operator==(const ZmodN& o) const { return v_ == o.v_ && n_ == o.n_; }

 private:
  long v_;
  long n_;
};

ZmodN operator*(const Integer& c, const ZmodN& x);

struct HochschildReport {
  long i = 0, j = 0, N = 0, prime_bound = 0, range = 0;
  Integer w = 1;
  bool w_certified = false;
  std::vector<long> hh0_direct;    // invariants found by brute force
  std::vector<long> hh0_expected;  // w-torsion of Z/N
  long cocycles = 0;               // all cocycles on the generators
  long sampled = 0;                // random generator assignments drawn
  long rejected = 0;               // of which not cocycles
  bool extension_consistent = true;
  bool annihilated = true;
  bool j_zero = false;             // j = 0 case applies
  bool coboundaries = true;        // every cocycle a coboundary (j = 0 case)
  bool parity_case = false;        // j = i-1 > 0 and 2M = wM = 0
  bool square_law = true;
  bool four_law = true;
  bool double_law = true;
  Json witness = nullptr;

  bool hh0_match() const { return hh0_direct == hh0_expected; }
  bool pass() const;
};

// Bimodule M = Z/N of level (i, j). Cocycles are determined by their values
// on -1 and the primes up to prime_bound; all of them are enumerated, and
// `trials` random assignments are drawn to exercise rejection.
HochschildReport hochschild_verify(long i, long j, long N, long prime_bound = 13, long trials = 200,
                                   std::uint64_t seed = 0, long range = 60);

}  // namespace abacus
