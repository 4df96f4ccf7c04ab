#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace abacus {

using Integer = mpz_class;
using Rational = mpq_class;

// Bit k of a mask stands for the basis vector e_{k+1}.
using Mask = std::uint64_t;

class SpaceMismatch : public std::invalid_argument {
 public:
  explicit SpaceMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a quantity expected to be divisible by n! is not.
class DivisionFailure : public std::runtime_error {
 public:
  explicit DivisionFailure(const std::string& what) : std::runtime_error(what) {}
};

Integer factorial(unsigned long n);
Integer binomial(long n, long k);  // 0 when k < 0 or k > n
Integer ipow(const Integer& base, unsigned long e);
Integer ipow(long base, unsigned long e);

}  // namespace abacus
