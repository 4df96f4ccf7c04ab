#pragma once

#include "abacus/types.hpp"

namespace abacus {

// Element of Q/Z, stored as the representative in [0, 1).
class QmodZ {
 public:
  QmodZ() = default;
  explicit QmodZ(const Rational& r) : v_(reduce(r)) {}

  const Rational& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  // Representative p/(q w) of a preimage under multiplication by w.
  QmodZ divide(const Integer& w) const;
  // Additive order (the denominator).
  Integer order() const { return v_.get_den(); }

  QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
  QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
  QmodZ operator-() const { return QmodZ(-v_); }
  QmodZ operator*(const Integer& n) const { return QmodZ(v_ * Rational(n)); }
  bool operator==(const QmodZ& o) const { return v_ == o.v_; }

  static Rational reduce(const Rational& r);

 private:
  Rational v_ = 0;
};

}  // namespace abacus
