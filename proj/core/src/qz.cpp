#include "abacus/qz.hpp"

namespace abacus {

Rational QmodZ::reduce(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  out.canonicalize();
  return out;
}

QmodZ QmodZ::divide(const Integer& w) const {
  if (w <= 0) throw PreconditionError("QmodZ::divide needs a positive divisor");
  Rational r(v_.get_num(), v_.get_den() * w);
  r.canonicalize();
  return QmodZ(r);
}

}  // namespace abacus
