#pragma once

#include <vector>

#include "abacus/multivector.hpp"

namespace abacus {

// f: source -> target, recorded by its pullback on degree one:
// row t holds the coordinates of f^* e_t in the basis of the source.
class Homomorphism {
 public:
  using Matrix = std::vector<std::vector<Integer>>;

  Homomorphism(Space source, Space target, Matrix matrix);

  static Homomorphism identity(const Space& a);
  static Homomorphism scalar(const Space& a, const Integer& n);
  // mu: A x A -> A
  static Homomorphism addition(const Space& a);
  // product space -> factor k
  static Homomorphism projection(const Space& product, int k);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  Space source_;
  Space target_;
  Matrix matrix_;
};

// h o f
Homomorphism compose(const Homomorphism& h, const Homomorphism& f);

MultiVector hom_pullback(const Homomorphism& f, const MultiVector& x);
// Defined by the duality pairing: integral of f_*(z) y equals integral of z f^*(y).
MultiVector hom_pushforward(const Homomorphism& f, const MultiVector& z);

}  // namespace abacus
