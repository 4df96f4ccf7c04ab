#pragma once

#include <map>
#include <optional>
#include <string>

#include "abacus/space.hpp"
#include "abacus/types.hpp"

namespace abacus {

// Element of the exterior algebra on a Space with exact rational
// coefficients. Zero coefficients are never stored.
class MultiVector {
 public:
  using Terms = std::map<Mask, Rational>;

  MultiVector() = default;
  explicit MultiVector(Space space) : space_(std::move(space)) {}
  MultiVector(Space space, Terms terms);

  static MultiVector unit(const Space& space);
  static MultiVector top(const Space& space);
  static MultiVector basis(const Space& space, Mask mask, const Rational& c = 1);
  // e_{index}, 1-based
  static MultiVector generator(const Space& space, int index);

  const Space& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Mask mask) const;
  void add_term(Mask mask, const Rational& c);

  bool integral() const;
  bool homogeneous(int k) const;
  // Common degree of all terms; nullopt for zero or mixed degree.
  std::optional<int> degree() const;

  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector& operator*=(const Rational& c);

  bool operator==(const MultiVector& other) const {
    return space_ == other.space_ && terms_ == other.terms_;
  }

 private:
  Space space_;
  Terms terms_;
};

MultiVector operator+(MultiVector a, const MultiVector& b);
MultiVector operator-(MultiVector a, const MultiVector& b);
MultiVector operator-(MultiVector a);
MultiVector operator*(const Rational& c, MultiVector a);

MultiVector wedge(const MultiVector& x, const MultiVector& y);
MultiVector grade(const MultiVector& x, int k);
MultiVector mult_pullback(const MultiVector& x, const Integer& n);
MultiVector mult_pushforward(const MultiVector& x, const Integer& n, int g);
Rational integrate(const MultiVector& x);
Rational pd_pair(const MultiVector& x, const MultiVector& y);

// gamma_n(x) = x^n / n!, exact.
MultiVector divided_power(const MultiVector& x, unsigned n);
// sum_n gamma_n(x); terminates by nilpotency.
MultiVector divided_exp(const MultiVector& x);

// x to the n-th wedge power
MultiVector wedge_power(const MultiVector& x, unsigned n);

// Pullback along the projection of a product onto its factor k.
MultiVector pullback_factor(const MultiVector& x, const Space& product, int k);

// Pushforward along the projection of a product onto the factors listed in
// `keep` (ascending); the other factors are integrated out.
MultiVector pushforward_factors(const MultiVector& z, const std::vector<int>& keep);

// Exterior product x (x) y on the product of their spaces.
MultiVector tensor(const MultiVector& x, const MultiVector& y);

std::string to_text(const MultiVector& x);

}  // namespace abacus
