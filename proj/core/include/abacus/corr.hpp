#pragma once

#include <functional>
#include <vector>

#include "abacus/homomorphism.hpp"
#include "abacus/multivector.hpp"

namespace abacus {

// Dense rational matrix, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  Rational& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool integral() const;
  bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// A correspondence from `source` to `target`: a class on source x target
// whose action sends degree i on the source to degree i - offset on the
// target. The class is homogeneous of total degree rank(source) - offset.
class CorrClass {
 public:
  CorrClass(Space source, Space target, MultiVector cls, int offset = 0);

  static CorrClass zero(const Space& source, const Space& target, int offset = 0);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const MultiVector& cls() const { return cls_; }
  int offset() const { return offset_; }

  CorrClass& operator+=(const CorrClass& other);
  CorrClass& operator-=(const CorrClass& other);
  CorrClass& operator*=(const Rational& c);
  bool operator==(const CorrClass& other) const;

 private:
  Space source_;
  Space target_;
  MultiVector cls_;
  int offset_ = 0;
};

CorrClass operator+(CorrClass a, const CorrClass& b);
CorrClass operator-(CorrClass a, const CorrClass& b);
CorrClass operator*(const Rational& c, CorrClass a);

// act(gamma, x) = (p2)_*(p1^* x . gamma)
MultiVector act(const CorrClass& gamma, const MultiVector& x);
// Same formula for an arbitrary class on source x target.
MultiVector act_class(const MultiVector& cls, const MultiVector& x);

// delta o gamma for gamma: Z -> Y, delta: Y -> X; acts as act(delta) o act(gamma).
CorrClass compose(const CorrClass& delta, const CorrClass& gamma);

CorrClass transpose(const CorrClass& gamma);
// Factor swap on a class living on a two-factor product, with Koszul sign.
MultiVector swap_factors(const MultiVector& z);

// The unique class whose action on basis monomials is `image`; `image(S)`
// must be homogeneous of degree |S| - offset on the target.
CorrClass from_action(const Space& source, const Space& target, int offset,
                      const std::function<MultiVector(Mask)>& image);

CorrClass diagonal(const Space& a);
CorrClass diagonal(int g);
// prod_k (p2^* e_k - p1^* e_k); cross-check for diagonal.
CorrClass diagonal_product_formula(int g);
CorrClass graph(const Homomorphism& f);

// Block of the diagonal whose action is the projection to degree i.
CorrClass kuenneth_projector(int g, int i);
std::vector<CorrClass> kuenneth_projectors(int g);

// Matrix of the action from degree k on the source to degree k - offset on
// the target, in the ascending mask bases.
RationalMatrix operator_block(const CorrClass& gamma, int k);
CorrClass from_blocks(const Space& source, const Space& target, int offset,
                      const std::vector<RationalMatrix>& blocks);

Space abelian_space(int g, const std::string& label = "A");

}  // namespace abacus
