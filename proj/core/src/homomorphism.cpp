#include "abacus/homomorphism.hpp"

namespace abacus {

Homomorphism::Homomorphism(Space source, Space target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (static_cast<int>(matrix_.size()) != target_.rank())
    throw PreconditionError("homomorphism matrix needs target.rank rows");
  for (const auto& row : matrix_)
    if (static_cast<int>(row.size()) != source_.rank())
      throw PreconditionError("homomorphism matrix needs source.rank columns");
}

Homomorphism Homomorphism::identity(const Space& a) { return scalar(a, 1); }

Homomorphism Homomorphism::scalar(const Space& a, const Integer& n) {
  Matrix m(a.rank(), std::vector<Integer>(a.rank(), 0));
  for (int k = 0; k < a.rank(); ++k) m[k][k] = n;
  return Homomorphism(a, a, std::move(m));
}

Homomorphism Homomorphism::addition(const Space& a) {
  const int r = a.rank();
  Matrix m(r, std::vector<Integer>(2 * r, 0));
  for (int k = 0; k < r; ++k) {
    m[k][k] = 1;
    m[k][r + k] = 1;
  }
  return Homomorphism(Space::product(a, a), a, std::move(m));
}

Homomorphism Homomorphism::projection(const Space& product, int k) {
  Space f = product.factor(k);
  const int off = product.factor_offset(k);
  Matrix m(f.rank(), std::vector<Integer>(product.rank(), 0));
  for (int t = 0; t < f.rank(); ++t) m[t][off + t] = 1;
  return Homomorphism(product, f, std::move(m));
}

Homomorphism compose(const Homomorphism& h, const Homomorphism& f) {
  require_same(f.target(), h.source(), "compose homomorphisms");
  const auto& H = h.matrix();
  const auto& F = f.matrix();
  Homomorphism::Matrix m(h.target().rank(), std::vector<Integer>(f.source().rank(), 0));
  for (int c = 0; c < h.target().rank(); ++c)
    for (int b = 0; b < h.source().rank(); ++b) {
      if (H[c][b] == 0) continue;
      for (int a = 0; a < f.source().rank(); ++a) m[c][a] += H[c][b] * F[b][a];
    }
  return Homomorphism(f.source(), h.target(), std::move(m));
}

namespace {

std::vector<MultiVector> generator_images(const Homomorphism& f) {
  std::vector<MultiVector> img;
  for (int t = 0; t < f.target().rank(); ++t) {
    MultiVector v(f.source());
    for (int s = 0; s < f.source().rank(); ++s) v.add_term(Mask(1) << s, Rational(f.matrix()[t][s]));
    img.push_back(std::move(v));
  }
  return img;
}

MultiVector pull_monomial(const std::vector<MultiVector>& img, const Space& source, Mask m) {
  MultiVector p = MultiVector::unit(source);
  for (int b = 0; m >> b; ++b)
    if (m >> b & 1) {
      p = wedge(p, img[b]);
      if (p.is_zero()) break;
    }
  return p;
}

}  // namespace

MultiVector hom_pullback(const Homomorphism& f, const MultiVector& x) {
  require_same(x.space(), f.target(), "hom_pullback");
  auto img = generator_images(f);
  MultiVector out(f.source());
  for (const auto& [m, c] : x.terms()) out += c * pull_monomial(img, f.source(), m);
  return out;
}

MultiVector hom_pushforward(const Homomorphism& f, const MultiVector& z) {
  require_same(z.space(), f.source(), "hom_pushforward");
  auto img = generator_images(f);
  const int ns = f.source().rank();
  const int nt = f.target().rank();
  const Mask tfull = f.target().full_mask();
  std::vector<bool> seen(ns + 1, false);
  for (const auto& [m, c] : z.terms()) seen[popcount(m)] = true;
  MultiVector out(f.target());
  for (int k = 0; k <= ns; ++k) {
    if (!seen[k]) continue;
    MultiVector zk = grade(z, k);
    // f^* e_{S^c} must have degree ns - k
    const int cdeg = ns - k;
    for (Mask sc : masks_of_degree(nt, cdeg)) {
      Rational v = integrate(wedge(zk, pull_monomial(img, f.source(), sc)));
      if (v == 0) continue;
      Mask s = tfull & ~sc;
      if (wedge_sign(s, sc) < 0) v = -v;
      out.add_term(s, v);
    }
  }
  return out;
}

}  // namespace abacus
