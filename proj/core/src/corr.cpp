#include "abacus/corr.hpp"

#include <unordered_map>

namespace abacus {

bool RationalMatrix::integral() const {
  for (const auto& v : data)
    if (v.get_den() != 1) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw PreconditionError("matrix shape mismatch");
  RationalMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Space abelian_space(int g, const std::string& label) {
  if (g < 1) throw PreconditionError("g must be at least 1");
  return Space(label, 2 * g);
}

CorrClass::CorrClass(Space source, Space target, MultiVector cls, int offset)
    : source_(std::move(source)), target_(std::move(target)), cls_(std::move(cls)), offset_(offset) {
  require_same(cls_.space(), Space::product(source_, target_), "CorrClass");
  if (!cls_.homogeneous(source_.rank() - offset_))
    throw PreconditionError("correspondence class is not of degree rank(source) - offset");
}

CorrClass CorrClass::zero(const Space& source, const Space& target, int offset) {
  return CorrClass(source, target, MultiVector(Space::product(source, target)), offset);
}

CorrClass& CorrClass::operator+=(const CorrClass& o) {
  if (o.offset_ != offset_) throw PreconditionError("adding correspondences of different offsets");
  cls_ += o.cls_;
  return *this;
}

CorrClass& CorrClass::operator-=(const CorrClass& o) {
  if (o.offset_ != offset_) throw PreconditionError("subtracting correspondences of different offsets");
  cls_ -= o.cls_;
  return *this;
}

CorrClass& CorrClass::operator*=(const Rational& c) {
  cls_ *= c;
  return *this;
}

bool CorrClass::operator==(const CorrClass& o) const {
  return source_ == o.source_ && target_ == o.target_ && offset_ == o.offset_ && cls_ == o.cls_;
}

CorrClass operator+(CorrClass a, const CorrClass& b) { return a += b; }
CorrClass operator-(CorrClass a, const CorrClass& b) { return a -= b; }
CorrClass operator*(const Rational& c, CorrClass a) { return a *= c; }

MultiVector act_class(const MultiVector& cls, const MultiVector& x) {
  const Space& p = cls.space();
  if (p.factor_count() != 2) throw PreconditionError("act needs a class on a two-factor product");
  require_same(x.space(), p.factor(0), "act");
  const int n = p.factor_ranks()[0];
  const Mask full = p.factor_mask(0);
  MultiVector out(p.factor(1));
  for (const auto& [m, c] : cls.terms()) {
    Mask a = m & full;
    Mask s = full & ~a;
    Rational cx = x.coefficient(s);
    if (cx == 0) continue;
    // e_S (p1) times e_A (x) e_Q: the Q block sits above S, only S|A reorders
    Rational v = cx * c;
    if (wedge_sign(s, a) < 0) v = -v;
    out.add_term(m >> n, v);
  }
  return out;
}

MultiVector act(const CorrClass& gamma, const MultiVector& x) {
  require_same(x.space(), gamma.source(), "act");
  return act_class(gamma.cls(), x);
}

CorrClass compose(const CorrClass& delta, const CorrClass& gamma) {
  require_same(gamma.target(), delta.source(), "compose");
  const Space& z = gamma.source();
  const Space& y = gamma.target();
  const Space& x = delta.target();
  const int rz = z.rank();
  const int ry = y.rank();
  const Mask zfull = z.full_mask();
  const Mask yfull = y.full_mask();

  struct Entry {
    Mask u;
    const Rational* c;
  };
  std::unordered_map<Mask, std::vector<Entry>> by_middle;
  for (const auto& [m, c] : delta.cls().terms()) by_middle[m & yfull].push_back({m >> ry, &c});

  MultiVector out(Space::product(z, x));
  for (const auto& [m, c] : gamma.cls().terms()) {
    Mask s = m & zfull;
    Mask t = m >> rz;
    auto it = by_middle.find(yfull & ~t);
    if (it == by_middle.end()) continue;
    Mask gm = s | (t << rz);
    for (const Entry& e : it->second) {
      Mask dm = ((yfull & ~t) << rz) | (e.u << (rz + ry));
      Rational v = c * *e.c;
      if (wedge_sign(gm, dm) < 0) v = -v;
      out.add_term(s | (e.u << rz), v);
    }
  }
  return CorrClass(z, x, std::move(out), gamma.offset() + delta.offset());
}

MultiVector swap_factors(const MultiVector& z) {
  const Space& p = z.space();
  if (p.factor_count() != 2) throw PreconditionError("swap needs a two-factor product");
  const int ra = p.factor_ranks()[0];
  const int rb = p.factor_ranks()[1];
  const Mask afull = p.factor_mask(0);
  MultiVector out(Space::product(p.factor(1), p.factor(0)));
  for (const auto& [m, c] : z.terms()) {
    Mask s = m & afull;
    Mask t = m >> ra;
    bool odd = (popcount(s) * popcount(t)) & 1;
    out.add_term(t | (s << rb), odd ? Rational(-c) : c);
  }
  return out;
}

CorrClass transpose(const CorrClass& gamma) {
  int offset = gamma.target().rank() - gamma.source().rank() + gamma.offset();
  return CorrClass(gamma.target(), gamma.source(), swap_factors(gamma.cls()), offset);
}

CorrClass from_action(const Space& source, const Space& target, int offset,
                      const std::function<MultiVector(Mask)>& image) {
  // act(sum c_{A,Q} e_A (x) e_Q, e_S) = sum_Q sign(S, S^c) c_{S^c,Q} e_Q, so the
  // system is diagonal in the unknowns with pivots +-1.
  const int n = source.rank();
  const Mask full = source.full_mask();
  MultiVector cls(Space::product(source, target));
  for (int k = 0; k <= n; ++k)
    for (Mask s : masks_of_degree(n, k)) {
      MultiVector img = image(s);
      require_same(img.space(), target, "from_action");
      if (!img.homogeneous(k - offset)) throw PreconditionError("from_action: image has the wrong degree");
      Mask a = full & ~s;
      const int sg = wedge_sign(s, a);
      for (const auto& [q, c] : img.terms()) cls.add_term(a | (q << n), sg < 0 ? Rational(-c) : c);
    }
  return CorrClass(source, target, std::move(cls), offset);
}

CorrClass diagonal(const Space& a) {
  return from_action(a, a, 0, [&](Mask s) { return MultiVector::basis(a, s); });
}

CorrClass diagonal(int g) { return diagonal(abelian_space(g)); }

CorrClass diagonal_product_formula(int g) {
  Space a = abelian_space(g);
  Space p = Space::product(a, a);
  MultiVector d = MultiVector::unit(p);
  for (int k = 1; k <= 2 * g; ++k) {
    MultiVector e = MultiVector::generator(a, k);
    d = wedge(d, pullback_factor(e, p, 1) - pullback_factor(e, p, 0));
  }
  return CorrClass(a, a, std::move(d));
}

CorrClass graph(const Homomorphism& f) {
  return from_action(f.target(), f.source(), 0,
                     [&](Mask s) { return hom_pullback(f, MultiVector::basis(f.target(), s)); });
}

CorrClass kuenneth_projector(int g, int i) {
  if (i < 0 || i > 2 * g) throw PreconditionError("Kuenneth index out of range");
  CorrClass d = diagonal(g);
  const int n = 2 * g;
  MultiVector block(d.cls().space());
  for (const auto& [m, c] : d.cls().terms())
    if (popcount(m >> n) == i) block.add_term(m, c);
  return CorrClass(d.source(), d.target(), std::move(block));
}

std::vector<CorrClass> kuenneth_projectors(int g) {
  std::vector<CorrClass> out;
  for (int i = 0; i <= 2 * g; ++i) out.push_back(kuenneth_projector(g, i));
  return out;
}

RationalMatrix operator_block(const CorrClass& gamma, int k) {
  const int ns = gamma.source().rank();
  const int nt = gamma.target().rank();
  const int kt = k - gamma.offset();
  RationalMatrix m(static_cast<int>(binomial(nt, kt).get_si()), static_cast<int>(binomial(ns, k).get_si()));
  if (m.rows == 0 || m.cols == 0) return m;
  const Mask full = gamma.source().full_mask();
  for (const auto& [mask, c] : gamma.cls().terms()) {
    Mask a = mask & full;
    Mask s = full & ~a;
    if (popcount(s) != k) continue;
    Mask q = mask >> ns;
    m(mask_rank(q), mask_rank(s)) += wedge_sign(s, a) < 0 ? Rational(-c) : c;
  }
  return m;
}

CorrClass from_blocks(const Space& source, const Space& target, int offset,
                      const std::vector<RationalMatrix>& blocks) {
  const int ns = source.rank();
  const int nt = target.rank();
  if (static_cast<int>(blocks.size()) != ns + 1) throw PreconditionError("from_blocks needs rank+1 blocks");
  return from_action(source, target, offset, [&](Mask s) {
    const int k = popcount(s);
    const RationalMatrix& b = blocks[k];
    MultiVector img(target);
    if (b.rows == 0) return img;
    if (b.cols != static_cast<int>(binomial(ns, k).get_si()) ||
        b.rows != static_cast<int>(binomial(nt, k - offset).get_si()))
      throw PreconditionError("from_blocks: block shape mismatch");
    const int col = mask_rank(s);
    auto rows = masks_of_degree(nt, k - offset);
    for (int r = 0; r < b.rows; ++r) img.add_term(rows[r], b(r, col));
    return img;
  });
}

}  // namespace abacus
