#include "abacus/torsion.hpp"

#include <string>

namespace abacus {

TorsionElt::TorsionElt(int g) : g_(g), blocks_(2 * g + 1) {
  if (g < 1) throw PreconditionError("TorsionElt needs g >= 1");
  for (int i = 1; i <= 2 * g; ++i) {
    Block& b = blocks_[i];
    b.rows = static_cast<int>(binomial(2 * g, i - 1).get_si());
    b.cols = static_cast<int>(binomial(2 * g, i).get_si());
    b.data.assign(static_cast<std::size_t>(b.rows) * b.cols, QmodZ());
  }
}

void TorsionElt::check(int i) const {
  if (i < 1 || i > 2 * g_) throw PreconditionError("torsion block index " + std::to_string(i) + " out of range");
}

int TorsionElt::rows(int i) const {
  check(i);
  return blocks_[i].rows;
}

int TorsionElt::cols(int i) const {
  check(i);
  return blocks_[i].cols;
}

const QmodZ& TorsionElt::at(int i, int r, int c) const {
  check(i);
  return blocks_[i].data.at(static_cast<std::size_t>(r) * blocks_[i].cols + c);
}

void TorsionElt::set(int i, int r, int c, const QmodZ& v) {
  check(i);
  blocks_[i].data.at(static_cast<std::size_t>(r) * blocks_[i].cols + c) = v;
}

void TorsionElt::set(int i, int r, int c, const Rational& v) { set(i, r, c, QmodZ(v)); }

bool TorsionElt::is_zero() const {
  for (int i = 1; i <= 2 * g_; ++i)
    for (const auto& v : blocks_[i].data)
      if (!v.is_zero()) return false;
  return true;
}

bool TorsionElt::supported_in(int i) const {
  for (int k = 1; k <= 2 * g_; ++k) {
    if (k == i) continue;
    for (const auto& v : blocks_[k].data)
      if (!v.is_zero()) return false;
  }
  return true;
}

TorsionElt TorsionElt::block_part(int i) const {
  check(i);
  TorsionElt out(g_);
  out.blocks_[i] = blocks_[i];
  return out;
}

TorsionElt TorsionElt::divide(const Integer& w) const {
  TorsionElt out = *this;
  for (int i = 1; i <= 2 * g_; ++i)
    for (auto& v : out.blocks_[i].data) v = v.divide(w);
  return out;
}

Integer TorsionElt::order() const {
  Integer o = 1;
  for (int i = 1; i <= 2 * g_; ++i)
    for (const auto& v : blocks_[i].data) o = lcm(o, v.order());
  return o;
}

TorsionElt& TorsionElt::operator+=(const TorsionElt& o) {
  if (o.g_ != g_) throw PreconditionError("torsion dimension mismatch");
  for (int i = 1; i <= 2 * g_; ++i)
    for (std::size_t k = 0; k < blocks_[i].data.size(); ++k) blocks_[i].data[k] = blocks_[i].data[k] + o.blocks_[i].data[k];
  return *this;
}

TorsionElt& TorsionElt::operator-=(const TorsionElt& o) {
  if (o.g_ != g_) throw PreconditionError("torsion dimension mismatch");
  for (int i = 1; i <= 2 * g_; ++i)
    for (std::size_t k = 0; k < blocks_[i].data.size(); ++k) blocks_[i].data[k] = blocks_[i].data[k] - o.blocks_[i].data[k];
  return *this;
}

TorsionElt& TorsionElt::operator*=(const Integer& n) {
  for (int i = 1; i <= 2 * g_; ++i)
    for (auto& v : blocks_[i].data) v = v * n;
  return *this;
}

TorsionElt operator+(TorsionElt a, const TorsionElt& b) { return a += b; }
TorsionElt operator-(TorsionElt a, const TorsionElt& b) { return a -= b; }
TorsionElt operator*(const Integer& n, TorsionElt a) { return a *= n; }
TorsionElt operator-(TorsionElt a) { return a *= -1; }

CorrClass TorsionElt::as_class() const {
  Space a = abelian_space(g_);
  std::vector<RationalMatrix> blocks(2 * g_ + 1);
  blocks[0] = RationalMatrix(0, 1);
  for (int i = 1; i <= 2 * g_; ++i) {
    const Block& b = blocks_[i];
    RationalMatrix m(b.rows, b.cols);
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) m(r, c) = b.data[static_cast<std::size_t>(r) * b.cols + c].value();
    blocks[i] = std::move(m);
  }
  return from_blocks(a, a, 1, blocks);
}

TorsionElt TorsionElt::from_class(const CorrClass& c) {
  if (c.offset() != 1 || !(c.source() == c.target())) throw PreconditionError("torsion class needs offset 1 on A x A");
  TorsionElt out(c.source().dimension());
  for (int i = 1; i <= 2 * out.g_; ++i) {
    RationalMatrix m = operator_block(c, i);
    for (int r = 0; r < m.rows; ++r)
      for (int k = 0; k < m.cols; ++k) out.set(i, r, k, m(r, k));
  }
  return out;
}

namespace {

RationalMatrix integral_block(const CorrClass& body, int k) {
  RationalMatrix b = operator_block(body, k);
  if (!b.integral()) throw PreconditionError("body acts non-integrally on degree " + std::to_string(k));
  return b;
}

void check_body(const CorrClass& body, int g) {
  if (body.offset() != 0 || body.source().rank() != 2 * g || !(body.source() == body.target()))
    throw PreconditionError("body must be an offset-0 correspondence on A of the tail's dimension");
}

}  // namespace

TorsionElt left_act(const CorrClass& body, const TorsionElt& t) {
  const int g = t.g();
  check_body(body, g);
  TorsionElt out(g);
  for (int i = 1; i <= 2 * g; ++i) {
    RationalMatrix b = integral_block(body, i - 1);
    for (int r = 0; r < t.rows(i); ++r)
      for (int c = 0; c < t.cols(i); ++c) {
        Rational v = 0;
        for (int k = 0; k < t.rows(i); ++k)
          if (b(r, k) != 0) v += b(r, k) * t.at(i, k, c).value();
        out.set(i, r, c, v);
      }
  }
  return out;
}

TorsionElt right_act(const TorsionElt& t, const CorrClass& body) {
  const int g = t.g();
  check_body(body, g);
  TorsionElt out(g);
  for (int i = 1; i <= 2 * g; ++i) {
    RationalMatrix b = integral_block(body, i);
    for (int r = 0; r < t.rows(i); ++r)
      for (int c = 0; c < t.cols(i); ++c) {
        Rational v = 0;
        for (int k = 0; k < t.cols(i); ++k)
          if (b(k, c) != 0) v += t.at(i, r, k).value() * b(k, c);
        out.set(i, r, c, v);
      }
  }
  return out;
}

ExtCorr::ExtCorr(CorrClass b, TorsionElt t) : body(std::move(b)), tail(std::move(t)) {
  check_body(body, tail.g());
  if (!body.cls().integral()) throw PreconditionError("body of an extended correspondence must be integral");
}

ExtCorr ExtCorr::identity(int g) { return ExtCorr(diagonal(g), TorsionElt(g)); }

ExtCorr ExtCorr::kuenneth(int g, int i) { return ExtCorr(kuenneth_projector(g, i), TorsionElt(g)); }

ExtCorr ExtCorr::torsion(const TorsionElt& t) {
  Space a = abelian_space(t.g());
  return ExtCorr(CorrClass::zero(a, a), t);
}

ExtCorr& ExtCorr::operator+=(const ExtCorr& o) {
  body += o.body;
  tail += o.tail;
  return *this;
}

ExtCorr& ExtCorr::operator-=(const ExtCorr& o) {
  body -= o.body;
  tail -= o.tail;
  return *this;
}

ExtCorr& ExtCorr::operator*=(const Integer& n) {
  body *= Rational(n);
  tail *= n;
  return *this;
}

ExtCorr operator+(ExtCorr a, const ExtCorr& b) { return a += b; }
ExtCorr operator-(ExtCorr a, const ExtCorr& b) { return a -= b; }
ExtCorr operator*(const Integer& n, ExtCorr a) { return a *= n; }

ExtCorr ext_compose(const ExtCorr& a, const ExtCorr& b) {
  if (a.g() != b.g()) throw PreconditionError("ext_compose: dimension mismatch");
  // tails multiply to zero
  return ExtCorr(compose(a.body, b.body), left_act(a.body, b.tail) + right_act(a.tail, b.body));
}

ExtCorr n_star(const ExtCorr& a, const Integer& n) {
  if (n == 0) throw PreconditionError("n_star needs n != 0");
  const Space s = abelian_space(a.g());
  return ext_compose(ExtCorr(graph(Homomorphism::scalar(s, n)), TorsionElt(a.g())), a);
}

ExtCorr ext_transpose(const ExtCorr& a) {
  return ExtCorr(transpose(a.body), TorsionElt::from_class(transpose(a.tail.as_class())));
}

}  // namespace abacus
