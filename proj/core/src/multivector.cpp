#include "abacus/multivector.hpp"

#include <sstream>

namespace abacus {

MultiVector::MultiVector(Space space, Terms terms) : space_(std::move(space)) {
  const Mask full = space_.full_mask();
  for (auto& [m, c] : terms) {
    if (m & ~full) throw PreconditionError("mask outside the space");
    if (c != 0) terms_.emplace(m, c);
  }
}

MultiVector MultiVector::unit(const Space& space) { return basis(space, 0, 1); }

MultiVector MultiVector::top(const Space& space) { return basis(space, space.full_mask(), 1); }

MultiVector MultiVector::basis(const Space& space, Mask mask, const Rational& c) {
  MultiVector x(space);
  if (mask & ~space.full_mask()) throw PreconditionError("mask outside the space");
  x.add_term(mask, c);
  return x;
}

MultiVector MultiVector::generator(const Space& space, int index) {
  if (index < 1 || index > space.rank()) throw PreconditionError("generator index out of range");
  return basis(space, Mask(1) << (index - 1));
}

Rational MultiVector::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiVector::add_term(Mask mask, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiVector::integral() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool MultiVector::homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (popcount(m) != k) return false;
  return true;
}

std::optional<int> MultiVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  int k = popcount(terms_.begin()->first);
  return homogeneous(k) ? std::optional<int>(k) : std::nullopt;
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  require_same(space_, other.space_, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  require_same(space_, other.space_, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
MultiVector operator-(MultiVector a) { return a *= -1; }
MultiVector operator*(const Rational& c, MultiVector a) { return a *= c; }

MultiVector wedge(const MultiVector& x, const MultiVector& y) {
  require_same(x.space(), y.space(), "wedge");
  MultiVector out(x.space());
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms()) {
      if (s & t) continue;
      Rational c = cs * ct;
      if (wedge_sign(s, t) < 0) c = -c;
      out.add_term(s | t, c);
    }
  return out;
}

MultiVector grade(const MultiVector& x, int k) {
  MultiVector out(x.space());
  for (const auto& [m, c] : x.terms())
    if (popcount(m) == k) out.add_term(m, c);
  return out;
}

MultiVector mult_pullback(const MultiVector& x, const Integer& n) {
  MultiVector out(x.space());
  for (const auto& [m, c] : x.terms())
    out.add_term(m, c * Rational(ipow(n, popcount(m))));
  return out;
}

MultiVector mult_pushforward(const MultiVector& x, const Integer& n, int g) {
  if (x.space().rank() != 2 * g) throw PreconditionError("mult_pushforward: rank differs from 2g");
  MultiVector out(x.space());
  for (const auto& [m, c] : x.terms())
    out.add_term(m, c * Rational(ipow(n, 2 * g - popcount(m))));
  return out;
}

Rational integrate(const MultiVector& x) { return x.coefficient(x.space().full_mask()); }

Rational pd_pair(const MultiVector& x, const MultiVector& y) { return integrate(wedge(x, y)); }

MultiVector wedge_power(const MultiVector& x, unsigned n) {
  MultiVector p = MultiVector::unit(x.space());
  for (unsigned k = 0; k < n && !p.is_zero(); ++k) p = wedge(p, x);
  return p;
}

MultiVector divided_power(const MultiVector& x, unsigned n) {
  auto d = x.degree();
  if (!x.is_zero() && (!d || *d % 2 != 0))
    throw PreconditionError("divided_power needs a homogeneous class of even degree");
  if (!x.integral()) throw PreconditionError("divided_power needs an integral class");
  MultiVector p = wedge_power(x, n);
  const Integer f = factorial(n);
  MultiVector out(x.space());
  for (const auto& [m, c] : p.terms()) {
    if (!mpz_divisible_p(c.get_num_mpz_t(), f.get_mpz_t())) {
      std::ostringstream os;
      os << "coefficient " << c << " of x^" << n << " not divisible by " << f;
      throw DivisionFailure(os.str());
    }
    out.add_term(m, Rational(Integer(c.get_num() / f)));
  }
  return out;
}

MultiVector divided_exp(const MultiVector& x) {
  auto d = x.degree();
  if (!x.is_zero() && (!d || *d == 0 || *d % 2 != 0))
    throw PreconditionError("divided_exp needs a homogeneous class of positive even degree");
  MultiVector sum = MultiVector::unit(x.space());
  for (unsigned n = 1;; ++n) {
    MultiVector t = divided_power(x, n);
    if (t.is_zero()) break;
    sum += t;
  }
  return sum;
}

MultiVector pullback_factor(const MultiVector& x, const Space& product, int k) {
  if (x.space().rank() != product.factor_ranks().at(k))
    throw SpaceMismatch("pullback_factor: factor rank mismatch");
  const int off = product.factor_offset(k);
  MultiVector out(product);
  for (const auto& [m, c] : x.terms()) out.add_term(m << off, c);
  return out;
}

MultiVector pushforward_factors(const MultiVector& z, const std::vector<int>& keep) {
  const Space& p = z.space();
  std::vector<Space> kept;
  Mask dropped_full = 0;
  std::vector<bool> is_kept(p.factor_count(), false);
  for (int k : keep) is_kept.at(k) = true;
  for (int k = 0; k < p.factor_count(); ++k) {
    if (is_kept[k]) kept.push_back(p.factor(k));
    else dropped_full |= p.factor_mask(k);
  }
  if (kept.empty()) throw PreconditionError("pushforward_factors needs at least one kept factor");
  Space target = kept.size() == 1 ? kept.front() : Space::product(kept);
  MultiVector out(target);
  for (const auto& [m, c] : z.terms()) {
    if ((m & dropped_full) != dropped_full) continue;
    // Full blocks have even rank, so removing them costs no sign.
    Mask r = 0;
    int shift = 0;
    for (int k = 0; k < p.factor_count(); ++k) {
      if (!is_kept[k]) continue;
      r |= ((m & p.factor_mask(k)) >> p.factor_offset(k)) << shift;
      shift += p.factor_ranks()[k];
    }
    out.add_term(r, c);
  }
  return out;
}

MultiVector tensor(const MultiVector& x, const MultiVector& y) {
  Space p = Space::product(x.space(), y.space());
  const int off = x.space().rank();
  MultiVector out(p);
  // e_S (x) e_T is the ascending monomial of S u (T shifted): no sign.
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms()) out.add_term(s | (t << off), cs * ct);
  return out;
}

std::string to_text(const MultiVector& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Rational a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    os << a << "*e{";
    bool f = true;
    for (int b = 0; b < 64; ++b)
      if (m >> b & 1) {
        os << (f ? "" : ",") << b + 1;
        f = false;
      }
    os << "}";
  }
  return os.str();
}

}  // namespace abacus
