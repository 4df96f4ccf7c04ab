#include "abacus/beaufourier.hpp"

#include <sstream>

#include "abacus/random.hpp"

namespace abacus {

PolarizedModel::PolarizedModel(int g, std::vector<long> elementary_divisors)
    : g_(g), divisors_(std::move(elementary_divisors)) {
  if (g < 1) throw PreconditionError("g must be at least 1");
  if (static_cast<int>(divisors_.size()) != g) throw PreconditionError("need g elementary divisors");
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    if (divisors_[k] < 1) throw PreconditionError("elementary divisors must be positive");
    if (k && divisors_[k] % divisors_[k - 1] != 0) throw PreconditionError("elementary divisors must form a divisor chain");
  }
}

PolarizedModel PolarizedModel::principal(int g) { return PolarizedModel(g, std::vector<long>(g, 1)); }

Integer PolarizedModel::nu() const {
  Integer n = 1;
  for (long d : divisors_) n *= d;
  return n;
}

bool PolarizedModel::is_principal() const { return nu() == 1; }

namespace {

void require_principal(const PolarizedModel& m, const char* where) {
  if (!m.is_principal()) throw PreconditionError(std::string(where) + " needs a principal polarization");
}

Space as_ahat(const PolarizedModel& m) { return m.ahat(); }

// same coefficients, relabelled space
MultiVector relabel(const MultiVector& x, const Space& s) { return MultiVector(s, x.terms()); }

}  // namespace

MultiVector theta_class(const PolarizedModel& m) {
  Space a = m.a();
  MultiVector d(a);
  for (int j = 0; j < m.g(); ++j) d.add_term(Mask(3) << (2 * j), Rational(m.elementary_divisors()[j]));
  return d;
}

MultiVector poincare_class(const PolarizedModel& m) {
  require_principal(m, "poincare_class");
  MultiVector d = theta_class(m);
  Space p = m.a_x_ahat();
  MultiVector mu = relabel(hom_pullback(Homomorphism::addition(m.a()), d), p);
  return mu - pullback_factor(d, p, 0) - pullback_factor(d, p, 1);
}

MultiVector fourier_kernel(const PolarizedModel& m) { return divided_exp(poincare_class(m)); }

MultiVector fourier(const PolarizedModel& m, const MultiVector& x) {
  require_same(x.space(), m.a(), "fourier");
  return act_class(fourier_kernel(m), x);
}

MultiVector fourier_inverse(const PolarizedModel& m, const MultiVector& y) {
  // F o F = (-1)^g (-1)^*
  MultiVector z = relabel(fourier(m, relabel(y, m.a())), as_ahat(m));
  z = mult_pullback(z, -1);
  if (m.g() % 2) z *= -1;
  return relabel(z, m.a());
}

MultiVector pontryagin(const MultiVector& x, const MultiVector& y) {
  require_same(x.space(), y.space(), "pontryagin");
  return hom_pushforward(Homomorphism::addition(x.space()), tensor(x, y));
}

MultiVector pontryagin_power(const MultiVector& x, unsigned n) {
  MultiVector p = MultiVector::top(x.space());
  for (unsigned k = 0; k < n && !p.is_zero(); ++k) p = pontryagin(p, x);
  return p;
}

MultiVector pontryagin_divided_power(const MultiVector& x, unsigned n) {
  if (!x.integral()) throw PreconditionError("pontryagin_divided_power needs an integral class");
  if (n > 0 && integrate(x) != 0)
    throw PreconditionError("pontryagin_divided_power needs a class without top-degree component");
  MultiVector p = pontryagin_power(x, n);
  const Integer f = factorial(n);
  MultiVector out(x.space());
  for (const auto& [mask, c] : p.terms()) {
    if (c.get_den() != 1 || !mpz_divisible_p(c.get_num_mpz_t(), f.get_mpz_t())) {
      std::ostringstream os;
      os << "coefficient " << c << " of the " << n << "-th Pontryagin power not divisible by " << f;
      throw DivisionFailure(os.str());
    }
    out.add_term(mask, Rational(Integer(c.get_num() / f)));
  }
  return out;
}

std::map<int, MultiVector> beauville_split(const MultiVector& x, int i) {
  std::map<int, MultiVector> out;
  for (const auto& [mask, c] : x.terms()) {
    int s = 2 * i - popcount(mask);
    auto it = out.try_emplace(s, x.space()).first;
    it->second.add_term(mask, c);
  }
  return out;
}

namespace {

struct ProjectorPieces {
  Space a, p;
  MultiVector d;
  std::vector<MultiVector> w1, w2, wmu;  // p1^* W^[k], p2^* W^[k], mu^* W^[k]
};

ProjectorPieces pieces(const PolarizedModel& m) {
  ProjectorPieces q{m.a(), m.a_x_a(), theta_class(m), {}, {}, {}};
  Homomorphism mu = Homomorphism::addition(q.a);
  for (int k = 0; k <= m.g(); ++k) {
    MultiVector w = divided_power(q.d, k);
    q.w1.push_back(pullback_factor(w, q.p, 0));
    q.w2.push_back(pullback_factor(w, q.p, 1));
    q.wmu.push_back(hom_pullback(mu, w));
  }
  return q;
}

}  // namespace

std::vector<CorrClass> scholl_projectors(const PolarizedModel& m) {
  require_principal(m, "scholl_projectors");
  const int g = m.g();
  ProjectorPieces q = pieces(m);
  MultiVector l = relabel(poincare_class(m), q.p);
  std::vector<MultiVector> gl;
  for (int b = 0; b <= 2 * g; ++b) gl.push_back(divided_power(l, b));
  std::vector<CorrClass> out;
  for (int i = 0; i <= 2 * g; ++i) {
    MultiVector sum(q.p);
    for (int b = 0; b <= std::min(i, 2 * g - i); ++b) {
      if ((2 * g - i - b) % 2 || (i - b) % 2) continue;
      const int a = (2 * g - i - b) / 2;
      const int c = (i - b) / 2;
      if (a > g || c > g) continue;
      sum += wedge(wedge(q.w1[a], gl[b]), q.w2[c]);
    }
    if (i % 2) sum *= -1;
    out.emplace_back(q.a, q.a, std::move(sum));
  }
  return out;
}

std::vector<CorrClass> suh_projectors(const PolarizedModel& m, SuhVariant variant) {
  require_principal(m, "suh_projectors");
  const int g = m.g();
  ProjectorPieces q = pieces(m);
  std::vector<CorrClass> out;
  for (int i = 0; i <= 2 * g; ++i) {
    MultiVector sum(q.p);
    if (variant == SuhVariant::expanded) {
      for (int b = 0; b <= std::min(i, 2 * g - i); ++b) {
        if ((2 * g - i - b) % 2 || (i - b) % 2) continue;
        const int a = (2 * g - i - b) / 2;
        const int c = (i - b) / 2;
        if (a > g || c > g) continue;
        MultiVector inner(q.p);
        for (int d = 0; d <= std::min(b, g); ++d)
          for (int e = 0; e <= std::min(b - d, g); ++e) {
            const int f = b - d - e;
            if (f > g) continue;
            MultiVector t = wedge(wedge(q.w1[d], q.wmu[e]), q.w2[f]);
            if ((d + f) % 2) t *= -1;
            inner += t;
          }
        sum += wedge(wedge(q.w1[a], q.w2[c]), inner);
      }
      if (i % 2) sum *= -1;
    } else {
      for (int r = 0; r <= g; ++r)
        for (int s = 0; r + s <= g; ++s) {
          Integer bin = variant == SuhVariant::chu_vandermonde ? binomial(r + s, s + g - i)
                                                               : binomial(r + s, s + i - g);
          if (bin == 0) continue;
          MultiVector t = wedge(wedge(q.w1[r], q.wmu[g - r - s]), q.w2[s]);
          if ((g - r - s) % 2) bin = -bin;
          sum += Rational(bin) * t;
        }
    }
    out.emplace_back(q.a, q.a, std::move(sum));
  }
  return out;
}

bool poincare_formula_check(const PolarizedModel& m, int r, int s) {
  require_principal(m, "poincare_formula_check");
  if (r < 0 || s < 0 || r + s > m.g()) throw PreconditionError("poincare_formula_check needs r + s <= g");
  MultiVector d = theta_class(m);
  MultiVector lhs = wedge(divided_power(d, r), divided_power(d, s));
  MultiVector rhs = Rational(binomial(r + s, r)) * divided_power(d, r + s);
  return lhs == rhs;
}

namespace {

Json mismatch(const std::string& input, const MultiVector& lhs, const MultiVector& rhs) {
  return {{"input", input}, {"lhs", to_text(lhs)}, {"rhs", to_text(rhs)}};
}

std::vector<MultiVector> basis_of(const Space& a) {
  std::vector<MultiVector> out;
  for (int k = 0; k <= a.rank(); ++k)
    for (Mask s : masks_of_degree(a.rank(), k)) out.push_back(MultiVector::basis(a, s));
  return out;
}

}  // namespace

Report fourier_identity_suite(const PolarizedModel& m, std::uint64_t seed) {
  require_principal(m, "fourier_identity_suite");
  const int g = m.g();
  const Space a = m.a();
  Report rep;
  const auto basis = basis_of(a);
  std::vector<MultiVector> fb;
  for (const auto& x : basis) fb.push_back(fourier(m, x));

  {  // F o F = (-1)^g (-1)^*
    Json w;
    bool ok = true;
    for (std::size_t k = 0; k < basis.size() && ok; ++k) {
      MultiVector lhs = fourier(m, relabel(fb[k], a));
      MultiVector rhs = mult_pullback(basis[k], -1);
      if (g % 2) rhs *= -1;
      if (!(relabel(lhs, a) == rhs)) {
        ok = false;
        w = mismatch(to_text(basis[k]), lhs, rhs);
      }
    }
    rep.add("fourier-inversion", g, ok, w);
  }
  {  // F(x * y) = F(x) F(y) and F(x y) = (-1)^g F(x) * F(y), on basis pairs
    Json w1, w2;
    bool ok1 = true, ok2 = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (ok1) {
          MultiVector lhs = fourier(m, pontryagin(basis[i], basis[j]));
          MultiVector rhs = wedge(fb[i], fb[j]);
          if (!(lhs == rhs)) {
            ok1 = false;
            w1 = mismatch(to_text(basis[i]) + " * " + to_text(basis[j]), lhs, rhs);
          }
        }
        if (ok2) {
          MultiVector lhs = fourier(m, wedge(basis[i], basis[j]));
          MultiVector rhs = relabel(pontryagin(relabel(fb[i], a), relabel(fb[j], a)), m.ahat());
          if (g % 2) rhs *= -1;
          if (!(lhs == rhs)) {
            ok2 = false;
            w2 = mismatch(to_text(basis[i]) + " . " + to_text(basis[j]), lhs, rhs);
          }
        }
      }
    rep.add("fourier-pontryagin-exchange", g, ok1, w1);
    rep.add("fourier-intersection-exchange", g, ok2, w2);
  }
  {  // F o n^* = n_* o F and F o n_* = n^* o F
    Json w;
    bool ok = true;
    for (long n = -3; n <= 3 && ok; ++n) {
      if (n == 0) continue;
      for (std::size_t k = 0; k < basis.size() && ok; ++k) {
        MultiVector l1 = fourier(m, mult_pullback(basis[k], n));
        MultiVector r1 = mult_pushforward(fb[k], n, g);
        MultiVector l2 = fourier(m, mult_pushforward(basis[k], n, g));
        MultiVector r2 = mult_pullback(fb[k], n);
        if (!(l1 == r1)) {
          ok = false;
          w = mismatch("n=" + std::to_string(n) + " pullback " + to_text(basis[k]), l1, r1);
        } else if (!(l2 == r2)) {
          ok = false;
          w = mismatch("n=" + std::to_string(n) + " pushforward " + to_text(basis[k]), l2, r2);
        }
      }
    }
    rep.add("fourier-isogeny-commutation", g, ok, w);
  }
  {  // pushforward of e^l along the first projection is (-1)^g times the point class
    MultiVector e = fourier_kernel(m);
    MultiVector expected = MultiVector::top(a);
    if (g % 2) expected *= -1;
    MultiVector p1 = relabel(pushforward_factors(e, {0}), a);
    MultiVector p2 = relabel(pushforward_factors(e, {1}), a);
    bool ok = p1 == expected && p2 == expected;
    rep.add("fourier-kernel-pushforward", g, ok, mismatch("e^l", p1 == expected ? p2 : p1, expected));
  }
  {  // gamma_g(d) = nu [0] for nu in {1, 2, 4}
    Json w;
    bool ok = true;
    for (long nu : {1L, 2L, 4L}) {
      std::vector<long> dv(g, 1);
      dv.back() = nu;
      PolarizedModel pm(g, dv);
      MultiVector lhs = divided_power(theta_class(pm), g);
      MultiVector rhs = Rational(pm.nu()) * MultiVector::top(a);
      if (!(lhs == rhs)) {
        ok = false;
        w = mismatch("nu=" + std::to_string(nu), lhs, rhs);
      }
    }
    rep.add("theta-top-power", g, ok, w);
  }
  MultiVector d = theta_class(m);
  {  // F(gamma_i(d)) = (-1)^{g-i} gamma_{g-i}(d)
    Json w;
    bool ok = true;
    for (int i = 0; i <= g && ok; ++i) {
      MultiVector lhs = relabel(fourier(m, divided_power(d, i)), a);
      MultiVector rhs = divided_power(d, g - i);
      if ((g - i) % 2) rhs *= -1;
      if (!(lhs == rhs)) {
        ok = false;
        w = mismatch("i=" + std::to_string(i), lhs, rhs);
      }
    }
    rep.add("fourier-theta-powers", g, ok, w);
  }
  {  // gamma*_i(gamma_{g-1}(d)) = gamma_{g-i}(d)
    Json w;
    bool ok = true;
    MultiVector c = divided_power(d, g - 1);
    for (int i = 0; i <= g && ok; ++i) {
      MultiVector lhs = pontryagin_divided_power(c, i);
      MultiVector rhs = divided_power(d, g - i);
      if (!(lhs == rhs)) {
        ok = false;
        w = mismatch("i=" + std::to_string(i), lhs, rhs);
      }
    }
    rep.add("pontryagin-theta-powers", g, ok, w);
  }
  Rng rng(seed);
  std::vector<MultiVector> symmetric;
  for (int i = 0; i <= g; ++i) symmetric.push_back(divided_power(d, i));
  for (int t = 0; t < 8; ++t) {
    int k = 2 * static_cast<int>(rng.uniform(0, g));
    symmetric.push_back(random_class(a, k, rng) + random_class(a, 2 * static_cast<int>(rng.uniform(0, g)), rng));
  }
  {  // symmetric classes have no odd components in their transform
    Json w;
    bool ok = true;
    for (const auto& c : symmetric) {
      if (!(mult_pullback(c, -1) == c)) continue;
      MultiVector f = fourier(m, c);
      for (int k = 1; k <= 2 * g; k += 2)
        if (!grade(f, k).is_zero() && ok) {
          ok = false;
          w = {{"input", to_text(c)}, {"odd_component", to_text(grade(f, k))}};
        }
      if (!(mult_pullback(f, -1) == f) && ok) {
        ok = false;
        w = {{"input", to_text(c)}, {"not_symmetric", to_text(f)}};
      }
    }
    rep.add("fourier-parity", g, ok, w);
  }
  {  // CH^i_s goes to CH^{g-i+s}_s
    Json w;
    bool ok = true;
    for (const auto& x : basis) {
      const int k = *x.degree();
      for (int i = 0; i <= g && ok; ++i) {
        auto split = beauville_split(x, i);
        const int s = 2 * i - k;
        auto fsplit = beauville_split(fourier(m, x), g - i + s);
        if (split.size() != 1 || fsplit.size() != 1 || fsplit.begin()->first != s) {
          ok = false;
          w = {{"input", to_text(x)}, {"i", i}, {"s", s}};
        }
      }
    }
    rep.add("fourier-degree-exchange", g, ok, w);
  }
  {  // gamma*_n = F^{-1} o gamma_n o F on augmentation-ideal classes of even degree
    Json w;
    bool ok = true;
    for (int t = 0; t < 6 && ok; ++t) {
      int k = 2 * static_cast<int>(rng.uniform(0, g - 1));
      MultiVector x = random_class(a, k, rng, 3, 3);
      for (unsigned n = 0; n <= static_cast<unsigned>(g) && ok; ++n) {
        MultiVector lhs = pontryagin_divided_power(x, n);
        MultiVector rhs = fourier_inverse(m, relabel(divided_power(relabel(fourier(m, x), a), n), m.ahat()));
        if (!(lhs == rhs)) {
          ok = false;
          w = mismatch("n=" + std::to_string(n) + " x=" + to_text(x), lhs, rhs);
        }
      }
    }
    rep.add("pontryagin-divided-power-conjugation", g, ok, w);
  }
  return rep;
}

}  // namespace abacus
