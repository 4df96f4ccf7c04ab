#include <gtest/gtest.h>

#include <algorithm>

#include "abacus/homomorphism.hpp"
#include "abacus/multivector.hpp"
#include "abacus/random.hpp"

using namespace abacus;

namespace {

// Sign of the permutation sorting the concatenated index lists, by bubble sort.
int sort_sign(Mask s, Mask t) {
  std::vector<int> idx;
  for (int k = 0; k < 64; ++k)
    if (s >> k & 1) idx.push_back(k);
  for (int k = 0; k < 64; ++k)
    if (t >> k & 1) idx.push_back(k);
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  return sign;
}

MultiVector e(const Space& a, std::initializer_list<int> idx, long c = 1) {
  Mask m = 0;
  for (int k : idx) m |= Mask{1} << (k - 1);
  return MultiVector::basis(a, m, c);
}

}  // namespace

TEST(Space, ProductLayout) {
  Space a("A", 4), b("B", 2);
  Space p = Space::product(a, b);
  EXPECT_EQ(p.rank(), 6);
  EXPECT_EQ(p.factor_count(), 2);
  EXPECT_EQ(p.factor_offset(1), 4);
  EXPECT_EQ(p.factor_mask(0), Mask{0b1111});
  EXPECT_EQ(p.factor_mask(1), Mask{0b110000});
  EXPECT_THROW(Space("odd", 3), PreconditionError);
}

TEST(Space, GosperOrderMatchesRank) {
  for (int k = 0; k <= 6; ++k) {
    auto ms = masks_of_degree(6, k);
    EXPECT_EQ(static_cast<long>(ms.size()), binomial(6, k).get_si());
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
    for (std::size_t r = 0; r < ms.size(); ++r) EXPECT_EQ(mask_rank(ms[r]), static_cast<int>(r));
  }
}

TEST(Space, WedgeSignMatchesSortOracle) {
  for (Mask s = 0; s < 64; ++s)
    for (Mask t = 0; t < 64; ++t)
      if (!(s & t)) EXPECT_EQ(wedge_sign(s, t), sort_sign(s, t)) << s << " " << t;
}

TEST(MultiVector, HandComputedProducts) {
  Space a = Space("A", 4);
  EXPECT_EQ(wedge(e(a, {2}), e(a, {1})), e(a, {1, 2}, -1));
  EXPECT_EQ(wedge(e(a, {1, 3}), e(a, {2, 4})), e(a, {1, 2, 3, 4}, -1));
  EXPECT_TRUE(wedge(e(a, {1}), e(a, {1, 2})).is_zero());
  EXPECT_EQ(to_text(e(a, {1, 2}) - e(a, {3}, 3)), "1*e{1,2} - 3*e{3}");
  EXPECT_EQ(to_text(MultiVector(a)), "0");
}

TEST(MultiVector, RingAxioms) {
  Space a("A", 6);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    int p = static_cast<int>(rng.uniform(0, 6)), q = static_cast<int>(rng.uniform(0, 6));
    MultiVector x = random_class(a, p, rng), y = random_class(a, q, rng), z = random_class(a, 2, rng);
    EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
    EXPECT_EQ(wedge(x, y + z), wedge(x, y) + wedge(x, z));
    Rational s = (p * q) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(y, x), s * wedge(x, y));
    EXPECT_EQ(wedge(MultiVector::unit(a), x), x);
  }
}

TEST(MultiVector, IntegrationAndPairing) {
  Space a("A", 4);
  EXPECT_EQ(integrate(MultiVector::top(a)), 1);
  EXPECT_EQ(integrate(e(a, {1, 2})), 0);
  EXPECT_EQ(pd_pair(e(a, {1, 3}), e(a, {2, 4})), -1);
}

TEST(MultiVector, IsogenyPullbackAndPushforward) {
  const int g = 2;
  Space a("A", 2 * g);
  Rng rng(5);
  for (long n : {-3L, -1L, 2L, 3L}) {
    for (int k = 0; k <= 2 * g; ++k) {
      MultiVector x = random_class(a, k, rng);
      EXPECT_EQ(mult_pullback(x, n), Rational(ipow(n, k)) * x);
      EXPECT_EQ(mult_pushforward(mult_pullback(x, n), n, g), Rational(ipow(n, 2 * g)) * x);
    }
  }
}

TEST(DividedPower, HandComputed) {
  Space a("A", 4);
  MultiVector theta = e(a, {1, 2}) + e(a, {3, 4});
  EXPECT_EQ(divided_power(theta, 2), MultiVector::top(a));
  EXPECT_EQ(wedge_power(theta, 2), Rational(2) * MultiVector::top(a));
  EXPECT_EQ(divided_power(theta, 0), MultiVector::unit(a));
  EXPECT_TRUE(divided_power(theta, 3).is_zero());
  MultiVector d = divided_exp(theta);
  EXPECT_EQ(d, MultiVector::unit(a) + theta + MultiVector::top(a));
}

TEST(DividedPower, Preconditions) {
  Space a("A", 4);
  EXPECT_THROW(divided_power(e(a, {1}), 2), PreconditionError);
  EXPECT_THROW(divided_power(Rational(1, 2) * e(a, {1, 2}), 2), PreconditionError);
  EXPECT_THROW(divided_power(e(a, {1, 2}) + e(a, {1, 2, 3, 4}), 2), PreconditionError);
}

TEST(DividedPower, RationalIdentityAndIntegrality) {
  Space a("A", 8);
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    int k = 2 * static_cast<int>(rng.uniform(1, 2));
    MultiVector x = random_class(a, k, rng, 5, 4);
    for (unsigned n = 0; n <= 4; ++n) {
      MultiVector gx = divided_power(x, n);
      EXPECT_TRUE(gx.integral());
      EXPECT_EQ(Rational(factorial(n)) * gx, wedge_power(x, n));
    }
  }
}

TEST(Homomorphism, PullbackIsRingMap) {
  Space a("A", 4);
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Homomorphism::Matrix m(4, std::vector<Integer>(4));
    for (auto& row : m)
      for (auto& v : row) v = rng.uniform(-3, 3);
    Homomorphism f(a, a, m);
    MultiVector x = random_class(a, 1, rng), y = random_class(a, 2, rng);
    EXPECT_EQ(hom_pullback(f, wedge(x, y)), wedge(hom_pullback(f, x), hom_pullback(f, y)));
  }
}

TEST(Homomorphism, ScalarMatchesIsogeny) {
  Space a("A", 4);
  Rng rng(2);
  for (long n : {-2L, 3L})
    for (int k = 0; k <= 4; ++k) {
      MultiVector x = random_class(a, k, rng);
      EXPECT_EQ(hom_pullback(Homomorphism::scalar(a, n), x), mult_pullback(x, n));
      EXPECT_EQ(hom_pushforward(Homomorphism::scalar(a, n), x), mult_pushforward(x, n, 2));
    }
}

TEST(Homomorphism, ProjectionFormula) {
  Space a("A", 4);
  Space aa = Space::product(a, a);
  Homomorphism mu = Homomorphism::addition(a);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    MultiVector x = random_class(a, static_cast<int>(rng.uniform(0, 4)), rng);
    MultiVector z = random_class(aa, static_cast<int>(rng.uniform(4, 8)), rng);
    EXPECT_EQ(hom_pushforward(mu, wedge(hom_pullback(mu, x), z)), wedge(x, hom_pushforward(mu, z)));
  }
}

TEST(Homomorphism, ProjectionPushforwardDropsBlock) {
  Space a("A", 2), b("B", 2);
  Space p = Space::product(a, b);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    MultiVector x = random_class(a, static_cast<int>(rng.uniform(0, 2)), rng);
    MultiVector y = random_class(b, static_cast<int>(rng.uniform(0, 2)), rng);
    MultiVector z = tensor(x, y);
    EXPECT_EQ(pushforward_factors(z, {0}), integrate(y) * x);
    EXPECT_EQ(hom_pushforward(Homomorphism::projection(p, 0), z), integrate(y) * x);
    EXPECT_EQ(pullback_factor(x, p, 0), tensor(x, MultiVector::unit(b)));
  }
}
