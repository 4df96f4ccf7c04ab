#include <gtest/gtest.h>

#include "abacus/corr.hpp"
#include "abacus/homomorphism.hpp"
#include "abacus/random.hpp"

using namespace abacus;

namespace {

CorrClass random_corr(const Space& src, const Space& tgt, int deg, Rng& rng) {
  MultiVector c = random_class(Space::product(src, tgt), deg, rng, 6, 3);
  return CorrClass(src, tgt, c, src.rank() - deg);
}

Homomorphism random_hom(const Space& src, const Space& tgt, Rng& rng) {
  Homomorphism::Matrix m(tgt.rank(), std::vector<Integer>(src.rank()));
  for (auto& row : m)
    for (auto& v : row) v = rng.uniform(-2, 2);
  return Homomorphism(src, tgt, m);
}

}  // namespace

TEST(Corr, DiagonalActsAsIdentity) {
  for (int g = 1; g <= 3; ++g) {
    Space a = abelian_space(g);
    CorrClass d = diagonal(a);
    for (int k = 0; k <= 2 * g; ++k)
      for (Mask m : masks_of_degree(2 * g, k)) EXPECT_EQ(act(d, MultiVector::basis(a, m)), MultiVector::basis(a, m));
  }
}

TEST(Corr, DiagonalProductFormula) {
  for (int g = 1; g <= 3; ++g) EXPECT_EQ(diagonal(g), diagonal_product_formula(g)) << g;
}

TEST(Corr, CompositionIsActionComposition) {
  Space x("X", 2), y("Y", 4), z("Z", 2);
  Rng rng(21);
  for (int t = 0; t < 25; ++t) {
    CorrClass gam = random_corr(x, y, static_cast<int>(rng.uniform(0, 6)), rng);
    CorrClass del = random_corr(y, z, static_cast<int>(rng.uniform(0, 6)), rng);
    CorrClass dg = compose(del, gam);
    for (int k = 0; k <= 2; ++k) {
      MultiVector v = random_class(x, k, rng);
      EXPECT_EQ(act(dg, v), act(del, act(gam, v)));
    }
  }
}

TEST(Corr, CompositionIsAssociative) {
  Space a("A", 2), b("B", 2), c("C", 4), d("D", 2);
  Rng rng(22);
  for (int t = 0; t < 15; ++t) {
    CorrClass f = random_corr(a, b, static_cast<int>(rng.uniform(0, 4)), rng);
    CorrClass g = random_corr(b, c, static_cast<int>(rng.uniform(0, 6)), rng);
    CorrClass h = random_corr(c, d, static_cast<int>(rng.uniform(0, 6)), rng);
    EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
  }
}

TEST(Corr, GraphActsAsPullbackAndTransposeAsPushforward) {
  Space a = abelian_space(2);
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    Homomorphism f = random_hom(a, a, rng), h = random_hom(a, a, rng);
    for (int k = 0; k <= 4; ++k) {
      MultiVector v = random_class(a, k, rng);
      EXPECT_EQ(act(graph(f), v), hom_pullback(f, v));
      EXPECT_EQ(act(transpose(graph(f)), v), hom_pushforward(f, v));
    }
    EXPECT_EQ(graph(compose(h, f)), compose(graph(f), graph(h)));
  }
}

TEST(Corr, LiebermanAdjunctionSign) {
  // <gamma_* x, y> = (-1)^{deg gamma * deg y} <x, (t gamma)_* y>
  for (int g = 1; g <= 2; ++g) {
    Space a = abelian_space(g);
    Rng rng(24 + g);
    for (int t = 0; t < 40; ++t) {
      int r = static_cast<int>(rng.uniform(0, 4 * g));
      CorrClass gam = random_corr(a, a, r, rng);
      for (int k = 0; k <= 2 * g; ++k) {
        int l = 2 * g - k + gam.offset();
        if (l < 0 || l > 2 * g) continue;
        MultiVector x = random_class(a, k, rng), y = random_class(a, l, rng);
        Rational s = (r * l) % 2 ? -1 : 1;
        EXPECT_EQ(pd_pair(act(gam, x), y), s * pd_pair(x, act(transpose(gam), y)));
      }
    }
  }
}

TEST(Corr, TransposeAndSwapAreInvolutions) {
  Space a("A", 2), b("B", 4);
  Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    CorrClass c = random_corr(a, b, static_cast<int>(rng.uniform(0, 6)), rng);
    EXPECT_EQ(transpose(transpose(c)), c);
    EXPECT_EQ(swap_factors(swap_factors(c.cls())), c.cls());
  }
}

TEST(Corr, FromActionRecoversClass) {
  Space a = abelian_space(2);
  Rng rng(26);
  for (int t = 0; t < 10; ++t) {
    CorrClass c = random_corr(a, a, static_cast<int>(rng.uniform(0, 8)), rng);
    CorrClass back = from_action(a, a, c.offset(), [&](Mask m) { return act(c, MultiVector::basis(a, m)); });
    EXPECT_EQ(back, c);
  }
}

TEST(Corr, BlocksRoundTrip) {
  Space a = abelian_space(2);
  Rng rng(27);
  for (int t = 0; t < 10; ++t) {
    CorrClass c = random_corr(a, a, static_cast<int>(rng.uniform(0, 8)), rng);
    std::vector<RationalMatrix> blocks;
    for (int k = 0; k <= 4; ++k) blocks.push_back(operator_block(c, k));
    EXPECT_EQ(from_blocks(a, a, c.offset(), blocks), c);
  }
}

TEST(Kuenneth, ActsAsGradeProjection) {
  for (int g = 1; g <= 3; ++g) {
    Space a = abelian_space(g);
    for (int i = 0; i <= 2 * g; ++i) {
      CorrClass p = kuenneth_projector(g, i);
      for (int k = 0; k <= 2 * g; ++k)
        for (Mask m : masks_of_degree(2 * g, k)) {
          MultiVector v = MultiVector::basis(a, m);
          EXPECT_EQ(act(p, v), k == i ? v : MultiVector(a));
        }
      // bidegree (2g-i, i), source factor first
      for (const auto& [m, c] : p.cls().terms()) {
        EXPECT_EQ(popcount(m & a.full_mask()), 2 * g - i);
        EXPECT_EQ(popcount(m >> (2 * g)), i);
      }
    }
  }
}

TEST(Kuenneth, OrthogonalIdempotentsSummingToDiagonal) {
  for (int g = 1; g <= 2; ++g) {
    auto p = kuenneth_projectors(g);
    CorrClass s = CorrClass::zero(p[0].source(), p[0].target());
    for (int i = 0; i <= 2 * g; ++i) {
      s += p[i];
      for (int j = 0; j <= 2 * g; ++j) {
        CorrClass c = compose(p[i], p[j]);
        if (i == j) EXPECT_EQ(c, p[i]);
        else EXPECT_TRUE(c.cls().is_zero()) << i << "," << j;
      }
      EXPECT_EQ(transpose(p[i]), p[2 * g - i]);
    }
    EXPECT_EQ(s, diagonal(g));
  }
}

TEST(Kuenneth, IsogenyEigenvalues) {
  for (int g = 1; g <= 2; ++g) {
    Space a = abelian_space(g);
    for (long n = -3; n <= 3; ++n) {
      CorrClass pull = graph(Homomorphism::scalar(a, n));
      CorrClass push = transpose(pull);
      for (int i = 0; i <= 2 * g; ++i) {
        CorrClass p = kuenneth_projector(g, i);
        EXPECT_EQ(compose(pull, p), Rational(ipow(n, i)) * p);
        EXPECT_EQ(compose(p, push), Rational(ipow(n, 2 * g - i)) * p);
      }
    }
  }
}

TEST(Corr, Preconditions) {
  Space a = abelian_space(1);
  EXPECT_THROW(CorrClass(a, a, MultiVector::unit(Space::product(a, a)), 0), PreconditionError);
  EXPECT_THROW(kuenneth_projector(1, 3), PreconditionError);
  Space b("B", 4);
  EXPECT_THROW(compose(diagonal(a), diagonal(b)), SpaceMismatch);
}
