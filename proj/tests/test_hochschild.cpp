#include <gtest/gtest.h>

#include "abacus/hochschild.hpp"

using namespace abacus;

TEST(ZmodN, Arithmetic) {
  ZmodN a(7, 4), b(-1, 4);
  EXPECT_EQ(a.value(), 3);
  EXPECT_EQ(b.value(), 3);
  EXPECT_EQ((a + b).value(), 2);
  EXPECT_EQ((Integer(6) * a).value(), 2);
}

TEST(Hochschild, AnnihilationAtListedLevels) {
  for (auto [i, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}})
    for (long N : {2L, 3L, 4L, 8L, 9L}) {
      HochschildReport r = hochschild_verify(i, j, N, 7, 50, 1, 40);
      EXPECT_TRUE(r.w_certified);
      EXPECT_TRUE(r.hh0_match()) << i << "," << j << " N=" << N;
      EXPECT_TRUE(r.annihilated) << i << "," << j << " N=" << N;
      EXPECT_TRUE(r.extension_consistent);
      EXPECT_GT(r.cocycles, 0);
      EXPECT_TRUE(r.pass()) << r.witness.dump();
    }
}

TEST(Hochschild, InvariantsAreWTorsion) {
  // w_{4,2} = 12: on Z/8 the invariants are the 4-torsion
  HochschildReport r = hochschild_verify(4, 2, 8, 7, 20, 0, 30);
  EXPECT_EQ(r.w, 12);
  EXPECT_EQ(r.hh0_expected, (std::vector<long>{0, 2, 4, 6}));
  EXPECT_EQ(r.hh0_direct, r.hh0_expected);
}

TEST(Hochschild, LevelZeroCocyclesAreCoboundaries) {
  for (long N : {2L, 4L, 9L}) {
    HochschildReport r = hochschild_verify(3, 0, N, 7, 20, 0, 30);
    EXPECT_TRUE(r.j_zero);
    EXPECT_TRUE(r.coboundaries) << N;
  }
}

TEST(Hochschild, ParityLaws) {
  HochschildReport r = hochschild_verify(3, 2, 2, 7, 20, 0, 30);
  EXPECT_TRUE(r.parity_case);
  EXPECT_TRUE(r.square_law);
  EXPECT_TRUE(r.four_law);
  EXPECT_TRUE(r.double_law);
}
