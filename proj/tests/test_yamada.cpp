#include <gtest/gtest.h>

#include "chordweight/curvature.hpp"
#include "chordweight/lie.hpp"
#include "chordweight/models.hpp"
#include "chordweight/yamada.hpp"

using namespace chordweight;

namespace {
ChordDiagram D(const char* code) { return ChordDiagram::parse(code); }
}  // namespace

TEST(Yamada, SmallDiagrams) {
  EXPECT_EQ(yamada_weight(D("")), 3);
  EXPECT_EQ(yamada_weight(D("AA")), 6);
  EXPECT_EQ(yamada_weight(D("ABAB")), 6);
  EXPECT_EQ(yamada_weight(D("AABB")), 12);
}

TEST(Yamada, ThetaIsNSquaredMinusN) {
  for (const Rational N : {Rational(2), Rational(5), Rational(-1), Rational(1, 2)}) {
    EXPECT_EQ(yamada_weight(D(""), N), N);
    EXPECT_EQ(yamada_weight(D("AA"), N), N * N - N);
  }
}

TEST(Yamada, MatchesSpheresOfOtherDimensions) {
  for (std::size_t N : {2, 4}) {
    const auto h = to_weight_tensor(models::unit_sphere(N));
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& d : enumerate_diagrams(n)) EXPECT_EQ(yamada_weight(d, Rational(N)), evaluate(h, d)) << N << " " << d.code();
  }
}

TEST(Yamada, ThreeWayEqualityUpToFourChords) {
  const auto s3 = to_weight_tensor(models::unit_sphere(3));
  const auto so3 = weight_tensor_of_rep(builtin_so(3));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : enumerate_diagrams(n)) {
      const Rational y = yamada_weight(d);
      EXPECT_EQ(y, evaluate(s3, d)) << d.code();
      EXPECT_EQ(y, evaluate(so3, d)) << d.code();
    }
}

TEST(Yamada, VanishesOnFourTermRelations) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& v : generate_4t(n).vectors) {
      EXPECT_EQ(yamada_weight(v), 0);
      EXPECT_EQ(yamada_weight(v, Rational(7, 3)), 0);
    }
}

TEST(Yamada, Linear) {
  DiagramSum v(D("ABAB"), 2);
  v.add(D("AABB"), Rational(-1, 3));
  EXPECT_EQ(yamada_weight(v), 2 * 6 - 4);
  EXPECT_EQ(yamada_weight(DiagramSum{}), 0);
}
