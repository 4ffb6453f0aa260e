#include <gtest/gtest.h>

#include "chordweight/lie.hpp"

using namespace chordweight;

namespace {

ChordDiagram D(const char* code) { return ChordDiagram::parse(code); }

std::vector<Representation> builtins() {
  return {builtin_sl2(), builtin_so(2), builtin_so(3), builtin_so(4), builtin_abelian(1), builtin_abelian(2, 3)};
}

}  // namespace

TEST(Algebra, BuiltinsValidate) {
  for (const auto& rep : builtins()) {
    EXPECT_TRUE(validate_algebra(rep.algebra));
    EXPECT_TRUE(validate_representation(rep));
  }
}

TEST(Algebra, Sl2FormIsTrace) {
  const auto sl2 = builtin_sl2();
  EXPECT_EQ(sl2.algebra.form, (Matrix{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  // [H,E] = 2E, [H,F] = -2F, [E,F] = H
  EXPECT_EQ(sl2.algebra.bracket(0, 1, 1), 2);
  EXPECT_EQ(sl2.algebra.bracket(0, 2, 2), -2);
  EXPECT_EQ(sl2.algebra.bracket(1, 2, 0), 1);
}

TEST(Algebra, DetectsBrokenJacobi) {
  // [e0,e1] = e1, [e1,e2] = e0, [e0,e2] = 0 violates Jacobi on (0,1,2)
  StructureConstants f(3);
  f(0, 1, 1) = 1;
  f(1, 0, 1) = -1;
  f(1, 2, 0) = 1;
  f(2, 1, 0) = -1;
  EXPECT_TRUE(check_antisymmetry(f));
  const auto r = check_jacobi(f);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness.size(), 4u);
  EXPECT_FALSE(validate_algebra({f, Matrix::identity(3)}));
}

TEST(Algebra, DetectsAsymmetricBracket) {
  StructureConstants f(2);
  f(0, 1, 0) = 1;
  EXPECT_FALSE(check_antisymmetry(f));
}

TEST(Algebra, DetectsNonInvariantForm) {
  auto sl2 = builtin_sl2();
  sl2.algebra.form = Matrix::identity(3);
  const auto r = validate_algebra(sl2.algebra);
  EXPECT_FALSE(r);
  EXPECT_FALSE(check_form_invariance(sl2.algebra.bracket, sl2.algebra.form));
}

TEST(Algebra, DetectsDegenerateForm) {
  auto ab = builtin_abelian(2);
  ab.algebra.form = Matrix{{1, 1}, {1, 1}};
  EXPECT_FALSE(validate_algebra(ab.algebra));
  EXPECT_THROW(casimir(ab.algebra), InputError);
}

TEST(Representation, DetectsNonHomomorphism) {
  auto sl2 = builtin_sl2();
  sl2.matrices[1] = Matrix{{0, 2}, {0, 0}};
  EXPECT_FALSE(validate_representation(sl2));
}

TEST(Casimir, KnownValues) {
  const Matrix c = casimir(builtin_sl2().algebra);
  EXPECT_EQ(c, (Matrix{{Rational(1, 2), 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(casimir(builtin_abelian(3).algebra), Matrix::identity(3));
  const Matrix so3 = casimir(builtin_so(3).algebra);
  EXPECT_EQ(so3, Rational(-1) * Matrix::identity(3));
  EXPECT_EQ(builtin_so(3).algebra.form, Rational(-1) * Matrix::identity(3));
  for (const auto& rep : builtins()) EXPECT_EQ(rep.algebra.form * casimir(rep.algebra), Matrix::identity(rep.algebra.dim()));
}

TEST(WeightTensorOfRep, Sl2Explicit) {
  const auto rep = builtin_sl2();
  const auto& [h, e, f] = std::tie(rep.matrices[0], rep.matrices[1], rep.matrices[2]);
  const WeightTensor t = weight_tensor_of_rep(rep);
  t.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const Rational expected = Rational(1, 2) * h(b, a) * h(d, c) + e(b, a) * f(d, c) + f(b, a) * e(d, c);
    EXPECT_EQ(t(a, b, c, d), expected);
  });
  EXPECT_EQ(evaluate(t, D("AA")), 3);
}

TEST(WeightTensorOfRep, So3Theta) { EXPECT_EQ(evaluate(weight_tensor_of_rep(builtin_so(3)), D("AA")), 6); }

TEST(WeightTensorOfRep, ZeroRepresentation) {
  const WeightTensor t = weight_tensor_of_rep(builtin_abelian(2, 3));
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(evaluate(t, D("")), 3);
  EXPECT_EQ(evaluate(t, D("AA")), 0);
  EXPECT_EQ(evaluate(t, D("ABAB")), 0);
}

TEST(WeightTensorOfRep, SymmetricAndFourTerm) {
  for (const auto& rep : builtins()) {
    const auto t = weight_tensor_of_rep(rep);
    EXPECT_TRUE(validate_symmetry(t));
    EXPECT_TRUE(check_4t_tensor(t));
  }
}

TEST(StructureTensor, AbelianVanishes) { EXPECT_TRUE(structure_tensor(builtin_abelian(3).algebra).is_zero()); }

TEST(StructureTensor, TotallyAntisymmetric) {
  for (const auto& rep : builtins()) {
    const Tensor3 y = structure_tensor(rep.algebra);
    const std::size_t m = y.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          EXPECT_EQ(y(i, j, k), -y(j, i, k));
          EXPECT_EQ(y(i, j, k), -y(i, k, j));
          EXPECT_EQ(y(i, j, k), y(j, k, i));
          EXPECT_EQ(y(i, j, k), y(k, i, j));
          EXPECT_EQ(y(i, j, k), -y(k, j, i));
        }
  }
  EXPECT_FALSE(structure_tensor(builtin_sl2().algebra).is_zero());
}

TEST(StructureTensor, So3IsProportionalToAlternatingSymbol) {
  const Tensor3 y = structure_tensor(builtin_so(3).algebra);
  const Rational unit = y(0, 1, 2);
  EXPECT_NE(unit, 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        int sign = 0;
        if (i != j && j != k && i != k) sign = ((j + 3 - i) % 3 == 1) ? 1 : -1;
        EXPECT_EQ(y(i, j, k), sign * unit);
      }
}

TEST(StructureTensorIdentity, HoldsForBuiltins) {
  for (const auto& rep : builtins()) {
    EXPECT_TRUE(check_structure_tensor_identity(rep));
    EXPECT_TRUE(check_4t_tensor(weight_tensor_of_rep(rep)));
  }
}

TEST(Builtin, Names) {
  EXPECT_EQ(builtin("sl2_standard").dim_v, 2u);
  EXPECT_EQ(builtin("sl2").algebra.dim(), 3u);
  const auto so3 = builtin("so_n_standard(3)");
  EXPECT_EQ(so3.algebra.dim(), 3u);
  EXPECT_EQ(so3.dim_v, 3u);
  EXPECT_EQ(builtin("so5").algebra.dim(), 10u);
  const auto ab = builtin("abelian(1)");
  EXPECT_EQ(ab.algebra.dim(), 1u);
  EXPECT_TRUE(ab.algebra.bracket.is_zero());
  EXPECT_EQ(builtin("abelian4").algebra.dim(), 4u);
  EXPECT_THROW(builtin("g2"), InputError);
  EXPECT_THROW(builtin("so1"), InputError);
}

TEST(Isomorphism, So3ToItselfAndNotToSl2) {
  const auto so3 = builtin_so(3).algebra.bracket;
  const auto sl2 = builtin_sl2().algebra.bracket;
  const auto t = find_isomorphism(so3, so3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_isomorphism(so3, so3, *t));
  // the compact and split real forms are not isomorphic over the rationals
  EXPECT_FALSE(find_isomorphism(so3, sl2).has_value());
  EXPECT_FALSE(is_isomorphism(so3, so3, Matrix(3, 3)));
}

TEST(Isomorphism, RescaledSo3) {
  const auto so3 = builtin_so(3);
  std::vector<Matrix> doubled;
  for (const auto& m : so3.matrices) doubled.push_back(Rational(2) * m);
  const auto f = bracket_from_matrices(doubled);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(find_isomorphism(*f, so3.algebra.bracket).has_value());
  const auto span = span_isomorphism(doubled, so3.matrices);
  ASSERT_TRUE(span.has_value());
  EXPECT_TRUE(is_isomorphism(*f, so3.algebra.bracket, *span));
}

TEST(MatrixAlgebra, ClosureAndDependence) {
  EXPECT_FALSE(bracket_from_matrices({Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}}).has_value());
  EXPECT_THROW(bracket_from_matrices({Matrix{{1, 0}, {0, 1}}, Matrix{{2, 0}, {0, 2}}}), InputError);
}
