#include <gtest/gtest.h>

#include "chordweight/curvature.hpp"
#include "chordweight/models.hpp"

using namespace chordweight;

namespace {

ChordDiagram D(const char* code) { return ChordDiagram::parse(code); }

using Witness = std::vector<std::size_t>;

std::vector<CurvatureModel> parallel_family() {
  return {models::unit_sphere(2), models::unit_sphere(3), models::unit_sphere(4), models::hyperbolic(2),
          models::hyperbolic(3),  models::indefinite(3),  constant_curvature(3, Rational(1, 3)),
          constant_curvature(Matrix{{2, 1}, {1, 3}}, 2), models::flat(3), models::sphere_pair()};
}

Matrix symplectic2() { return Matrix{{0, 1}, {-1, 0}}; }

}  // namespace

TEST(Validate, ParallelFamilyIsValid) {
  for (const auto& m : parallel_family()) EXPECT_TRUE(validate_curvature(m));
  EXPECT_TRUE(validate_curvature(models::anisotropic(1, 2, 3)));
}

TEST(Validate, BianchiWitness) {
  const auto r = validate_curvature(models::bianchi_violating());
  EXPECT_FALSE(r);
  EXPECT_EQ(r.what, "first Bianchi identity");
  EXPECT_EQ(r.witness, (Witness{0, 1, 2, 3}));
}

TEST(Validate, AntisymmetryWitness) {
  Array4 r(2);
  r(0, 1, 0, 1) = 1;
  const auto res = validate_curvature(CurvatureModel(Matrix::identity(2), r));
  EXPECT_FALSE(res);
  EXPECT_EQ(res.witness, (Witness{0, 1, 0, 1}));
}

TEST(Validate, PairSymmetryWitness) {
  // antisymmetric in the first pair and Bianchi (automatic in d = 2), but not pair symmetric
  Array4 r(2);
  r(0, 1, 0, 0) = 1;
  r(1, 0, 0, 0) = -1;
  const auto res = validate_curvature(CurvatureModel(Matrix::identity(2), r));
  EXPECT_FALSE(res);
  EXPECT_EQ(res.what, "pair symmetry R_abcd = R_cdab");
  EXPECT_EQ(res.witness, (Witness{0, 0, 0, 1}));
}

TEST(Validate, AsymmetricMetric) {
  EXPECT_FALSE(validate_curvature(CurvatureModel(Matrix{{1, 1}, {0, 1}}, Array4(2))));
}

TEST(Validate, SingularMetricThrows) {
  EXPECT_THROW(CurvatureModel(Matrix{{1, 1}, {1, 1}}, Array4(2)), InputError);
  EXPECT_THROW(CurvatureModel(Matrix::identity(2), Array4(3)), InputError);
}

TEST(ConstantCurvature, ZeroKappaIsFlat) {
  EXPECT_TRUE(models::flat(4).curvature().is_zero());
  EXPECT_TRUE(to_weight_tensor(models::flat(2)).is_zero());
}

TEST(ConstantCurvature, LoweredFormula) {
  for (const auto& g : {Matrix::identity(3), models::lorentzian_metric(3), Matrix{{2, 1}, {1, 3}}}) {
    const Rational kappa(-2, 3);
    const auto m = constant_curvature(g, kappa);
    const Array4 low = m.lowered();
    const std::size_t n = g.rows();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) EXPECT_EQ(low(a, b, c, d), kappa * (g(a, d) * g(b, c) - g(a, c) * g(b, d)));
  }
}

TEST(ConstantCurvature, HhatFormula) {
  // with g = I the sum over x collapses to x = b
  const Rational kappa(5, 2);
  const auto h = to_weight_tensor(constant_curvature(3, kappa));
  h.for_each_index([&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const Rational expected = kappa * (Rational(a == d && b == c) - Rational(a == c && b == d));
    EXPECT_EQ(h(a, b, c, d), expected);
  });
  EXPECT_TRUE(validate_symmetry(h));
}

TEST(Evaluate, SphereValues) {
  const auto h = to_weight_tensor(models::unit_sphere(3));
  EXPECT_EQ(evaluate(h, D("AA")), 6);
  EXPECT_EQ(evaluate(h, D("ABAB")), 6);
  EXPECT_EQ(evaluate(h, D("AABB")), 12);
  const auto flat = to_weight_tensor(models::flat(3));
  EXPECT_EQ(evaluate(flat, D("AA")), 0);
  EXPECT_EQ(evaluate(flat, D("ABCABC")), 0);
}

TEST(Parallel, FamilyPassesAndAgreesWithTensorCheck) {
  for (const auto& m : parallel_family()) {
    EXPECT_TRUE(check_parallel_4t(m));
    EXPECT_TRUE(check_4t_tensor(to_weight_tensor(m)));
  }
}

TEST(Parallel, BianchiViolatingModelIsStillParallel) {
  // R(e0,e1) and R(e2,e3) are commuting rotations and R is invariant under both
  const auto m = models::bianchi_violating();
  EXPECT_TRUE(check_parallel_4t(m));
  EXPECT_TRUE(check_4t_tensor(to_weight_tensor(m)));
}

TEST(Parallel, AnisotropicFailsBothChecks) {
  const auto m = models::anisotropic(1, 2, 3);
  const auto r = check_parallel_4t(m);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness.size(), 6u);
  EXPECT_FALSE(check_4t_tensor(to_weight_tensor(m)));
  EXPECT_TRUE(check_parallel_4t(models::anisotropic(2, 2, 2)));
}

TEST(Holonomy, ThreeSphereIsSo3) {
  const auto h = holonomy_algebra(models::unit_sphere(3));
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.tangent_dim, 3u);
  EXPECT_TRUE(validate_algebra({h.bracket, h.form}));
  EXPECT_EQ(signature(h.form), (Signature{0, 3, 0}));
  const auto t = isomorphism_to_so(h, 3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_isomorphism(h.bracket, builtin_so(3).algebra.bracket, *t));
}

TEST(Holonomy, FlatAndProduct) {
  EXPECT_EQ(holonomy_algebra(models::flat(3)).dim(), 0u);
  const auto h = holonomy_algebra(models::sphere_pair());
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_TRUE(h.bracket.is_zero());
  EXPECT_TRUE(h.form_nondegenerate());
}

TEST(Holonomy, GeneratorsAreCurvatureEndomorphisms) {
  const auto m = models::indefinite(3);
  const auto h = holonomy_algebra(m);
  for (std::size_t i = 0; i < h.dim(); ++i) EXPECT_EQ(h.basis[i], m.endomorphism(h.generators[i].first, h.generators[i].second));
}

TEST(Holonomy, ThrowsOnInvalidOrNonParallel) {
  EXPECT_THROW(holonomy_algebra(models::bianchi_violating()), InputError);
  EXPECT_THROW(holonomy_algebra(models::anisotropic(1, 2, 3)), InputError);
}

TEST(Holonomy, FormCompatibilityAndClosure) {
  for (const auto& m : parallel_family()) {
    const auto h = holonomy_algebra(m);
    EXPECT_TRUE(check_form_compatibility(m, h));
    EXPECT_TRUE(check_induced_form(m, h));
    EXPECT_TRUE(check_holonomy_closure_identity(m));
    EXPECT_TRUE(h.form_nondegenerate());
  }
}

TEST(Triple, ThreeSphere) {
  const auto t = symmetric_triple(models::unit_sphere(3));
  EXPECT_EQ(t.dim(), 6u);
  EXPECT_EQ(t.h_dim(), 3u);
  EXPECT_EQ(t.p_dim, 3u);
  EXPECT_EQ(signature(t.form), (Signature{3, 3, 0}));
  EXPECT_EQ(t.involution, (std::vector<int>{1, 1, 1, -1, -1, -1}));
  EXPECT_TRUE(check_triple(t));
}

TEST(Triple, FlatPlane) {
  const auto t = symmetric_triple(models::flat(2));
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.h_dim(), 0u);
  EXPECT_TRUE(t.bracket.is_zero());
}

TEST(Triple, IndefiniteSignatures) {
  const auto t = symmetric_triple(models::indefinite(3));
  EXPECT_EQ(signature(t.h.form), (Signature{2, 1, 0}));
  EXPECT_EQ(signature(t.form), (Signature{4, 2, 0}));
}

TEST(Triple, BracketsAgreeWithCurvature) {
  const auto m = models::unit_sphere(3);
  const auto t = symmetric_triple(m);
  const std::size_t k = t.h_dim();
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      Matrix rebuilt(3, 3);
      for (std::size_t i = 0; i < k; ++i) rebuilt = rebuilt + t.bracket(k + x, k + y, i) * t.h.basis[i];
      EXPECT_EQ(rebuilt, m.endomorphism(x, y));
    }
}

TEST(Triple, NegativeControlFailsJacobi) {
  const auto t = assemble_triple(models::bianchi_violating());
  EXPECT_EQ(t.h_dim(), 2u);
  const auto r = check_jacobi(t.bracket);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness, (Witness{2, 3, 4, 5}));
  EXPECT_FALSE(check_triple(t));
}

TEST(LieType, Family) {
  for (const auto& m : parallel_family()) EXPECT_TRUE(verify_lie_type(m));
}

TEST(LieType, ThreeSphereMatchesSo3UpToFourChords) {
  const auto s3 = to_weight_tensor(models::unit_sphere(3));
  const auto so3 = weight_tensor_of_rep(builtin_so(3));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& d : enumerate_diagrams(n)) EXPECT_EQ(evaluate(s3, d), evaluate(so3, d)) << d.code();
}

TEST(Realizability, So3WithIdentityGivesThreeSphere) {
  const auto v = rep_curvature_symmetries(builtin_so(3), Matrix::identity(3));
  EXPECT_EQ(v.status, RealizabilityStatus::pass);
  EXPECT_EQ(v.lowered, models::unit_sphere(3).lowered());
  EXPECT_EQ(curvature_model_from_rep(builtin_so(3), Matrix::identity(3)).curvature(), models::unit_sphere(3).curvature());
}

TEST(Realizability, Sl2SymplecticIsSymmetricInFirstPair) {
  const auto v = rep_curvature_symmetries(builtin_sl2(), symplectic2());
  EXPECT_EQ(v.status, RealizabilityStatus::fail_skew);
  EXPECT_EQ(v.witness, (Witness{0, 0, 1, 1}));
  EXPECT_EQ(to_string(v.status), "fail(skew)");
  const Array4& r = v.lowered;
  EXPECT_EQ(r(0, 0, 1, 1), -1);
  EXPECT_EQ(r(1, 1, 0, 0), -1);
  EXPECT_EQ(r(0, 1, 0, 1), Rational(1, 2));
  EXPECT_EQ(r(1, 0, 1, 0), Rational(1, 2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          EXPECT_EQ(r(a, b, c, d), r(b, a, c, d));
          EXPECT_EQ(r(a, b, c, d) + r(b, c, a, d) + r(c, a, b, d), 0);
        }
}

TEST(Realizability, AbelianAndErrors) {
  EXPECT_EQ(rep_curvature_symmetries(builtin_abelian(2, 3), Matrix::identity(3)).status, RealizabilityStatus::pass);
  EXPECT_THROW(rep_curvature_symmetries(builtin_so(3), Matrix(3, 3)), InputError);
  EXPECT_THROW(rep_curvature_symmetries(builtin_so(3), Matrix::identity(2)), InputError);
  EXPECT_THROW(curvature_model_from_rep(builtin_sl2(), symplectic2()), InputError);
  EXPECT_EQ(to_string(RealizabilityStatus::fail_bianchi), "fail(bianchi)");
}

TEST(TripleFromRep, So3MatchesThreeSphere) {
  const auto t = triple_from_rep(builtin_so(3), Matrix::identity(3));
  const auto s3 = symmetric_triple(models::unit_sphere(3));
  EXPECT_EQ(t.h_dim(), 3u);
  EXPECT_TRUE(find_isomorphism(t.h.bracket, s3.h.bracket).has_value());
  EXPECT_EQ(t.bracket, s3.bracket);
}

TEST(TripleFromRep, So4) {
  const auto t = triple_from_rep(builtin_so(4), Matrix::identity(4));
  EXPECT_EQ(t.h_dim(), 6u);
  EXPECT_EQ(t.p_dim, 4u);
  EXPECT_TRUE(check_triple(t));
}

TEST(TripleFromRep, HolonomyRoundTrip) {
  // the holonomy representation of a sphere realises the same curvature again
  const auto m = models::unit_sphere(3);
  const auto rep = holonomy_representation(holonomy_algebra(m));
  EXPECT_TRUE(validate_representation(rep));
  EXPECT_EQ(curvature_model_from_rep(rep, m.metric()).curvature(), m.curvature());
}

TEST(IsomorphismToSo, TwoAndFour) {
  EXPECT_TRUE(isomorphism_to_so(holonomy_algebra(models::unit_sphere(2)), 2).has_value());
  EXPECT_TRUE(isomorphism_to_so(holonomy_algebra(models::unit_sphere(4)), 4).has_value());
  EXPECT_FALSE(isomorphism_to_so(holonomy_algebra(models::sphere_pair()), 4).has_value());
}

TEST(ProductModel, BlockDiagonal) {
  const auto m = product_model(models::unit_sphere(2), models::hyperbolic(3));
  EXPECT_EQ(m.dim(), 5u);
  EXPECT_TRUE(validate_curvature(m));
  EXPECT_TRUE(check_parallel_4t(m));
  EXPECT_EQ(m.r(0, 1, 1, 0), 1);
  EXPECT_EQ(m.r(2, 3, 3, 2), -1);
  EXPECT_EQ(m.r(0, 2, 2, 0), 0);
  EXPECT_EQ(holonomy_algebra(m).dim(), 4u);
}
