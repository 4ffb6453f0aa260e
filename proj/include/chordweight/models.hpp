#pragma once

#include <cstddef>
#include <vector>

#include "curvature.hpp"
#include "linalg.hpp"

namespace chordweight::models {

/// diag(-1, 1, ..., 1).
inline Matrix lorentzian_metric(std::size_t d) {
  Matrix g = Matrix::identity(d);
  g(0, 0) = -1;
  return g;
}

inline CurvatureModel unit_sphere(std::size_t d) { return constant_curvature(d, 1); }
inline CurvatureModel hyperbolic(std::size_t d) { return constant_curvature(d, -1); }
inline CurvatureModel indefinite(std::size_t d, const Rational& kappa = 1) { return constant_curvature(lorentzian_metric(d), kappa); }
inline CurvatureModel flat(std::size_t d) { return constant_curvature(d, 0); }

/// Product of two unit 2-spheres, d = 4.
inline CurvatureModel sphere_pair() { return product_model(unit_sphere(2), unit_sphere(2)); }

/// d = 3, g = I, sectional curvature k01, k02, k12 on the coordinate planes.
/// Satisfies every algebraic curvature symmetry; parallel only when all three agree.
inline CurvatureModel anisotropic(const Rational& k01, const Rational& k02, const Rational& k12) {
  Array4 r(3);
  auto plane = [&](std::size_t a, std::size_t b, const Rational& k) {
    // R_{abba} = k with g = I
    r(a, b, b, a) = k;
    r(b, a, a, b) = k;
    r(a, b, a, b) = -k;
    r(b, a, b, a) = -k;
  };
  plane(0, 1, k01);
  plane(0, 2, k02);
  plane(1, 2, k12);
  return CurvatureModel(Matrix::identity(3), std::move(r));
}

/// d = 4, g = I, lowered curvature supported on R_{0123} = R_{2301} = 1 and the
/// entries forced by antisymmetry in each pair. Pair-symmetric but not Bianchi.
inline CurvatureModel bianchi_violating() {
  Array4 r(4);
  auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    // with g = I, R^d_{abc} = R_{abcd}
    r(a, b, c, d) = 1;
    r(b, a, c, d) = -1;
    r(a, b, d, c) = -1;
    r(b, a, d, c) = 1;
  };
  put(0, 1, 2, 3);
  put(2, 3, 0, 1);
  return CurvatureModel(Matrix::identity(4), std::move(r));
}

}  // namespace chordweight::models
