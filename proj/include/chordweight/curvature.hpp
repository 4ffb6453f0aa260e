#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace chordweight {

/// Dense 4-index rational array over a d-dimensional space.
class Array4 {
public:
  Array4() = default;
  explicit Array4(std::size_t dim) : dim_(dim), v_(dim * dim * dim * dim) {}
  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return v_[((a * dim_ + b) * dim_ + c) * dim_ + d]; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return v_[((a * dim_ + b) * dim_ + c) * dim_ + d];
  }
  bool is_zero() const {
    for (const auto& q : v_)
      if (q != 0) return false;
    return true;
  }
  friend bool operator==(const Array4&, const Array4&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Rational> v_;
};

/// Signals that a construction which the input checks should guarantee has failed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Metric and curvature on one tangent space. R(a,b,c,d) = R^d_{abc}, i.e.
/// R(e_a, e_b) e_c = sum_d R^d_{abc} e_d.
class CurvatureModel {
public:
  CurvatureModel(Matrix metric, Array4 curvature) : g_(std::move(metric)), r_(std::move(curvature)) {
    if (!g_.square()) throw InputError("metric must be square");
    if (r_.dim() != g_.rows()) throw InputError("curvature dimension does not match metric");
    auto inv = try_inverse(g_);
    if (!inv) throw InputError("metric is singular");
    g_inv_ = std::move(*inv);
  }

  std::size_t dim() const { return g_.rows(); }
  const Matrix& metric() const { return g_; }
  const Matrix& inverse_metric() const { return g_inv_; }
  const Array4& curvature() const { return r_; }
  const Rational& r(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const { return r_(a, b, c, d); }

  /// Fully covariant R_{abcd} = sum_x R^x_{abc} g_{xd}.
  Array4 lowered() const {
    const std::size_t n = dim();
    Array4 out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            Rational s;
            for (std::size_t x = 0; x < n; ++x) s += r_(a, b, c, x) * g_(x, d);
            out(a, b, c, d) = s;
          }
    return out;
  }

  /// The endomorphism R(e_a, e_b): entry (d, c) is R^d_{abc}.
  Matrix endomorphism(std::size_t a, std::size_t b) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) m(d, c) = r_(a, b, c, d);
    return m;
  }

  /// R(u, v) for arbitrary vectors.
  Matrix endomorphism(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational s = u[a] * v[b];
        if (s != 0) m = m + s * endomorphism(a, b);
      }
    return m;
  }

private:
  Matrix g_;
  Matrix g_inv_;
  Array4 r_;
};

/// R_{abcd} = kappa (g_ad g_bc - g_ac g_bd), i.e. R^d_{abc} = kappa (delta^d_a g_bc - g_ac delta^d_b).
inline CurvatureModel constant_curvature(const Matrix& g, const Rational& kappa) {
  const std::size_t n = g.rows();
  Array4 r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        r(a, b, c, a) += kappa * g(b, c);
        r(a, b, c, b) -= kappa * g(a, c);
      }
  return CurvatureModel(g, std::move(r));
}

inline CurvatureModel constant_curvature(std::size_t dim, const Rational& kappa) {
  return constant_curvature(Matrix::identity(dim), kappa);
}

/// Metric symmetry, antisymmetry in the first pair, first Bianchi identity,
/// and pair symmetry of the lowered tensor, in that order.
inline CheckResult validate_curvature(const CurvatureModel& m) {
  const std::size_t n = m.dim();
  if (!m.metric().is_symmetric()) return CheckResult::fail("metric symmetry");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (m.r(a, b, c, d) != -m.r(b, a, c, d)) return CheckResult::fail("antisymmetry R^d_abc = -R^d_bac", {a, b, c, d});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (m.r(a, b, c, d) + m.r(b, c, a, d) + m.r(c, a, b, d) != 0)
            return CheckResult::fail("first Bianchi identity", {a, b, c, d});
  const Array4 low = m.lowered();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (low(a, b, c, d) != low(c, d, a, b)) return CheckResult::fail("pair symmetry R_abcd = R_cdab", {a, b, c, d});
  return CheckResult::pass();
}

/// Hhat^{bd}_{ac} = sum_x g^{bx} R^d_{axc}, as a weight tensor.
inline WeightTensor to_weight_tensor(const CurvatureModel& m) {
  const std::size_t n = m.dim();
  WeightTensor h(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Rational s;
          for (std::size_t x = 0; x < n; ++x) s += m.inverse_metric()(b, x) * m.r(a, x, c, d);
          h(a, b, c, d) = s;
        }
  return h;
}

/// The curvature identity of a parallel curvature tensor,
///   R^x_{efa} R^d_{xbc} + R^x_{efb} R^d_{axc} + R^x_{efc} R^d_{abx} - R^d_{efx} R^x_{abc} = 0,
/// witness (a,b,c,d,e,f).
inline CheckResult check_parallel_4t(const CurvatureModel& m) {
  const std::size_t n = m.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t f = 0; f < n; ++f) {
              Rational s;
              for (std::size_t x = 0; x < n; ++x) {
                s += m.r(e, f, a, x) * m.r(x, b, c, d);
                s += m.r(e, f, b, x) * m.r(a, x, c, d);
                s += m.r(e, f, c, x) * m.r(a, b, x, d);
                s -= m.r(e, f, x, d) * m.r(a, b, c, x);
              }
              if (s != 0) return CheckResult::fail("parallel-curvature identity", {a, b, c, d, e, f});
            }
  return CheckResult::pass();
}

/// span{R(X,Y)} inside End(p), with its commutator bracket and induced form.
struct HolonomyAlgebra {
  std::size_t tangent_dim = 0;
  /// Basis matrices; each is one of the generators R(e_a, e_b).
  std::vector<Matrix> basis;
  /// (a, b) with basis[i] = R(e_a, e_b).
  std::vector<std::pair<std::size_t, std::size_t>> generators;
  StructureConstants bracket;
  /// B_h(A_i, A_j) = R_{a_i b_i a_j b_j}.
  Matrix form;
  /// coords[a][b]: coordinates of R(e_a, e_b) in the basis (all a, b).
  std::vector<std::vector<std::vector<Rational>>> coords;

  std::size_t dim() const { return basis.size(); }
  bool form_nondegenerate() const { return dim() == 0 || determinant(form) != 0; }
};

/// Commutator identity [R(X,Y), R(Z,W)] = R(R(X,Y)Z, W) + R(Z, R(X,Y)W) on basis vectors.
inline CheckResult check_holonomy_closure_identity(const CurvatureModel& m) {
  const std::size_t n = m.dim();
  std::vector<Matrix> gens(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gens[a * n + b] = m.endomorphism(a, b);
  auto unit = [n](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  auto column = [n](const Matrix& mat, std::size_t c) {
    std::vector<Rational> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = mat(r, c);
    return v;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const Matrix& rxy = gens[x * n + y];
          const Matrix lhs = commutator(rxy, gens[z * n + w]);
          const Matrix rhs = m.endomorphism(column(rxy, z), unit(w)) + m.endomorphism(unit(z), column(rxy, w));
          if (!(lhs == rhs)) return CheckResult::fail("holonomy commutator identity", {x, y, z, w});
        }
  return CheckResult::pass();
}

namespace detail {

// Builds the holonomy algebra without checking preconditions. Throws
// InternalError when the span is not closed under commutators.
inline HolonomyAlgebra assemble_holonomy(const CurvatureModel& m) {
  const std::size_t n = m.dim();
  HolonomyAlgebra h;
  h.tangent_dim = n;
  SpanBasis span(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix e = m.endomorphism(a, b);
      if (span.add(flatten(e))) {
        h.basis.push_back(std::move(e));
        h.generators.emplace_back(a, b);
      }
    }
  auto f = bracket_from_matrices(h.basis);
  if (!f) throw InternalError("holonomy span is not closed under commutators");
  h.bracket = std::move(*f);

  h.coords.assign(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = span.coordinates(flatten(m.endomorphism(a, b)));
      if (!c) throw InternalError("curvature endomorphism outside its own span");
      h.coords[a][b] = std::move(*c);
    }

  const Array4 low = m.lowered();
  const std::size_t k = h.dim();
  h.form = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      h.form(i, j) = low(h.generators[i].first, h.generators[i].second, h.generators[j].first, h.generators[j].second);
  return h;
}

}  // namespace detail

/// B_h is well defined: for every generator pair, coords(R(a,b))^T B_h coords(R(c,d)) = R_{abcd}.
inline CheckResult check_induced_form(const CurvatureModel& m, const HolonomyAlgebra& h) {
  const std::size_t n = m.dim();
  const std::size_t k = h.dim();
  const Array4 low = m.lowered();
  if (!h.form.is_symmetric()) return CheckResult::fail("induced form symmetry");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Rational s;
          for (std::size_t i = 0; i < k; ++i) {
            if (h.coords[a][b][i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) s += h.coords[a][b][i] * h.form(i, j) * h.coords[c][d][j];
          }
          if (s != low(a, b, c, d)) return CheckResult::fail("induced form consistency", {a, b, c, d});
        }
  return CheckResult::pass();
}

/// B_h(A_i, R(e_z, e_w)) = g(A_i e_z, e_w) for every basis element and tangent pair.
inline CheckResult check_form_compatibility(const CurvatureModel& m, const HolonomyAlgebra& h) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t w = 0; w < n; ++w) {
        Rational lhs;
        for (std::size_t j = 0; j < h.dim(); ++j) lhs += h.form(i, j) * h.coords[z][w][j];
        Rational rhs;
        for (std::size_t x = 0; x < n; ++x) rhs += h.basis[i](x, z) * m.metric()(x, w);
        if (lhs != rhs) return CheckResult::fail("B_h(A, R(Z,W)) = g(A Z, W)", {i, z, w});
      }
  return CheckResult::pass();
}

/// Holonomy algebra of a valid parallel curvature model. Throws InputError if
/// the model fails its checks and InternalError if the construction breaks.
inline HolonomyAlgebra holonomy_algebra(const CurvatureModel& m) {
  if (auto r = validate_curvature(m); !r) throw InputError("invalid curvature: " + r.what + " at " + format_witness(r.witness));
  if (auto r = check_parallel_4t(m); !r) throw InputError("curvature is not parallel: " + r.what + " at " + format_witness(r.witness));
  HolonomyAlgebra h = detail::assemble_holonomy(m);
  if (auto r = check_holonomy_closure_identity(m); !r) throw InternalError(r.what + " fails at " + format_witness(r.witness));
  if (auto r = check_induced_form(m, h); !r) throw InternalError(r.what + " fails at " + format_witness(r.witness));
  return h;
}

/// g = h (+) p with basis (h basis, then e_0..e_{d-1}), involution +1 on h and -1 on p,
/// and form B_h (+) g.
struct SymmetricTriple {
  HolonomyAlgebra h;
  std::size_t p_dim = 0;
  StructureConstants bracket;
  std::vector<int> involution;
  Matrix form;

  std::size_t dim() const { return bracket.dim(); }
  std::size_t h_dim() const { return h.dim(); }
};

/// Builds the bracket tables [A,B] = AB - BA, [A,X] = A(X), [X,Y] = R(X,Y) with no checks.
inline SymmetricTriple assemble_triple(const CurvatureModel& m) {
  SymmetricTriple t;
  t.h = detail::assemble_holonomy(m);
  const std::size_t k = t.h.dim();
  const std::size_t n = m.dim();
  const std::size_t total = k + n;
  t.p_dim = n;
  t.bracket = StructureConstants(total);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) t.bracket(i, j, l) = t.h.bracket(i, j, l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        t.bracket(i, k + x, k + y) = t.h.basis[i](y, x);
        t.bracket(k + x, i, k + y) = -t.h.basis[i](y, x);
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < k; ++i) t.bracket(k + x, k + y, i) = t.h.coords[x][y][i];

  t.involution.assign(total, -1);
  for (std::size_t i = 0; i < k; ++i) t.involution[i] = 1;
  t.form = Matrix(total, total);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t.form(i, j) = t.h.form(i, j);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.form(k + x, k + y) = m.metric()(x, y);
  return t;
}

/// B([x,y],z) = B(x,[y,z]) on basis triples, witness (x,y,z).
inline CheckResult check_triple_invariance(const StructureConstants& f, const Matrix& form) {
  const std::size_t m = f.dim();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        Rational lhs;
        Rational rhs;
        for (std::size_t k = 0; k < m; ++k) {
          lhs += f(x, y, k) * form(k, z);
          rhs += form(x, k) * f(y, z, k);
        }
        if (lhs != rhs) return CheckResult::fail("B([x,y],z) = B(x,[y,z])", {x, y, z});
      }
  return CheckResult::pass();
}

/// Jacobi, [p,p] = h, involution is an automorphism, B symmetric, invariant,
/// s-invariant and non-degenerate.
inline CheckResult check_triple(const SymmetricTriple& t) {
  if (auto r = check_antisymmetry(t.bracket); !r) return r;
  if (auto r = check_jacobi(t.bracket); !r) return r;
  const std::size_t k = t.h_dim();
  const std::size_t total = t.dim();
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      for (std::size_t l = 0; l < total; ++l)
        if (t.bracket(i, j, l) * t.involution[i] * t.involution[j] != t.bracket(i, j, l) * t.involution[l])
          return CheckResult::fail("involution is not an automorphism", {i, j, l});
  {
    Matrix images(t.p_dim * t.p_dim, k);
    for (std::size_t x = 0; x < t.p_dim; ++x)
      for (std::size_t y = 0; y < t.p_dim; ++y)
        for (std::size_t i = 0; i < k; ++i) images(x * t.p_dim + y, i) = t.bracket(k + x, k + y, i);
    if (rank(images) != k) return CheckResult::fail("[p,p] does not span h");
  }
  if (!t.form.is_symmetric()) return CheckResult::fail("form symmetry");
  if (auto r = check_triple_invariance(t.bracket, t.form); !r) return r;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (t.form(i, j) * t.involution[i] * t.involution[j] != t.form(i, j))
        return CheckResult::fail("form is not involution-invariant", {i, j});
  if (total > 0 && determinant(t.form) == 0) return CheckResult::fail("triple exists but form degenerate");
  return CheckResult::pass();
}

class TripleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Symmetric triple of a valid parallel curvature model; every property is verified.
inline SymmetricTriple symmetric_triple(const CurvatureModel& m) {
  HolonomyAlgebra h = holonomy_algebra(m);
  if (!h.form_nondegenerate()) throw TripleError("triple exists but form degenerate");
  SymmetricTriple t = assemble_triple(m);
  if (auto r = check_triple(t); !r) throw TripleError(r.what + " fails at " + format_witness(r.witness));
  return t;
}

/// The holonomy algebra with B_h acting on p, packaged as a representation.
inline Representation holonomy_representation(const HolonomyAlgebra& h) {
  Representation rep;
  rep.algebra.bracket = h.bracket;
  rep.algebra.form = h.form;
  rep.dim_v = h.tangent_dim;
  rep.matrices = h.basis;
  return rep;
}

/// rho(C_h) == Hhat entrywise, then evaluation agreement on every diagram with
/// at most `max_chords` chords. Witness is the first differing (a,b,c,d) or
/// (chord count, diagram index).
inline CheckResult verify_lie_type(const CurvatureModel& m, std::size_t max_chords = 3) {
  const SymmetricTriple t = symmetric_triple(m);
  const WeightTensor hhat = to_weight_tensor(m);
  const std::size_t n = m.dim();
  WeightTensor from_rep(n);
  if (t.h_dim() > 0) {
    from_rep = weight_tensor_of_rep(holonomy_representation(t.h));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (from_rep(a, b, c, d) != hhat(a, b, c, d)) return CheckResult::fail("rho(C_h) != Hhat", {a, b, c, d});
  for (std::size_t k = 0; k <= max_chords; ++k) {
    const auto diagrams = enumerate_diagrams(k);
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      if (evaluate(from_rep, diagrams[i]) != evaluate(hhat, diagrams[i]))
        return CheckResult::fail("weight systems differ", {k, i});
  }
  return CheckResult::pass();
}

enum class RealizabilityStatus { pass, fail_skew, fail_bianchi };

inline std::string to_string(RealizabilityStatus s) {
  switch (s) {
    case RealizabilityStatus::pass: return "pass";
    case RealizabilityStatus::fail_skew: return "fail(skew)";
    case RealizabilityStatus::fail_bianchi: return "fail(bianchi)";
  }
  return "?";
}

struct RealizabilityVerdict {
  RealizabilityStatus status = RealizabilityStatus::pass;
  std::vector<std::size_t> witness;
  /// R^rho_{abcd} = sum rho(C)^{xy}_{ac} (B_V)_{xb} (B_V)_{yd}.
  Array4 lowered;
};

/// Lowers rho(C) with B_V and tests skew-symmetry in (a,b), then the cyclic Bianchi sum.
inline RealizabilityVerdict rep_curvature_symmetries(const Representation& rep, const Matrix& form_v) {
  const std::size_t n = rep.dim_v;
  if (form_v.rows() != n || form_v.cols() != n) throw InputError("form on V has wrong shape");
  if (determinant(form_v) == 0) throw InputError("form on V is singular");
  const WeightTensor p = weight_tensor_of_rep(rep);

  RealizabilityVerdict v;
  v.lowered = Array4(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Rational s;
          for (std::size_t x = 0; x < n; ++x) {
            if (form_v(x, b) == 0) continue;
            for (std::size_t y = 0; y < n; ++y) s += p(a, x, c, y) * form_v(x, b) * form_v(y, d);
          }
          v.lowered(a, b, c, d) = s;
        }
  const Array4& r = v.lowered;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (r(a, b, c, d) != -r(b, a, c, d)) {
            v.status = RealizabilityStatus::fail_skew;
            v.witness = {a, b, c, d};
            return v;
          }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (r(a, b, c, d) + r(b, c, a, d) + r(c, a, b, d) != 0) {
            v.status = RealizabilityStatus::fail_bianchi;
            v.witness = {a, b, c, d};
            return v;
          }
  return v;
}

/// (V, B_V) with R^x_{abc} = sum_d R^rho_{abcd} (B_V^{-1})^{dx}. B_V must be symmetric.
inline CurvatureModel curvature_model_from_rep(const Representation& rep, const Matrix& form_v) {
  if (!form_v.is_symmetric()) throw InputError("form on V must be symmetric to define a metric");
  const RealizabilityVerdict v = rep_curvature_symmetries(rep, form_v);
  if (v.status != RealizabilityStatus::pass)
    throw InputError("representation lacks curvature symmetries: " + to_string(v.status) + " at " + format_witness(v.witness));
  const std::size_t n = rep.dim_v;
  const Matrix inv = inverse(form_v);
  Array4 r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t x = 0; x < n; ++x) {
          Rational s;
          for (std::size_t d = 0; d < n; ++d) s += v.lowered(a, b, c, d) * inv(d, x);
          r(a, b, c, x) = s;
        }
  return CurvatureModel(form_v, std::move(r));
}

inline SymmetricTriple triple_from_rep(const Representation& rep, const Matrix& form_v) {
  return symmetric_triple(curvature_model_from_rep(rep, form_v));
}

/// Explicit isomorphism h -> so_n (n = tangent dimension) if one is found in the catalogue.
inline std::optional<Matrix> isomorphism_to_so(const HolonomyAlgebra& h, std::size_t n) {
  const Representation so = builtin_so(n);
  if (so.algebra.dim() != h.dim()) return std::nullopt;
  std::vector<Matrix> candidates;
  if (h.tangent_dim == n)
    if (auto t = span_isomorphism(h.basis, so.matrices)) candidates.push_back(std::move(*t));
  return find_isomorphism(h.bracket, so.algebra.bracket, candidates);
}

/// Block-diagonal sum of two models (product of the spaces).
inline CurvatureModel product_model(const CurvatureModel& x, const CurvatureModel& y) {
  const std::size_t nx = x.dim();
  const std::size_t n = nx + y.dim();
  Matrix g(n, n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j) g(i, j) = x.metric()(i, j);
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) g(nx + i, nx + j) = y.metric()(i, j);
  Array4 r(n);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < nx; ++b)
      for (std::size_t c = 0; c < nx; ++c)
        for (std::size_t d = 0; d < nx; ++d) r(a, b, c, d) = x.r(a, b, c, d);
  for (std::size_t a = 0; a < y.dim(); ++a)
    for (std::size_t b = 0; b < y.dim(); ++b)
      for (std::size_t c = 0; c < y.dim(); ++c)
        for (std::size_t d = 0; d < y.dim(); ++d) r(nx + a, nx + b, nx + c, nx + d) = y.r(a, b, c, d);
  return CurvatureModel(std::move(g), std::move(r));
}

}  // namespace chordweight
