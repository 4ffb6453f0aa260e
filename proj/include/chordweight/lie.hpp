#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace chordweight {

/// Structure constants f^k_{ij} of a bracket [e_i, e_j] = sum_k f^k_{ij} e_k.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), f_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return f_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return f_[(i * dim_ + j) * dim_ + k]; }

  bool is_zero() const {
    for (const auto& q : f_)
      if (q != 0) return false;
    return true;
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Rational> f_;
};

/// Lie algebra in a fixed basis with a symmetric invariant form B.
struct MetrizedLieAlgebra {
  StructureConstants bracket;
  Matrix form;

  std::size_t dim() const { return bracket.dim(); }
};

/// rho_i = rho(e_i) acting on V; (rho_i)(b, a) is the coefficient of e_b in rho_i(e_a).
struct Representation {
  MetrizedLieAlgebra algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> matrices;
};

/// Dense rank-3 array, used for Y^{ijk}.
class Tensor3 {
public:
  explicit Tensor3(std::size_t dim) : dim_(dim), v_(dim * dim * dim) {}
  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return v_[(i * dim_ + j) * dim_ + k]; }
  bool is_zero() const {
    for (const auto& q : v_)
      if (q != 0) return false;
    return true;
  }

private:
  std::size_t dim_;
  std::vector<Rational> v_;
};

inline CheckResult check_antisymmetry(const StructureConstants& f) {
  const std::size_t m = f.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (f(i, j, k) != -f(j, i, k)) return CheckResult::fail("bracket antisymmetry", {i, j, k});
  return CheckResult::pass();
}

/// sum_x f^x_{ij} f^l_{xk} + f^x_{jk} f^l_{xi} + f^x_{ki} f^l_{xj} = 0, witness (i,j,k,l).
inline CheckResult check_jacobi(const StructureConstants& f) {
  const std::size_t m = f.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Rational s;
          for (std::size_t x = 0; x < m; ++x) s += f(i, j, x) * f(x, k, l) + f(j, k, x) * f(x, i, l) + f(k, i, x) * f(x, j, l);
          if (s != 0) return CheckResult::fail("Jacobi identity", {i, j, k, l});
        }
  return CheckResult::pass();
}

/// B([z,x],y) + B(x,[z,y]) = 0, witness (z,x,y).
inline CheckResult check_form_invariance(const StructureConstants& f, const Matrix& form) {
  const std::size_t m = f.dim();
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Rational s;
        for (std::size_t k = 0; k < m; ++k) s += f(z, x, k) * form(k, y) + f(z, y, k) * form(x, k);
        if (s != 0) return CheckResult::fail("ad-invariance of the form", {z, x, y});
      }
  return CheckResult::pass();
}

/// Antisymmetry, Jacobi, and a symmetric non-degenerate ad-invariant form.
inline CheckResult validate_algebra(const MetrizedLieAlgebra& lie) {
  const std::size_t m = lie.dim();
  if (lie.form.rows() != m || lie.form.cols() != m) throw InputError("form shape does not match algebra dimension");
  if (auto r = check_antisymmetry(lie.bracket); !r) return r;
  if (auto r = check_jacobi(lie.bracket); !r) return r;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (lie.form(i, j) != lie.form(j, i)) return CheckResult::fail("form symmetry", {i, j});
  if (determinant(lie.form) == 0) return CheckResult::fail("form is degenerate");
  return check_form_invariance(lie.bracket, lie.form);
}

/// rho([e_i,e_j]) = [rho_i, rho_j], witness (i,j).
inline CheckResult validate_representation(const Representation& rep) {
  const std::size_t m = rep.algebra.dim();
  if (rep.matrices.size() != m) throw InputError("representation needs one matrix per basis element");
  for (const auto& mat : rep.matrices)
    if (mat.rows() != rep.dim_v || mat.cols() != rep.dim_v) throw InputError("representation matrix has wrong shape");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix lhs(rep.dim_v, rep.dim_v);
      for (std::size_t k = 0; k < m; ++k)
        if (rep.algebra.bracket(i, j, k) != 0) lhs = lhs + rep.algebra.bracket(i, j, k) * rep.matrices[k];
      if (!(lhs == commutator(rep.matrices[i], rep.matrices[j])))
        return CheckResult::fail("representation bracket compatibility", {i, j});
    }
  return CheckResult::pass();
}

/// C = B^{-1}; throws on a singular form.
inline Matrix casimir(const MetrizedLieAlgebra& lie) {
  auto c = try_inverse(lie.form);
  if (!c) throw InputError("invariant form is singular; no Casimir tensor");
  return *c;
}

/// rho(C)^{bd}_{ac} = sum_{ij} C^{ij} (rho_i)^b_a (rho_j)^d_c.
inline WeightTensor weight_tensor_of_rep(const Representation& rep) {
  const Matrix c = casimir(rep.algebra);
  const std::size_t m = rep.algebra.dim();
  const std::size_t n = rep.dim_v;
  if (n == 0) throw InputError("representation space has dimension zero");
  WeightTensor h(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& cij = c(i, j);
      if (cij == 0) continue;
      const Matrix& ri = rep.matrices[i];
      const Matrix& rj = rep.matrices[j];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (ri(b, a) == 0) continue;
          const Rational left = cij * ri(b, a);
          for (std::size_t cc = 0; cc < n; ++cc)
            for (std::size_t d = 0; d < n; ++d)
              if (rj(d, cc) != 0) h(a, b, cc, d) += left * rj(d, cc);
        }
    }
  return h;
}

/// Y^{ijk} = sum_{a,b} C^{ia} C^{jb} f^k_{ab}.
inline Tensor3 structure_tensor(const MetrizedLieAlgebra& lie) {
  const Matrix c = casimir(lie);
  const std::size_t m = lie.dim();
  Tensor3 y(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Rational s;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) s += c(i, a) * c(j, b) * lie.bracket(a, b, k);
        y(i, j, k) = s;
      }
  return y;
}

/// Checks
///   rho(C)^{xf}_{ae} rho(C)^{bd}_{xc} - rho(C)^{xd}_{ac} rho(C)^{bf}_{xe}
///     = rho(Y)^{bdf}_{ace}
///     = rho(C)^{bx}_{ac} rho(C)^{df}_{xe} - rho(C)^{bd}_{ax} rho(C)^{xf}_{ce}
/// entrywise; witness is (a,b,c,d,e,f).
inline CheckResult check_structure_tensor_identity(const Representation& rep) {
  const WeightTensor p = weight_tensor_of_rep(rep);
  const Tensor3 y = structure_tensor(rep.algebra);
  const std::size_t m = rep.algebra.dim();
  const std::size_t n = rep.dim_v;
  const auto& rho = rep.matrices;

  // rho(Y) as a dense 6-index array, (a,b,c,d,e,f) order
  std::vector<Rational> rho_y(n * n * n * n * n * n);
  auto idx6 = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e, std::size_t f) {
    return ((((a * n + b) * n + c) * n + d) * n + e) * n + f;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (y(i, j, k) == 0) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (rho[i](b, a) == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
              for (std::size_t d = 0; d < n; ++d) {
                if (rho[j](d, c) == 0) continue;
                const Rational partial = y(i, j, k) * rho[i](b, a) * rho[j](d, c);
                for (std::size_t e = 0; e < n; ++e)
                  for (std::size_t f = 0; f < n; ++f)
                    if (rho[k](f, e) != 0) rho_y[idx6(a, b, c, d, e, f)] += partial * rho[k](f, e);
              }
          }
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t f = 0; f < n; ++f) {
              Rational left;
              Rational right;
              for (std::size_t x = 0; x < n; ++x) {
                left += p(a, x, e, f) * p(x, b, c, d) - p(a, x, c, d) * p(x, b, e, f);
                right += p(a, b, c, x) * p(x, d, e, f) - p(a, b, x, d) * p(c, x, e, f);
              }
              const Rational& middle = rho_y[idx6(a, b, c, d, e, f)];
              if (left != middle) return CheckResult::fail("left equality (commutator = rho(Y))", {a, b, c, d, e, f});
              if (right != middle) return CheckResult::fail("right equality (rho(Y) = commutator)", {a, b, c, d, e, f});
            }
  return CheckResult::pass();
}

/// Structure constants of a family of linearly independent matrices closed
/// under commutators. Returns nullopt if some commutator leaves the span.
inline std::optional<StructureConstants> bracket_from_matrices(const std::vector<Matrix>& basis) {
  const std::size_t m = basis.size();
  StructureConstants f(m);
  if (m == 0) return f;
  SpanBasis span(basis.front().rows() * basis.front().cols());
  for (const auto& b : basis)
    if (!span.add(flatten(b))) throw InputError("matrix basis is linearly dependent");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto coords = span.coordinates(flatten(commutator(basis[i], basis[j])));
      if (!coords) return std::nullopt;
      for (std::size_t k = 0; k < m; ++k) f(i, j, k) = (*coords)[k];
    }
  return f;
}

/// B(x_i, x_j) = scale * Tr(x_i x_j).
inline Matrix trace_form(const std::vector<Matrix>& basis, const Rational& scale) {
  Matrix b(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) b(i, j) = scale * trace(basis[i] * basis[j]);
  return b;
}

inline Representation matrix_representation(std::vector<Matrix> basis, const Rational& trace_scale) {
  auto f = bracket_from_matrices(basis);
  if (!f) throw InputError("matrix family is not closed under commutators");
  Representation rep;
  rep.algebra.bracket = std::move(*f);
  rep.algebra.form = trace_form(basis, trace_scale);
  rep.dim_v = basis.empty() ? 0 : basis.front().rows();
  rep.matrices = std::move(basis);
  return rep;
}

/// sl2 in the basis (H, E, F) with B(x,y) = Tr(xy), standard 2-dim module.
inline Representation builtin_sl2() {
  std::vector<Matrix> basis{Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}};
  return matrix_representation(std::move(basis), 1);
}

/// so_n in the basis L_{ij} = E_{ij} - E_{ji} (i < j, lexicographic) with
/// B(x,y) = 1/2 Tr(xy), standard n-dim module.
inline Representation builtin_so(std::size_t n) {
  if (n < 2) throw InputError("so_n needs n >= 2");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix l(n, n);
      l(i, j) = 1;
      l(j, i) = -1;
      basis.push_back(std::move(l));
    }
  return matrix_representation(std::move(basis), Rational(1, 2));
}

/// Abelian m-dim algebra with B = I acting by zero on a dim_v-dim space.
inline Representation builtin_abelian(std::size_t m, std::size_t dim_v = 1) {
  Representation rep;
  rep.algebra.bracket = StructureConstants(m);
  rep.algebra.form = Matrix::identity(m);
  rep.dim_v = dim_v;
  rep.matrices.assign(m, Matrix(dim_v, dim_v));
  return rep;
}

/// Names: "sl2", "sl2_standard", "soN", "so_n_standard(N)", "abelianM", "abelian(M)".
inline Representation builtin(const std::string& name) {
  std::smatch match;
  if (name == "sl2" || name == "sl2_standard") return builtin_sl2();
  static const std::regex so_re(R"(so(\d+)|so_n_standard\((\d+)\))");
  static const std::regex ab_re(R"(abelian(\d+)|abelian\((\d+)\))");
  if (std::regex_match(name, match, so_re))
    return builtin_so(std::stoul(match[1].matched ? match[1].str() : match[2].str()));
  if (std::regex_match(name, match, ab_re))
    return builtin_abelian(std::stoul(match[1].matched ? match[1].str() : match[2].str()));
  throw InputError("unknown builtin representation '" + name + "'");
}

/// True iff the map sending e_i to column i of t is a bracket isomorphism a -> b.
inline bool is_isomorphism(const StructureConstants& a, const StructureConstants& b, const Matrix& t) {
  const std::size_t m = a.dim();
  if (b.dim() != m || t.rows() != m || t.cols() != m) return false;
  if (determinant(t) == 0) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r) {
        Rational image;
        for (std::size_t k = 0; k < m; ++k) image += a(i, j, k) * t(r, k);
        Rational bracket;
        for (std::size_t p = 0; p < m; ++p) {
          if (t(p, i) == 0) continue;
          for (std::size_t q = 0; q < m; ++q)
            if (t(q, j) != 0) bracket += t(p, i) * t(q, j) * b(p, q, r);
        }
        if (image != bracket) return false;
      }
  return true;
}

/// When both algebras are realized by matrices on the same space and span the
/// same subspace, the inclusion is an isomorphism; returns its coordinate matrix.
inline std::optional<Matrix> span_isomorphism(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  if (a.front().rows() != b.front().rows() || a.front().cols() != b.front().cols()) return std::nullopt;
  SpanBasis span(b.front().rows() * b.front().cols());
  for (const auto& x : b)
    if (!span.add(flatten(x))) return std::nullopt;
  Matrix t(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto coords = span.coordinates(flatten(a[i]));
    if (!coords) return std::nullopt;
    for (std::size_t r = 0; r < a.size(); ++r) t(r, i) = (*coords)[r];
  }
  return t;
}

/// Searches a small catalogue of basis changes for an isomorphism a -> b:
/// the explicit candidates first, then a global scale in {1, 2, 1/2, 3, 1/3}
/// composed with a signed permutation (dimension <= 5 only).
inline std::optional<Matrix> find_isomorphism(const StructureConstants& a, const StructureConstants& b,
                                              const std::vector<Matrix>& candidates = {}) {
  const std::size_t m = a.dim();
  if (b.dim() != m) return std::nullopt;
  for (const auto& t : candidates)
    if (is_isomorphism(a, b, t)) return t;
  if (m == 0) return Matrix();
  if (m > 5) return std::nullopt;

  const std::array<Rational, 5> scales{Rational(1), Rational(2), Rational(1, 2), Rational(3), Rational(1, 3)};
  std::vector<std::size_t> perm(m);
  for (const auto& s : scales) {
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    do {
      for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
        Matrix t(m, m);
        for (std::size_t i = 0; i < m; ++i) t(perm[i], i) = (signs >> i & 1U) ? -s : s;
        if (is_isomorphism(a, b, t)) return t;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace chordweight
