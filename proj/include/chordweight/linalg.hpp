#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace chordweight {

/// Dense row-major rational matrix. Small sizes only (d <= ~40).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const std::vector<Rational>& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }
  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Rational trace(const Matrix& m) {
  Rational t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

inline Rational determinant(Matrix m) {
  if (!m.square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// Exact inverse; std::nullopt when singular.
inline std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw InputError("matrix is singular");
  return *inv;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix by congruence diagonalisation (Sylvester).
inline Signature signature(Matrix m) {
  if (!m.is_symmetric()) throw InputError("signature of non-symmetric matrix");
  const std::size_t n = m.rows();
  Signature sig;
  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, sel) == 0) ++sel;
      if (sel < n) {
        swap_index(k, sel);
      } else {
        // all remaining diagonal entries vanish; e_k + e_j turns an off-diagonal entry into a pivot
        std::size_t j = k + 1;
        while (j < n && m(k, j) == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) m(k, c) += m(j, c);
        for (std::size_t r = 0; r < n; ++r) m(r, k) += m(r, j);
      }
    }
    const Rational pivot = m(k, k);
    (pivot > 0 ? sig.positive : sig.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      for (std::size_t r = k; r < n; ++r) m(r, i) -= factor * m(r, k);
    }
  }
  return sig;
}

/// A linearly independent family of vectors with exact coordinate solves.
/// Vectors are added greedily; dependent ones are rejected.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<std::vector<Rational>>& vectors() const { return basis_; }

  /// Adds v if it is independent of the current family; returns whether it was added.
  bool add(const std::vector<Rational>& v) {
    if (v.size() != ambient_) throw InputError("vector length mismatch");
    if (coordinates(v)) return false;
    basis_.push_back(v);
    return true;
  }

  /// Coordinates of v in the current family, or nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw InputError("vector length mismatch");
    const std::size_t k = basis_.size();
    Matrix aug(ambient_, k + 1);
    for (std::size_t r = 0; r < ambient_; ++r) {
      for (std::size_t c = 0; c < k; ++c) aug(r, c) = basis_[c][r];
      aug(r, k) = v[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    std::vector<Rational> coords(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = aug(i, k);
    return coords;
  }

private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> basis_;
};

inline std::vector<Rational> flatten(const Matrix& m) { return m.data(); }

inline Matrix unflatten(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

}  // namespace chordweight
