#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace chordweight {

/// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Clears denominators of a sparse rational row and divides out the content.
inline SparseRow to_primitive_row(const std::vector<std::pair<std::size_t, Rational>>& entries) {
  Integer lcm = 1;
  for (const auto& [col, q] : entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  SparseRow row;
  row.reserve(entries.size());
  for (const auto& [col, q] : entries) {
    if (q == 0) continue;
    Integer v = q.get_num() * (lcm / q.get_den());
    row.emplace_back(col, std::move(v));
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

/// Row echelon form over the integers built by fraction-free elimination:
/// each incoming row r is reduced against the stored pivot row P sharing its
/// leading column via r <- p*r - r_c*P, then divided by its content. Only
/// leading terms are eliminated, which is enough for rank and membership.
class SparseEchelon {
public:
  /// Inserts a row; returns true if it increased the rank.
  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  bool insert_rational(const std::vector<std::pair<std::size_t, Rational>>& entries) {
    return insert(to_primitive_row(entries));
  }

  /// True iff the row lies in the span of the inserted rows.
  bool contains(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  bool contains_rational(const std::vector<std::pair<std::size_t, Rational>>& entries) const {
    return contains(to_primitive_row(entries));
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  void reduce(SparseRow& row) const {
    while (!row.empty()) {
      const auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return;
      row = combine(row, it->second);
    }
  }

  // p*row - r_c*pivot, made primitive. Leading entry cancels.
  static SparseRow combine(const SparseRow& row, const SparseRow& pivot) {
    const Integer p = pivot.front().second;
    const Integer rc = row.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), rc.get_mpz_t());
    const Integer a = p / g;
    const Integer b = rc / g;

    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        Integer v = a * row[i].second - b * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    Integer content = 0;
    for (const auto& [col, v] : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
      for (auto& [col, v] : out) v /= content;
    return out;
  }

  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace chordweight
