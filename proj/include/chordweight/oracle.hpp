#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here goes through ChordDiagram canonicalization or SparseEchelon.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "diagram_space.hpp"
#include "rational.hpp"

namespace chordweight::oracle {

using RawMatching = std::vector<std::size_t>;

/// All (2n-1)!! perfect matchings of 2n points.
inline std::vector<RawMatching> all_matchings(std::size_t n) {
  std::vector<RawMatching> out;
  RawMatching m(2 * n, 2 * n);
  auto rec = [&](auto&& self) -> void {
    std::size_t p = 0;
    while (p < m.size() && m[p] != m.size()) ++p;
    if (p == m.size()) {
      out.push_back(m);
      return;
    }
    for (std::size_t q = p + 1; q < m.size(); ++q) {
      if (m[q] != m.size()) continue;
      m[p] = q;
      m[q] = p;
      self(self);
      m[p] = m[q] = m.size();
    }
  };
  rec(rec);
  return out;
}

inline RawMatching rotate(const RawMatching& m, std::size_t r) {
  const std::size_t len = m.size();
  RawMatching out(len);
  for (std::size_t i = 0; i < len; ++i) out[(i + len - r) % len] = (m[i] + len - r) % len;
  return out;
}

/// Orbit key: the lexicographically smallest rotated matching vector.
inline RawMatching orbit_key(const RawMatching& m) {
  RawMatching best = m;
  for (std::size_t r = 1; r < m.size(); ++r) best = std::min(best, rotate(m, r));
  return best;
}

/// Rotation orbits of matchings on 2n points, by brute force.
inline std::vector<RawMatching> orbit_representatives(std::size_t n) {
  std::set<RawMatching> keys;
  for (const auto& m : all_matchings(n)) keys.insert(orbit_key(m));
  return {keys.begin(), keys.end()};
}

inline std::size_t orbit_count(std::size_t n) { return orbit_representatives(n).size(); }

/// Rank of a dense rational matrix by Bareiss fraction-free elimination over the integers.
inline std::size_t dense_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    Integer l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> ir(cols);
    for (std::size_t c = 0; c < cols; ++c) ir[c] = r[c].get_num() * (l / r[c].get_den());
    a.push_back(std::move(ir));
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Four-term vectors built from every raw matching (not only canonical ones),
/// as dense rows over the orbit representatives.
inline std::vector<std::vector<Rational>> four_term_rows(std::size_t n, const std::map<RawMatching, std::size_t>& column) {
  std::vector<std::vector<Rational>> rows;
  if (n < 2) return rows;
  for (const auto& m : all_matchings(n)) {
    const std::size_t len = m.size();
    for (std::size_t p = 0; p < len; ++p) {
      // the other points in cyclic order starting after p
      std::vector<std::size_t> rest;
      for (std::size_t i = 1; i < len; ++i) rest.push_back((p + i) % len);
      for (std::size_t v = 0; v < len; ++v) {
        if (v == p || v == m[p] || v > m[v]) continue;
        std::vector<Rational> row(column.size());
        const std::size_t targets[2] = {v, m[v]};
        int sign = 1;
        for (std::size_t t : targets)
          for (std::size_t after = 0; after < 2; ++after) {
            std::vector<std::size_t> order = rest;
            auto it = std::find(order.begin(), order.end(), t);
            order.insert(it + static_cast<std::ptrdiff_t>(after), p);
            // order[k] is the old point now sitting at position k
            std::vector<std::size_t> pos(len);
            for (std::size_t k = 0; k < len; ++k) pos[order[k]] = k;
            RawMatching moved(len);
            for (std::size_t x = 0; x < len; ++x) moved[pos[x]] = pos[m[x]];
            row[column.at(orbit_key(moved))] += sign;
            sign = -sign;
          }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

/// dim of the degree-n quotient computed with dense elimination.
inline std::size_t quotient_dimension(std::size_t n, Framing framing) {
  const auto reps = orbit_representatives(n);
  std::map<RawMatching, std::size_t> column;
  for (std::size_t i = 0; i < reps.size(); ++i) column.emplace(reps[i], i);
  auto rows = four_term_rows(n, column);
  if (framing == Framing::unframed)
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& m = reps[i];
      bool isolated = false;
      for (std::size_t p = 0; p < m.size(); ++p) isolated |= m[p] == (p + 1) % m.size();
      if (!isolated) continue;
      std::vector<Rational> row(reps.size());
      row[i] = 1;
      rows.push_back(std::move(row));
    }
  return reps.size() - dense_rank(rows);
}

}  // namespace chordweight::oracle
