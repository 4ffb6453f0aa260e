#pragma once

#include <cstddef>
#include <cstdint>

#include "diagram_space.hpp"
#include "diagrams.hpp"
#include "rational.hpp"

namespace chordweight {

/// sum over s of (-1)^{|s|} N^{c(D_s)}, |s| = number of -1 chords.
inline Rational yamada_weight(const ChordDiagram& d, const Rational& N = 3) {
  const std::size_t n = d.chords();
  if (n >= 63) throw InputError("too many chords for a state sum");
  SmoothingAssignment s;
  s.signs.resize(n);
  Rational total;
  Rational power;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t c = 0; c < n; ++c) s.signs[c] = (mask >> c & 1U) ? -1 : 1;
    const unsigned long c = smooth_components(d, s);
    mpz_pow_ui(power.get_num_mpz_t(), N.get_num_mpz_t(), c);
    mpz_pow_ui(power.get_den_mpz_t(), N.get_den_mpz_t(), c);
    power.canonicalize();
    if (s.minus_count() % 2 == 0)
      total += power;
    else
      total -= power;
  }
  return total;
}

inline Rational yamada_weight(const DiagramSum& v, const Rational& N = 3) {
  Rational total;
  for (const auto& [d, c] : v) total += c * yamada_weight(d, N);
  return total;
}

}  // namespace chordweight
