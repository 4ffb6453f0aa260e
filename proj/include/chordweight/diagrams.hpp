#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "formal_sum.hpp"
#include "rational.hpp"

namespace chordweight {

/// Default ceiling on chord counts for exhaustive enumeration; (2n-1)!! matchings are visited.
inline constexpr std::size_t kDefaultMaxChords = 8;

namespace detail {

inline void check_matching(std::span<const std::size_t> m) {
  if (m.size() % 2 != 0) throw InputError("matching has odd length " + std::to_string(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= m.size()) throw InputError("matching entry out of range at position " + std::to_string(i));
    if (m[i] == i) throw InputError("matching has a fixed point at position " + std::to_string(i));
    if (m[m[i]] != i) throw InputError("matching is not an involution at position " + std::to_string(i));
  }
}

// First-occurrence chord labels of the matching read from position `start`.
inline void label_code(std::span<const std::size_t> m, std::size_t start, std::vector<std::size_t>& code) {
  const std::size_t len = m.size();
  code.assign(len, 0);
  std::vector<std::size_t> label(len, len);
  std::size_t next = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t pos = (start + i) % len;
    if (label[pos] == len) {
      label[pos] = next;
      label[m[pos]] = next;
      ++next;
    }
    code[i] = label[pos];
  }
}

inline std::vector<std::size_t> rotate_matching(std::span<const std::size_t> m, std::size_t r) {
  const std::size_t len = m.size();
  std::vector<std::size_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = (m[(i + r) % len] + len - r) % len;
  return out;
}

}  // namespace detail

/// A chord diagram on an oriented circle, stored in canonical form: the
/// rotation whose first-occurrence label code is lexicographically minimal.
/// Reflections are not quotiented out.
class ChordDiagram {
public:
  /// The empty diagram (bare circle).
  ChordDiagram() = default;

  /// Canonicalizes an arbitrary fixed-point-free involution.
  static ChordDiagram from_matching(std::span<const std::size_t> raw) {
    detail::check_matching(raw);
    const std::size_t len = raw.size();
    if (len == 0) return {};
    std::vector<std::size_t> best;
    std::vector<std::size_t> code;
    std::size_t best_rot = 0;
    for (std::size_t r = 0; r < len; ++r) {
      detail::label_code(raw, r, code);
      if (best.empty() || code < best) {
        best = code;
        best_rot = r;
      }
    }
    ChordDiagram d;
    d.matching_ = detail::rotate_matching(raw, best_rot);
    return d;
  }
  static ChordDiagram from_matching(std::initializer_list<std::size_t> raw) {
    const std::vector<std::size_t> v(raw);
    return from_matching(std::span<const std::size_t>(v));
  }

  /// Builds a diagram from a cyclic sequence of chord labels where each label occurs twice.
  template <typename Label>
  static ChordDiagram from_labels(std::span<const Label> labels) {
    const std::size_t len = labels.size();
    std::vector<std::size_t> m(len, len);
    for (std::size_t i = 0; i < len; ++i) {
      if (m[i] != len) continue;
      std::size_t j = i + 1;
      while (j < len && !(labels[j] == labels[i])) ++j;
      if (j == len) throw InputError("chord label at position " + std::to_string(i) + " occurs once");
      m[i] = j;
      m[j] = i;
    }
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < len; ++j) count += labels[j] == labels[i];
      if (count != 2) throw InputError("chord label at position " + std::to_string(i) + " does not occur exactly twice");
    }
    return from_matching(std::span<const std::size_t>(m));
  }

  /// Parses a letter code such as "ABAB". Any letters may be used; each must occur twice.
  static ChordDiagram parse(std::string_view code) {
    for (std::size_t i = 0; i < code.size(); ++i) {
      const char c = code[i];
      if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')))
        throw InputError("diagram code must consist of letters, got '" + std::string(code) + "'");
    }
    return from_labels(std::span<const char>(code.data(), code.size()));
  }

  std::size_t chords() const { return matching_.size() / 2; }
  std::size_t points() const { return matching_.size(); }
  bool empty() const { return matching_.empty(); }
  const std::vector<std::size_t>& matching() const { return matching_; }
  std::size_t partner(std::size_t p) const { return matching_[p]; }

  /// Chords as (p, q) with p < q, ordered by first endpoint.
  std::vector<std::pair<std::size_t, std::size_t>> chord_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < matching_.size(); ++p)
      if (p < matching_[p]) out.emplace_back(p, matching_[p]);
    return out;
  }

  /// First-occurrence labels of the canonical form, 0-based.
  std::vector<std::size_t> labels() const {
    std::vector<std::size_t> code;
    detail::label_code(matching_, 0, code);
    return code;
  }

  /// Canonical letter code ("" for the empty diagram, "AA" for one chord).
  std::string code() const {
    static constexpr std::string_view alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    if (chords() > alphabet.size()) throw InputError("too many chords for a letter code");
    std::string s;
    for (std::size_t l : labels()) s += alphabet[l];
    return s;
  }

  /// True if some chord joins two circle-adjacent points.
  bool has_isolated_chord() const {
    const std::size_t len = matching_.size();
    for (std::size_t p = 0; p < len; ++p)
      if (matching_[p] == (p + 1) % len) return true;
    return false;
  }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
    if (auto c = a.matching_.size() <=> b.matching_.size(); c != 0) return c;
    return a.matching_ <=> b.matching_;
  }

private:
  std::vector<std::size_t> matching_;
};

using DiagramPair = std::pair<ChordDiagram, ChordDiagram>;
using DiagramTriple = std::tuple<ChordDiagram, ChordDiagram, ChordDiagram>;

/// Convenience: canonicalize(raw) == ChordDiagram::from_matching(raw).
inline ChordDiagram canonicalize(std::span<const std::size_t> raw) { return ChordDiagram::from_matching(raw); }

/// Every canonical diagram with n chords, in increasing code order.
inline std::vector<ChordDiagram> enumerate_diagrams(std::size_t n, std::size_t max_chords = kDefaultMaxChords) {
  if (n > max_chords)
    throw InputError("enumeration of " + std::to_string(n) + " chords exceeds cap " + std::to_string(max_chords));
  const std::size_t len = 2 * n;
  std::set<ChordDiagram> found;
  std::vector<std::size_t> m(len, len);
  std::vector<std::size_t> code;
  std::vector<std::size_t> other;

  // Keep only matchings already in canonical position: no rotation has a smaller code.
  auto visit = [&]() {
    detail::label_code(m, 0, code);
    for (std::size_t r = 1; r < len; ++r) {
      detail::label_code(m, r, other);
      if (other < code) return;
    }
    found.insert(ChordDiagram::from_matching(std::span<const std::size_t>(m)));
  };

  auto recurse = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < len && m[first] != len) ++first;
    if (first == len) {
      visit();
      return;
    }
    for (std::size_t j = first + 1; j < len; ++j) {
      if (m[j] != len) continue;
      m[first] = j;
      m[j] = first;
      self(self);
      m[first] = len;
      m[j] = len;
    }
  };
  recurse(recurse);
  std::vector<ChordDiagram> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ChordDiagram& x, const ChordDiagram& y) { return x.labels() < y.labels(); });
  return out;
}

/// Sign per chord, indexed in chord_list() order: +1 pass-through, -1 cap-cup.
struct SmoothingAssignment {
  std::vector<int> signs;

  std::size_t minus_count() const {
    return static_cast<std::size_t>(std::count(signs.begin(), signs.end(), -1));
  }
};

/// Number of circles after smoothing every chord of D according to s.
///
/// Each endpoint p carries half-edges in(p) = 2p and out(p) = 2p+1; circle arcs
/// join out(k) to in(k+1). A +1 chord (p,q) joins in(p)-out(q) and in(q)-out(p);
/// a -1 chord joins in(p)-in(q) and out(p)-out(q). Every half-edge then has
/// exactly one arc and one chord neighbour, so components are cycles.
inline std::size_t smooth_components(const ChordDiagram& d, const SmoothingAssignment& s) {
  const auto chords = d.chord_list();
  if (s.signs.size() != chords.size())
    throw InputError("smoothing assignment covers " + std::to_string(s.signs.size()) + " chords, diagram has " +
                     std::to_string(chords.size()));
  const std::size_t len = d.points();
  if (len == 0) return 1;

  std::vector<std::size_t> parent(2 * len);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = 2 * len;
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  auto in = [](std::size_t p) { return 2 * p; };
  auto out = [](std::size_t p) { return 2 * p + 1; };

  for (std::size_t k = 0; k < len; ++k) unite(out(k), in((k + 1) % len));
  for (std::size_t c = 0; c < chords.size(); ++c) {
    const auto [p, q] = chords[c];
    if (s.signs[c] == 1) {
      unite(in(p), out(q));
      unite(in(q), out(p));
    } else if (s.signs[c] == -1) {
      unite(in(p), in(q));
      unite(out(p), out(q));
    } else {
      throw InputError("smoothing sign must be +1 or -1");
    }
  }
  return components;
}

/// Connected sum: the circle of b, opened at arc cut_b, is spliced into arc
/// cut_a of a. Arc k sits between points k-1 and k; cuts range over 0..2n.
inline ChordDiagram product(const ChordDiagram& a, const ChordDiagram& b, std::size_t cut_a, std::size_t cut_b) {
  const std::size_t la = a.points();
  const std::size_t lb = b.points();
  if (cut_a > la) throw InputError("cut " + std::to_string(cut_a) + " out of range for first factor");
  if (cut_b > lb) throw InputError("cut " + std::to_string(cut_b) + " out of range for second factor");

  // labels: chords of a keep their first endpoint as id; chords of b are offset by la
  std::vector<std::size_t> labels;
  labels.reserve(la + lb);
  auto label_a = [&](std::size_t p) { return std::min(p, a.partner(p)); };
  auto label_b = [&](std::size_t p) { return la + std::min(p, b.partner(p)); };
  for (std::size_t p = 0; p < cut_a; ++p) labels.push_back(label_a(p));
  for (std::size_t i = 0; i < lb; ++i) labels.push_back(label_b((cut_b + i) % lb));
  for (std::size_t p = cut_a; p < la; ++p) labels.push_back(label_a(p));
  return ChordDiagram::from_labels(std::span<const std::size_t>(labels));
}

inline ChordDiagram product(const ChordDiagram& a, const ChordDiagram& b) { return product(a, b, 0, 0); }

/// Sub-diagram keeping only the chords whose bit is set in `mask` (chord_list order).
inline ChordDiagram restrict_chords(const ChordDiagram& d, std::uint64_t mask) {
  const auto chords = d.chord_list();
  std::vector<std::size_t> keep_label(d.points(), d.points());
  for (std::size_t c = 0; c < chords.size(); ++c)
    if (mask >> c & 1U) {
      keep_label[chords[c].first] = c;
      keep_label[chords[c].second] = c;
    }
  std::vector<std::size_t> labels;
  for (std::size_t p = 0; p < d.points(); ++p)
    if (keep_label[p] != d.points()) labels.push_back(keep_label[p]);
  return ChordDiagram::from_labels(std::span<const std::size_t>(labels));
}

/// Sum over all chord subsets J of D_J (x) D_{complement of J}.
inline FormalSum<DiagramPair> coproduct(const ChordDiagram& d) {
  const std::size_t n = d.chords();
  if (n >= 63) throw InputError("coproduct of a diagram with too many chords");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  FormalSum<DiagramPair> out;
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    out.add({restrict_chords(d, mask), restrict_chords(d, full & ~mask)}, 1);
  return out;
}

}  // namespace chordweight
