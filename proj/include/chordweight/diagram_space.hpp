#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagrams.hpp"
#include "formal_sum.hpp"
#include "sparse_rank.hpp"

namespace chordweight {

using DiagramSum = FormalSum<ChordDiagram>;

enum class Framing { framed, unframed };

inline std::string to_string(Framing f) { return f == Framing::framed ? "framed" : "unframed"; }

enum class RelationKind { four_term, four_term_and_one_term };

struct RelationSet {
  std::size_t n = 0;
  RelationKind kind = RelationKind::four_term;
  std::vector<DiagramSum> vectors;
};

namespace detail {

// Reinserts the endpoint `moving` (removed from the cycle, read starting right
// after it) next to an endpoint of chord `target`. slot 0/1: before/after the
// first occurrence, slot 2/3: before/after the second.
inline ChordDiagram move_endpoint(const std::vector<std::size_t>& cycle_labels, std::size_t moving_label,
                                  std::size_t target_label, int slot) {
  std::size_t first = cycle_labels.size();
  std::size_t second = cycle_labels.size();
  for (std::size_t i = 0; i < cycle_labels.size(); ++i)
    if (cycle_labels[i] == target_label) (first == cycle_labels.size() ? first : second) = i;
  const std::size_t anchor = slot < 2 ? first : second;
  const std::size_t at = anchor + (slot % 2);
  std::vector<std::size_t> labels(cycle_labels);
  labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(at), moving_label);
  return ChordDiagram::from_labels(std::span<const std::size_t>(labels));
}

}  // namespace detail

/// Four-term relation vectors of degree n (over-generated).
///
/// For each diagram, ordered pair of distinct chords (u, v) and endpoint p of u,
/// p is removed and reinserted immediately before/after each endpoint of v
/// (walking the circle in its orientation), with signs +, -, +, -.
inline RelationSet generate_4t(std::size_t n, std::size_t max_chords = kDefaultMaxChords) {
  RelationSet out{n, RelationKind::four_term, {}};
  if (n < 2) return out;
  for (const auto& d : enumerate_diagrams(n, max_chords)) {
    const std::size_t len = d.points();
    const auto labels = d.labels();
    for (std::size_t p = 0; p < len; ++p) {
      const std::size_t u = labels[p];
      std::vector<std::size_t> cycle;
      cycle.reserve(len - 1);
      for (std::size_t i = 1; i < len; ++i) cycle.push_back(labels[(p + i) % len]);
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u) continue;
        DiagramSum rel;
        rel.add(detail::move_endpoint(cycle, u, v, 0), 1);
        rel.add(detail::move_endpoint(cycle, u, v, 1), -1);
        rel.add(detail::move_endpoint(cycle, u, v, 2), 1);
        rel.add(detail::move_endpoint(cycle, u, v, 3), -1);
        if (!rel.empty()) out.vectors.push_back(std::move(rel));
      }
    }
  }
  return out;
}

/// One singleton vector per n-chord diagram containing an isolated chord.
inline RelationSet generate_1t(std::size_t n, std::size_t max_chords = kDefaultMaxChords) {
  RelationSet out{n, RelationKind::four_term_and_one_term, {}};
  if (n < 1) return out;
  for (const auto& d : enumerate_diagrams(n, max_chords))
    if (d.has_isolated_chord()) out.vectors.emplace_back(d, 1);
  return out;
}

/// The span of the degree-n relations inside the free span of n-chord
/// diagrams, held in fraction-free sparse echelon form.
class RelationSpan {
public:
  RelationSpan(std::size_t n, Framing framing, std::size_t max_chords = kDefaultMaxChords)
      : n_(n), framing_(framing), diagrams_(enumerate_diagrams(n, max_chords)) {
    for (std::size_t i = 0; i < diagrams_.size(); ++i) index_.emplace(diagrams_[i], i);
    for (const auto& v : generate_4t(n, max_chords).vectors) echelon_.insert_rational(to_row(v));
    if (framing == Framing::unframed)
      for (const auto& v : generate_1t(n, max_chords).vectors) echelon_.insert_rational(to_row(v));
  }

  std::size_t degree() const { return n_; }
  Framing framing() const { return framing_; }
  const std::vector<ChordDiagram>& diagrams() const { return diagrams_; }
  std::size_t relation_rank() const { return echelon_.rank(); }
  std::size_t quotient_dimension() const { return diagrams_.size() - echelon_.rank(); }

  /// Membership of a homogeneous degree-n sum in the relation span.
  bool contains(const DiagramSum& v) const {
    for (const auto& [d, c] : v)
      if (d.chords() != n_) throw InputError("formal sum is not homogeneous of degree " + std::to_string(n_));
    return echelon_.contains_rational(to_row(v));
  }

  std::size_t column(const ChordDiagram& d) const { return index_.at(d); }

private:
  std::vector<std::pair<std::size_t, Rational>> to_row(const DiagramSum& v) const {
    std::vector<std::pair<std::size_t, Rational>> row;
    row.reserve(v.size());
    for (const auto& [d, c] : v) row.emplace_back(index_.at(d), c);
    return row;
  }

  std::size_t n_;
  Framing framing_;
  std::vector<ChordDiagram> diagrams_;
  std::map<ChordDiagram, std::size_t> index_;
  SparseEchelon echelon_;
};

/// dim of span(A_n) modulo the 4T (framed) or 4T+1T (unframed) relations.
inline std::size_t quotient_dimension(std::size_t n, Framing framing, std::size_t max_chords = kDefaultMaxChords) {
  return RelationSpan(n, framing, max_chords).quotient_dimension();
}

/// Whether v lies in the relation span of its degree. v must be homogeneous.
inline bool in_relation_span(const DiagramSum& v, Framing framing, std::size_t max_chords = kDefaultMaxChords) {
  if (v.empty()) return true;
  const std::size_t n = v.begin()->first.chords();
  for (const auto& [d, c] : v)
    if (d.chords() != n) throw InputError("formal sum mixes degrees " + std::to_string(n) + " and " + std::to_string(d.chords()));
  return RelationSpan(n, framing, max_chords).contains(v);
}

}  // namespace chordweight
