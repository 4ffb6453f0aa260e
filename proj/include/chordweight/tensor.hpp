#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diagram_space.hpp"
#include "diagrams.hpp"
#include "rational.hpp"

namespace chordweight {

/// H in End(V) (x) End(V), stored densely as H(a, b, c, d) = H^{bd}_{ac}:
/// leg 1 maps input a to output b, leg 2 maps input c to output d.
class WeightTensor {
public:
  WeightTensor() = default;
  explicit WeightTensor(std::size_t dim) : dim_(dim), entries_(dim * dim * dim * dim) {
    if (dim == 0) throw InputError("weight tensor dimension must be positive");
  }

  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return entries_[index(a, b, c, d)]; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return entries_[index(a, b, c, d)];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& q : entries_)
      if (q != 0) return false;
    return true;
  }

  /// The tensor with its two legs exchanged.
  WeightTensor swapped_legs() const {
    WeightTensor t(dim_);
    for_each_index([&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) { t(a, b, c, d) = (*this)(c, d, a, b); });
    return t;
  }

  template <typename F>
  void for_each_index(F&& f) const {
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        for (std::size_t c = 0; c < dim_; ++c)
          for (std::size_t d = 0; d < dim_; ++d) f(a, b, c, d);
  }

  friend bool operator==(const WeightTensor&, const WeightTensor&) = default;

private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return ((a * dim_ + b) * dim_ + c) * dim_ + d;
  }

  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Leg-swap symmetry H^{bd}_{ac} = H^{db}_{ca}.
inline CheckResult validate_symmetry(const WeightTensor& h) {
  const std::size_t n = h.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (h(a, b, c, d) != h(c, d, a, b)) return CheckResult::fail("leg-swap symmetry", {a, b, c, d});
  return CheckResult::pass();
}

/// Tensor-level four-term identity
///   H^{fx}_{ea} H^{bd}_{xc} - H^{fb}_{ex} H^{xd}_{ac} + H^{fx}_{ec} H^{bd}_{ax} - H^{fd}_{ex} H^{bx}_{ac} = 0
/// for all (a,b,c,d,e,f); the witness is reported in that order.
inline CheckResult check_4t_tensor(const WeightTensor& h) {
  const std::size_t n = h.dim();
  Rational sum;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t f = 0; f < n; ++f) {
              sum = 0;
              for (std::size_t x = 0; x < n; ++x) {
                sum += h(e, f, a, x) * h(x, b, c, d);
                sum -= h(e, f, x, b) * h(a, x, c, d);
                sum += h(e, f, c, x) * h(a, b, x, d);
                sum -= h(e, f, x, d) * h(a, b, c, x);
              }
              if (sum != 0) return CheckResult::fail("four-term identity", {a, b, c, d, e, f});
            }
  return CheckResult::pass();
}

namespace detail {

// Packs small indices into a 64-bit key, `bits` bits per digit.
class KeyPacker {
public:
  KeyPacker(std::size_t dim, std::size_t max_digits) {
    while ((std::size_t{1} << bits_) < dim) ++bits_;
    if (bits_ * max_digits > 64) throw InputError("contraction state too large for this dimension and chord count");
  }
  std::uint64_t pack(const std::vector<std::size_t>& digits) const {
    std::uint64_t key = 0;
    for (std::size_t d : digits) key = (key << bits_) | d;
    return key;
  }
  void unpack(std::uint64_t key, std::size_t count, std::vector<std::size_t>& digits) const {
    digits.resize(count);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (std::size_t i = count; i-- > 0;) {
      digits[i] = static_cast<std::size_t>(key & mask);
      key >>= bits_;
    }
  }

private:
  std::size_t bits_ = 1;
};

}  // namespace detail

/// Full contraction of H around the circle for an arbitrary (not necessarily
/// canonical) matching, by a sweep over points in circular order.
///
/// Arc k leaves point k and enters point k+1. The state maps
/// (index on arc 2n-1, index on the current arc, (in, out) pair of every open
/// chord in opening order) to a partial sum. Opening a chord records its pair;
/// closing it multiplies by H(in_first, out_first, in_second, out_second).
inline Rational contract(const WeightTensor& h, std::span<const std::size_t> matching) {
  detail::check_matching(matching);
  const std::size_t dim = h.dim();
  const std::size_t len = matching.size();
  if (len == 0) return Rational(dim);

  std::size_t max_open = 0;
  {
    std::size_t open = 0;
    for (std::size_t p = 0; p < len; ++p) {
      open += matching[p] > p ? 1 : 0;
      max_open = std::max(max_open, open);
      open -= matching[p] < p ? 1 : 0;
    }
  }
  const detail::KeyPacker packer(dim, 2 + 2 * max_open);

  // closing position of each open chord, in opening order
  std::vector<std::size_t> open_order;
  std::unordered_map<std::uint64_t, Rational> state;
  for (std::size_t s = 0; s < dim; ++s) state.emplace(packer.pack({s, s}), Rational(1));

  std::vector<std::size_t> digits;
  std::vector<std::size_t> next_digits;
  for (std::size_t p = 0; p < len; ++p) {
    const std::size_t q = matching[p];
    const std::size_t width = 2 + 2 * open_order.size();
    std::unordered_map<std::uint64_t, Rational> next;
    if (q > p) {
      for (const auto& [key, value] : state) {
        packer.unpack(key, width, digits);
        const std::size_t in = digits[1];
        for (std::size_t out = 0; out < dim; ++out) {
          next_digits = digits;
          next_digits[1] = out;
          next_digits.push_back(in);
          next_digits.push_back(out);
          next.emplace(packer.pack(next_digits), value);
        }
      }
      open_order.push_back(q);
    } else {
      std::size_t slot = 0;
      while (open_order[slot] != p) ++slot;
      for (const auto& [key, value] : state) {
        packer.unpack(key, width, digits);
        const std::size_t in = digits[1];
        const std::size_t a = digits[2 + 2 * slot];
        const std::size_t b = digits[3 + 2 * slot];
        for (std::size_t out = 0; out < dim; ++out) {
          const Rational& w = h(a, b, in, out);
          if (w == 0) continue;
          next_digits.clear();
          next_digits.push_back(digits[0]);
          next_digits.push_back(out);
          for (std::size_t i = 2; i < width; ++i)
            if (i != 2 + 2 * slot && i != 3 + 2 * slot) next_digits.push_back(digits[i]);
          auto [it, inserted] = next.try_emplace(packer.pack(next_digits), value * w);
          if (!inserted) it->second += value * w;
        }
      }
      open_order.erase(open_order.begin() + static_cast<std::ptrdiff_t>(slot));
    }
    state = std::move(next);
  }

  Rational total;
  for (const auto& [key, value] : state) {
    packer.unpack(key, 2, digits);
    if (digits[0] == digits[1]) total += value;
  }
  return total;
}

/// w_H(D) by sweep contraction.
inline Rational evaluate(const WeightTensor& h, const ChordDiagram& d) { return contract(h, d.matching()); }

/// Reads CHORDWEIGHT_MAX_WORK, falling back to 10^8 terms.
inline std::uint64_t default_work_bound() {
  if (const char* env = std::getenv("CHORDWEIGHT_MAX_WORK")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 100'000'000ULL;
}

/// w_H(D) as the plain sum over all d^{2n} arc labellings of the product of chord factors.
inline Rational evaluate_naive(const WeightTensor& h, std::span<const std::size_t> matching,
                               std::uint64_t work_bound = default_work_bound()) {
  detail::check_matching(matching);
  const std::size_t dim = h.dim();
  const std::size_t len = matching.size();
  if (len == 0) return Rational(dim);

  std::uint64_t work = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (work > std::numeric_limits<std::uint64_t>::max() / dim) throw InputError("naive evaluation work bound exceeded");
    work *= dim;
  }
  if (work > work_bound)
    throw InputError("naive evaluation needs " + std::to_string(work) + " terms, bound is " + std::to_string(work_bound));

  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (std::size_t p = 0; p < len; ++p)
    if (p < matching[p]) chords.emplace_back(p, matching[p]);

  // arc k leaves point k; in(p) = arc p-1, out(p) = arc p
  std::vector<std::size_t> arc(len, 0);
  Rational total;
  Rational term;
  for (;;) {
    term = 1;
    for (const auto& [p, q] : chords) {
      const Rational& w = h(arc[(p + len - 1) % len], arc[p], arc[(q + len - 1) % len], arc[q]);
      if (w == 0) {
        term = 0;
        break;
      }
      term *= w;
    }
    total += term;
    std::size_t k = 0;
    while (k < len && ++arc[k] == dim) arc[k++] = 0;
    if (k == len) break;
  }
  return total;
}

inline Rational evaluate_naive(const WeightTensor& h, const ChordDiagram& d,
                               std::uint64_t work_bound = default_work_bound()) {
  return evaluate_naive(h, d.matching(), work_bound);
}

/// Linear extension of evaluate to formal sums.
inline Rational evaluate_sum(const WeightTensor& h, const DiagramSum& v) {
  Rational total;
  for (const auto& [d, c] : v) total += c * evaluate(h, d);
  return total;
}

/// Evaluates H once per diagram and reuses the values; for sweeping many relation vectors.
class WeightSystemCache {
public:
  explicit WeightSystemCache(const WeightTensor& h) : h_(h) {}

  const Rational& operator()(const ChordDiagram& d) {
    auto it = values_.find(d);
    if (it == values_.end()) it = values_.emplace(d, evaluate(h_, d)).first;
    return it->second;
  }

  Rational operator()(const DiagramSum& v) {
    Rational total;
    for (const auto& [d, c] : v) total += c * (*this)(d);
    return total;
  }

private:
  const WeightTensor& h_;
  std::map<ChordDiagram, Rational> values_;
};

/// H^{bd}_{ac} = delta^b_a delta^d_c: each chord passes both strands straight through.
inline WeightTensor identity_tensor(std::size_t dim) {
  WeightTensor h(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t c = 0; c < dim; ++c) h(a, a, c, c) = 1;
  return h;
}

}  // namespace chordweight
