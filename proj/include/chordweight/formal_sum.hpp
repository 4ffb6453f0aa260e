#pragma once

#include <map>
#include <utility>

#include "rational.hpp"

namespace chordweight {

/// Finite rational linear combination of keys. Zero coefficients are never stored.
template <typename Key>
class FormalSum {
public:
  using Terms = std::map<Key, Rational>;

  FormalSum() = default;
  explicit FormalSum(const Key& key, const Rational& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Rational& s, FormalSum a) { return a *= s; }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

}  // namespace chordweight
