#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chordweight {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed user input (bad rational text, wrong shapes, bad codes).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  std::size_t digits_before = 0;
  std::size_t digits_after = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '/') {
      if (seen_slash) throw InputError("malformed rational '" + std::string(text) + "'");
      seen_slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (seen_slash ? digits_after : digits_before)++;
    } else {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (digits_before == 0 || (seen_slash && digits_after == 0))
    throw InputError("malformed rational '" + std::string(text) + "'");

  std::string body(text[0] == '+' ? text.substr(1) : text);
  Rational value;
  if (seen_slash) {
    const auto slash = body.find('/');
    Integer num(body.substr(0, slash), 10);
    Integer den(body.substr(slash + 1), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else {
    value = Rational(Integer(body, 10));
  }
  value.canonicalize();
  return value;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Outcome of an identity check. On failure `witness` holds the first
/// offending index tuple in lexicographic order.
struct CheckResult {
  bool ok = true;
  std::string what;
  std::vector<std::size_t> witness;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string what, std::vector<std::size_t> witness = {}) {
    return {false, std::move(what), std::move(witness)};
  }
};

inline std::string format_witness(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace chordweight
