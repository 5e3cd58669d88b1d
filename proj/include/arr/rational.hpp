#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arr {

// Exact arithmetic scalars. mpq_class keeps every value canonical
// (reduced, positive denominator), which is exactly the Rational contract.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q" for non-integers, plain decimal string otherwise.
inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses an integer or "p/q". Decimal points are rejected: the callers
// that care (alpha handling) need exact hits on special values.
inline std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.find('.') != std::string::npos) return std::nullopt;
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s, 10);
      return Rat(n);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    Int n(num, 10), d(den, 10);
    if (d == 0) return std::nullopt;
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

inline Rat parse_rational_or_throw(const std::string& s) {
  auto q = parse_rational(s);
  if (!q) throw std::invalid_argument("not an exact rational: '" + s + "'");
  return *q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// C(n, k) as an exact integer; 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace arr
