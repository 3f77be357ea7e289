#ifndef NEGDER_RATIONAL_HPP
#define NEGDER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace negder {

// All coefficient arithmetic is exact. Rationals for the user-facing ring,
// integers for the Groebner kernel (content-free form) and ray normalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Parses "a" or "a/b"; throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

}  // namespace negder

#endif
