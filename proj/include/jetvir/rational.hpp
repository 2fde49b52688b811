#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetvir {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Always "num/den", even for integers ("3/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace jetvir
