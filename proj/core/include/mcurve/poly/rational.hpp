#pragma once

#include <gmpxx.h>

#include <string>

namespace mcurve {

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every constructor from a raw numerator/denominator pair goes
// through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace mcurve
