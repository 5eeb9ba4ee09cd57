#pragma once

#include <gmpxx.h>

#include <string>

namespace stabkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace stabkit
