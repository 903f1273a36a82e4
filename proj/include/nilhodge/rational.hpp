#pragma once

// Exact rational scalars.  All arithmetic in this library is exact; no
// floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace nilhodge {

using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Scalar frac(long p, long q) {
  if (q == 0) throw std::invalid_argument("frac: zero denominator");
  if (q < 0) { p = -p; q = -q; }
  return Scalar(p, q);
}

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

inline int sign_of(const Scalar& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

inline bool is_integer(const Scalar& x) {
  return denominator(x) == 1;
}

inline long to_long(const Scalar& x) {
  if (!is_integer(x)) throw std::domain_error("to_long: not an integer");
  return static_cast<long>(numerator(x));
}

// Canonical form "p/q" with q > 0 in lowest terms; "/1" omitted.
inline std::string to_string(const Scalar& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

inline Scalar factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return Scalar(r);
}

inline Scalar parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Scalar(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: bad input '" + text + "'");
  }
}

}  // namespace nilhodge
