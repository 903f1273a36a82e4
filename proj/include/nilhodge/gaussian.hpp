#pragma once

// Gaussian rationals Q(i): the coefficient field for complexified
// computations (Hodge filtrations, Weil operators).

#include "nilhodge/rational.hpp"

#include <cctype>
#include <string>

namespace nilhodge {

struct GScalar {
  Scalar re, im;

  GScalar() = default;
  GScalar(Scalar r) : re(std::move(r)) {}       // NOLINT(google-explicit-constructor)
  GScalar(long r) : re(r) {}                    // NOLINT(google-explicit-constructor)
  GScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  static GScalar i() { return GScalar(Scalar(0), Scalar(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GScalar conj() const { return GScalar(re, -im); }
  Scalar norm() const { return re * re + im * im; }

  GScalar operator-() const { return GScalar(-re, -im); }
  GScalar& operator+=(const GScalar& o) { re += o.re; im += o.im; return *this; }
  GScalar& operator-=(const GScalar& o) { re -= o.re; im -= o.im; return *this; }
  GScalar& operator*=(const GScalar& o) {
    Scalar r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GScalar& operator/=(const GScalar& o) {
    Scalar n = o.norm();
    if (n.is_zero()) throw std::domain_error("GScalar: division by zero");
    GScalar c = o.conj();
    *this *= c;
    re /= n;
    im /= n;
    return *this;
  }

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator/(GScalar a, const GScalar& b) { return a /= b; }
  friend bool operator==(const GScalar& a, const GScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }
};

inline bool is_zero(const GScalar& x) { return x.is_zero(); }

// i^k for any integer k.
inline GScalar i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GScalar(Scalar(1));
    case 1: return GScalar(Scalar(0), Scalar(1));
    case 2: return GScalar(Scalar(-1));
    default: return GScalar(Scalar(0), Scalar(-1));
  }
}

// Conjugation hooks so templated code works over both fields.
inline Scalar conj(const Scalar& x) { return x; }
inline GScalar conj(const GScalar& x) { return x.conj(); }

// Canonical form "p/q+r/s i"; pure-real prints as "p/q", pure-imaginary as
// "r/s i", zero as "0".
inline std::string to_string(const GScalar& x) {
  if (x.im.is_zero()) return to_string(x.re);
  std::string imag = to_string(x.im) + " i";
  if (x.re.is_zero()) return imag;
  if (x.im > 0) return to_string(x.re) + "+" + imag;
  return to_string(x.re) + imag;  // the sign comes with the coefficient
}

inline GScalar parse_gaussian(std::string text) {
  // strip spaces
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_gaussian: empty input");
  if (s.back() != 'i') return GScalar(parse_rational(s));
  s.pop_back();
  // find the split between real and imaginary parts: a sign that is not a
  // leading sign and not directly after '/'
  for (size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/') {
      std::string imag = s.substr(pos);
      if (imag == "+" || imag == "-") imag += "1";
      return GScalar(parse_rational(s.substr(0, pos)), parse_rational(imag));
    }
  }
  if (s.empty() || s == "+") return GScalar::i();
  if (s == "-") return -GScalar::i();
  return GScalar(Scalar(0), parse_rational(s));
}

}  // namespace nilhodge
