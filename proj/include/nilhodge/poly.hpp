#pragma once

// Sparse multivariate polynomials over Q, just rich enough to verify
// matrix identities with symbolic parameters (no division except by
// nonzero constants).

#include "nilhodge/rational.hpp"

#include <array>
#include <map>

namespace nilhodge {

class Poly {
 public:
  static constexpr size_t kVars = 4;
  using Key = std::array<unsigned, kVars>;

  Poly() = default;
  Poly(long c) { if (c != 0) terms_[Key{}] = Scalar(c); }       // NOLINT
  Poly(Scalar c) { if (!c.is_zero()) terms_[Key{}] = std::move(c); }  // NOLINT

  static Poly var(size_t i) {
    if (i >= kVars) throw std::invalid_argument("Poly: variable index");
    Poly p;
    Key k{};
    k[i] = 1;
    p.terms_[k] = Scalar(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{});
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("Poly: not constant");
    return terms_.begin()->second;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator/=(const Poly& o) {
    if (!o.is_constant() || o.is_zero())
      throw std::domain_error("Poly: can only divide by a nonzero constant");
    Scalar c = o.constant_value();
    for (auto& [k, v] : terms_) v /= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (size_t i = 0; i < kVars; ++i) k[i] = ka[i] + kb[i];
        r.add_term(k, ca * cb);
      }
    return r;
  }
  friend Poly operator/(Poly a, const Poly& b) { return a /= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly eval_at(size_t i, const Scalar& value) const {
    Poly r;
    for (const auto& [k, c] : terms_) {
      Scalar f = c;
      for (unsigned e = 0; e < k[i]; ++e) f *= value;
      Key k2 = k;
      k2[i] = 0;
      r.add_term(k2, f);
    }
    return r;
  }

  const std::map<Key, Scalar>& terms() const { return terms_; }

 private:
  void add_term(const Key& k, const Scalar& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, Scalar> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  static const char* names[Poly::kVars] = {"a", "b", "c", "d"};
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    std::string mono;
    for (size_t i = 0; i < Poly::kVars; ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (k[i] > 1) mono += "^" + std::to_string(k[i]);
    }
    std::string piece = to_string(c);
    if (mono.empty()) {
      // constant term
    } else if (piece == "1") {
      piece = mono;
    } else if (piece == "-1") {
      piece = "-" + mono;
    } else {
      piece += "*" + mono;
    }
    if (!s.empty() && piece[0] != '-') s += "+";
    s += piece;
  }
  return s;
}

}  // namespace nilhodge
