#pragma once

// Exact symmetric / skew / Hermitian form utilities: evaluation, Gram
// matrices on chosen vectors, and inertia via congruence diagonalization.

#include "nilhodge/subspace.hpp"

namespace nilhodge {

struct Signature {
  size_t pos = 0, neg = 0, null = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

template <class F>
F form_eval(const Mat<F>& gram, const Vec<F>& u, const Vec<F>& v) {
  F r(0);
  Vec<F> gv = gram.apply(v);
  for (size_t i = 0; i < u.size(); ++i)
    if (!is_zero(u[i])) r += u[i] * gv[i];
  return r;
}

// Hermitian pairing <u,v> = u^T G conj(v) (linear in u, conjugate-linear in v).
inline GScalar herm_eval(const Mat<GScalar>& gram, const Vec<GScalar>& u,
                         const Vec<GScalar>& v) {
  Vec<GScalar> vc(v.size());
  for (size_t i = 0; i < v.size(); ++i) vc[i] = v[i].conj();
  return form_eval(gram, u, vc);
}

template <class F>
bool is_symmetric(const Mat<F>& g) { return g == g.transpose(); }
template <class F>
bool is_skew(const Mat<F>& g) { return g == -g.transpose(); }
inline bool is_hermitian(const Mat<GScalar>& g) { return g == g.conj_transpose(); }

// N an infinitesimal isometry of G:  N^T G + G N = 0.
template <class F>
bool is_infinitesimal_isometry(const Mat<F>& n, const Mat<F>& g) {
  return (n.transpose() * g + g * n).is_zero_matrix();
}

template <class F>
Mat<F> gram_on(const Mat<F>& gram, const std::vector<Vec<F>>& vs) {
  Mat<F> g(vs.size(), vs.size());
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) g(i, j) = form_eval(gram, vs[i], vs[j]);
  return g;
}

inline Mat<GScalar> herm_gram_on(const Mat<GScalar>& gram,
                                 const std::vector<Vec<GScalar>>& vs) {
  Mat<GScalar> g(vs.size(), vs.size());
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) g(i, j) = herm_eval(gram, vs[i], vs[j]);
  return g;
}

// Inertia of a symmetric rational matrix by Lagrange congruence.
inline Signature signature_of(Mat<Scalar> m) {
  if (!is_symmetric(m)) throw std::invalid_argument("signature_of: not symmetric");
  size_t n = m.rows();
  Signature sig;
  for (size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t l = k + 1;
      for (; l < n; ++l)
        if (!m(l, l).is_zero()) break;
      if (l < n) {
        m.swap_rows(k, l);
        for (size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, l));
      } else {
        for (l = k + 1; l < n; ++l)
          if (!m(k, l).is_zero()) break;
        if (l == n) {
          ++sig.null;
          continue;
        }
        // e_k := e_k + e_l turns the off-diagonal entry into a pivot
        for (size_t j = 0; j < n; ++j) m(k, j) += m(l, j);
        for (size_t i = 0; i < n; ++i) m(i, k) += m(i, l);
      }
    }
    if (m(k, k) > 0) ++sig.pos; else ++sig.neg;
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Scalar f = m(i, k) / m(k, k);
      for (size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
    }
  }
  return sig;
}

// Inertia of a Hermitian Q(i) matrix (congruence by P . P^*).
inline Signature hermitian_signature_of(Mat<GScalar> m) {
  if (!is_hermitian(m)) throw std::invalid_argument("hermitian_signature_of: not hermitian");
  size_t n = m.rows();
  Signature sig;
  for (size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t l = k + 1;
      for (; l < n; ++l)
        if (!m(l, l).is_zero()) break;
      if (l < n) {
        m.swap_rows(k, l);
        for (size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, l));
      } else {
        for (l = k + 1; l < n; ++l)
          if (!m(k, l).is_zero()) break;
        if (l == n) {
          ++sig.null;
          continue;
        }
        // e_k := e_k + c e_l with c chosen so the new (k,k) entry is nonzero
        GScalar z = m(l, k);
        GScalar c = z.re.is_zero() ? GScalar::i() : GScalar(Scalar(1));
        for (size_t j = 0; j < n; ++j) m(k, j) += c.conj() * m(l, j);
        for (size_t i = 0; i < n; ++i) m(i, k) += c * m(i, l);
      }
    }
    if (!m(k, k).is_real())
      throw std::logic_error("hermitian_signature_of: non-real diagonal");
    if (m(k, k).re > 0) ++sig.pos; else ++sig.neg;
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      GScalar f = m(i, k) / m(k, k);
      for (size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      GScalar fc = f.conj();
      for (size_t j = 0; j < n; ++j) m(j, i) -= fc * m(j, k);
    }
  }
  return sig;
}

inline bool is_positive_definite(const Mat<Scalar>& m) {
  Signature s = signature_of(m);
  return s.neg == 0 && s.null == 0;
}
inline bool is_positive_definite_hermitian(const Mat<GScalar>& m) {
  Signature s = hermitian_signature_of(m);
  return s.neg == 0 && s.null == 0;
}

// A nondegenerate bilinear form on R^n together with its parity:
// parity +1 = symmetric, -1 = skew.
struct BilinearForm {
  Mat<Scalar> gram;
  int parity = 1;

  size_t dim() const { return gram.rows(); }
  Scalar eval(const Vec<Scalar>& u, const Vec<Scalar>& v) const {
    return form_eval(gram, u, v);
  }
  bool well_formed() const {
    if (gram.rows() != gram.cols()) return false;
    if (parity == 1 && !is_symmetric(gram)) return false;
    if (parity == -1 && !is_skew(gram)) return false;
    if (parity != 1 && parity != -1) return false;
    return gram.rank() == gram.rows();
  }
};

}  // namespace nilhodge
