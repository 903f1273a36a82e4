#pragma once

// From matrices to diagrams: string (Jordan) decompositions of nilpotent
// operators, the induced forms on primitive spaces, and the signed diagram
// attached to a nilpotent infinitesimal isometry.

#include "nilhodge/bilinear.hpp"
#include "nilhodge/diagrams.hpp"

#include <optional>

namespace nilhodge {

template <class F>
bool is_nilpotent(const Mat<F>& n) {
  if (n.rows() != n.cols()) return false;
  return n.pow(static_cast<unsigned>(n.rows())).is_zero_matrix();
}

// One string: v, Nv, ..., N^l v with N^{l+1} v = 0.
template <class F>
struct NString {
  std::vector<Vec<F>> vectors;
  size_t length() const { return vectors.size(); }
};

template <class F>
struct StringDecomposition {
  std::vector<NString<F>> strings;  // longest first

  Partition partition() const {
    Partition p;
    for (const auto& s : strings) p.push_back(s.length());
    std::sort(p.rbegin(), p.rend());
    return p;
  }
  // heads of the strings of a given length
  std::vector<Vec<F>> primitives(size_t length) const {
    std::vector<Vec<F>> out;
    for (const auto& s : strings)
      if (s.length() == length) out.push_back(s.vectors.front());
    return out;
  }
};

// String decomposition of a nilpotent operator.  When a grading `y` with
// [y, n] = -2n is supplied, string heads are chosen inside its
// eigenspaces, so every string is homogeneous for y.
template <class F>
StringDecomposition<F> string_decomposition(const Mat<F>& n,
                                            const std::optional<Mat<F>>& y = std::nullopt) {
  if (!is_nilpotent(n)) throw std::invalid_argument("string_decomposition: not nilpotent");
  size_t d = n.rows();
  std::vector<Subspace<F>> ker{Subspace<F>::zero(d)};  // ker[j] = ker n^j
  while (!ker.back().is_full())
    ker.push_back(Subspace<F>::span(d, n.pow(static_cast<unsigned>(ker.size())).kernel_basis()));
  size_t top = ker.size() - 1;  // largest string length
  ker.push_back(Subspace<F>::full(d));

  StringDecomposition<F> dec;
  for (size_t len = top; len >= 1; --len) {
    size_t l = len - 1;  // heads live in ker n^{l+1}
    Subspace<F> lower = ker[l] + ker[l + 2].image_under(n);
    std::vector<Vec<F>> heads;
    if (y) {
      // pick heads eigenvalue by eigenvalue inside E_w(y), w = l down to -l
      for (long w = static_cast<long>(l);; w -= 1) {
        Mat<F> shifted = *y - F(w) * Mat<F>::identity(d);
        Subspace<F> ew = Subspace<F>::span(d, shifted.kernel_basis());
        Subspace<F> avail = intersect(ew, ker[l + 1]);
        Subspace<F> seen = intersect(ew, lower);
        for (auto& v : seen.complement_in(avail)) {
          heads.push_back(v);
          lower = lower + Subspace<F>::span(d, {v});
        }
        if (w == -static_cast<long>(l)) break;
      }
      if (!(lower + ker[l]).contains(ker[l + 1]))
        throw std::invalid_argument("string_decomposition: grading incompatible with n");
    } else {
      heads = lower.complement_in(ker[l + 1]);
    }
    for (auto& h : heads) {
      NString<F> s;
      Vec<F> v = h;
      for (size_t j = 0; j <= l; ++j) {
        s.vectors.push_back(v);
        v = n.apply(v);
      }
      dec.strings.push_back(std::move(s));
    }
  }
  // sanity: the union of all string vectors must be a basis
  std::vector<Vec<F>> all;
  for (const auto& s : dec.strings)
    for (const auto& v : s.vectors) all.push_back(v);
  if (Subspace<F>::span(d, all).dim() != d || all.size() != d)
    throw std::logic_error("string_decomposition: internal basis failure");
  return dec;
}

template <class F>
StringDecomposition<F> string_decomposition(const Mat<F>& n, const Mat<F>& y) {
  return string_decomposition(n, std::optional<Mat<F>>(y));
}

template <class F>
Partition partition_of(const Mat<F>& n) {
  if (!is_nilpotent(n)) throw std::invalid_argument("partition_of: not nilpotent");
  // number of strings of length >= j equals rank n^{j-1} - rank n^j
  std::vector<size_t> ranks;
  Mat<F> p = Mat<F>::identity(n.rows());
  ranks.push_back(n.rows());
  while (!p.is_zero_matrix()) {
    p = p * n;
    ranks.push_back(p.rank());
  }
  Partition part;
  for (size_t j = 1; j < ranks.size(); ++j) {
    size_t atleast = ranks[j - 1] - ranks[j];
    for (size_t i = 0; i < atleast; ++i) {
      if (part.size() <= i) part.push_back(0);
      ++part[i];
    }
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

// The induced pairing Q_l(u, v) = Q(u, N^l v) on heads of length-(l+1)
// strings.  Symmetric when w + l is even, skew when odd (w = weight
// parity carried by Q).
template <class F>
Mat<F> primitive_gram(const Mat<F>& gram, const Mat<F>& n, size_t l,
                      const std::vector<Vec<F>>& heads) {
  Mat<F> nl = n.pow(static_cast<unsigned>(l));
  Mat<F> g(heads.size(), heads.size());
  for (size_t i = 0; i < heads.size(); ++i)
    for (size_t j = 0; j < heads.size(); ++j)
      g(i, j) = form_eval(gram, heads[i], nl.apply(heads[j]));
  return g;
}

// Leading-sign convention: a head v of a length-(l+1) string with
// Q_l(v, v) > 0 contributes a row led by '+' exactly when
//   (w even and l = 0 mod 4)  or  (w odd and l = 1 mod 4),
// and by '-' when
//   (w even and l = 2 mod 4)  or  (w odd and l = 3 mod 4).
inline BoxSign gene_sign(long w, size_t l) {
  bool w_even = (w % 2 + 2) % 2 == 0;
  if (w_even != (l % 2 == 0)) return BoxSign::Blank;
  size_t r = l % 4;
  if (w_even) return r == 0 ? BoxSign::Plus : BoxSign::Minus;
  return r == 1 ? BoxSign::Plus : BoxSign::Minus;
}

// Signed diagram of a nilpotent infinitesimal isometry of (V, Q).  The
// weight w only enters through its parity, which must match the parity of
// Q; the default (0 for symmetric, 1 for skew) gives the classical
// convention for so(p,q) and sp(2m,R).
inline SignedDiagram signed_diagram_of(const Mat<Scalar>& n, const BilinearForm& q,
                                       std::optional<long> weight = std::nullopt) {
  if (!q.well_formed()) throw std::invalid_argument("signed_diagram_of: bad form");
  if (!is_infinitesimal_isometry(n, q.gram))
    throw std::invalid_argument("signed_diagram_of: n does not preserve the form");
  long w = weight ? *weight : (q.parity == 1 ? 0 : 1);
  if ((q.parity == 1) != ((w % 2 + 2) % 2 == 0))
    throw std::invalid_argument("signed_diagram_of: weight parity does not match the form");

  auto dec = string_decomposition(n);
  SignedDiagram d;
  Partition shape = dec.partition();
  std::set<size_t> lengths(shape.begin(), shape.end());
  for (size_t len : lengths) {
    size_t l = len - 1;
    auto heads = dec.primitives(len);
    Mat<Scalar> g = primitive_gram(q.gram, n, l, heads);
    BoxSign gene = gene_sign(w, l);
    if (gene == BoxSign::Blank) {
      if (!is_skew(g) || g.rank() != g.rows())
        throw std::logic_error("signed_diagram_of: degenerate primitive pairing");
      for (size_t i = 0; i < heads.size(); ++i)
        d.rows.push_back(SignedRow{len, BoxSign::Blank});
    } else {
      if (!is_symmetric(g))
        throw std::logic_error("signed_diagram_of: primitive pairing has wrong symmetry");
      Signature s = signature_of(g);
      if (s.null != 0)
        throw std::logic_error("signed_diagram_of: degenerate primitive pairing");
      for (size_t i = 0; i < s.pos; ++i) d.rows.push_back(SignedRow{len, gene});
      for (size_t i = 0; i < s.neg; ++i) d.rows.push_back(SignedRow{len, flip(gene)});
    }
  }
  d.canonicalize();
  return d;
}

inline bool same_orbit(const Mat<Scalar>& n1, const Mat<Scalar>& n2,
                       const BilinearForm& q, std::optional<long> weight = std::nullopt) {
  return signed_diagram_of(n1, q, weight) == signed_diagram_of(n2, q, weight);
}

inline bool in_closure(const Mat<Scalar>& n1, const Mat<Scalar>& n2,
                       const BilinearForm& q, std::optional<long> weight = std::nullopt) {
  return dokovic_leq(signed_diagram_of(n1, q, weight), signed_diagram_of(n2, q, weight));
}

}  // namespace nilhodge
