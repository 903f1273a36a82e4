#pragma once

// Subspaces of F^n in canonical (reduced row echelon) form, plus the
// quotient-space bookkeeping needed for graded computations.

#include "nilhodge/matrix.hpp"

namespace nilhodge {

template <class F>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(size_t ambient, const std::vector<Vec<F>>& vectors) {
    Mat<F> m(vectors.size(), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient)
        throw std::invalid_argument("Subspace: wrong vector length");
      m.set_row(i, vectors[i]);
    }
    auto piv = m.rref();
    Subspace s(ambient);
    s.basis_ = Mat<F>(piv.size(), ambient);
    for (size_t i = 0; i < piv.size(); ++i) s.basis_.set_row(i, m.row(i));
    return s;
  }

  static Subspace full(size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Mat<F>::identity(ambient);
    return s;
  }
  static Subspace zero(size_t ambient) { return Subspace(ambient); }

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Canonical basis (RREF rows).
  std::vector<Vec<F>> basis() const {
    std::vector<Vec<F>> b;
    for (size_t i = 0; i < basis_.rows(); ++i) b.push_back(basis_.row(i));
    return b;
  }
  const Mat<F>& basis_matrix() const { return basis_; }

  bool contains(const Vec<F>& v) const {
    Mat<F> m(dim() + 1, ambient_);
    for (size_t i = 0; i < dim(); ++i) m.set_row(i, basis_.row(i));
    m.set_row(dim(), v);
    return m.rank() == dim();
  }
  bool contains(const Subspace& other) const {
    for (size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    std::vector<Vec<F>> vs = a.basis();
    for (auto& v : b.basis()) vs.push_back(v);
    return span(a.ambient_, vs);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    // x = A^T s = -B^T t for (s,t) in the kernel of [A^T | B^T]
    Mat<F> m(a.ambient_, a.dim() + b.dim());
    for (size_t j = 0; j < a.dim(); ++j) m.set_col(j, a.basis_.row(j));
    for (size_t j = 0; j < b.dim(); ++j) m.set_col(a.dim() + j, b.basis_.row(j));
    std::vector<Vec<F>> vecs;
    for (auto& k : m.kernel_basis()) {
      Vec<F> x(a.ambient_, F(0));
      for (size_t j = 0; j < a.dim(); ++j)
        if (!nilhodge::is_zero(k[j])) x = x + k[j] * a.basis_.row(j);
      vecs.push_back(std::move(x));
    }
    return span(a.ambient_, vecs);
  }

  // Rows c with c.v = 0 exactly for v in this subspace.
  Mat<F> annihilator() const {
    auto ker = basis_.kernel_basis();
    Mat<F> c(ker.size(), ambient_);
    for (size_t i = 0; i < ker.size(); ++i) c.set_row(i, ker[i]);
    return c;
  }

  Subspace image_under(const Mat<F>& t) const {
    std::vector<Vec<F>> vs;
    for (size_t i = 0; i < dim(); ++i) vs.push_back(t.apply(basis_.row(i)));
    return span(t.rows(), vs);
  }

  Subspace preimage_under(const Mat<F>& t) const {
    // {v : Tv in S} = ker(C T) where C cuts out S
    Mat<F> ct = annihilator() * t;
    return span(t.cols(), ct.kernel_basis());
  }

  template <class G, class Fn>
  Subspace<G> map(Fn fn) const {
    std::vector<Vec<G>> vs;
    for (size_t i = 0; i < dim(); ++i) {
      Vec<F> r = basis_.row(i);
      Vec<G> w(ambient_);
      for (size_t j = 0; j < ambient_; ++j) w[j] = fn(r[j]);
      vs.push_back(std::move(w));
    }
    return Subspace<G>::span(ambient_, vs);
  }

  // Vectors from `inside` extending this subspace to this + inside,
  // chosen greedily from inside's canonical basis.
  std::vector<Vec<F>> complement_in(const Subspace& inside) const {
    std::vector<Vec<F>> picked;
    Subspace cur = *this;
    for (size_t i = 0; i < inside.dim(); ++i) {
      Vec<F> v = inside.basis_.row(i);
      if (!cur.contains(v)) {
        picked.push_back(v);
        cur = cur + span(ambient_, {v});
      }
    }
    return picked;
  }

 private:
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  size_t ambient_;
  Mat<F> basis_;  // RREF rows
};

inline Subspace<GScalar> complexify(const Subspace<Scalar>& s) {
  return s.template map<GScalar>([](const Scalar& x) { return GScalar(x); });
}
inline Subspace<GScalar> conj(const Subspace<GScalar>& s) {
  return s.template map<GScalar>([](const GScalar& x) { return x.conj(); });
}

// The quotient W/U presented on a complement basis picked inside W.
template <class F>
class QuotientSpace {
 public:
  QuotientSpace(const Subspace<F>& sub, const Subspace<F>& whole)
      : sub_(sub), whole_(whole), lifts_(sub.complement_in(whole)) {
    if (!whole.contains(sub))
      throw std::invalid_argument("QuotientSpace: sub not inside whole");
  }
  // Quotient of the full ambient space by `sub`.
  explicit QuotientSpace(const Subspace<F>& sub)
      : QuotientSpace(sub, Subspace<F>::full(sub.ambient())) {}

  size_t dim() const { return lifts_.size(); }
  const std::vector<Vec<F>>& lifts() const { return lifts_; }

  // Coordinates of [v] on the complement basis (v must lie in `whole`).
  Vec<F> coords(const Vec<F>& v) const {
    size_t n = sub_.ambient();
    Mat<F> m(n, lifts_.size() + sub_.dim());
    for (size_t j = 0; j < lifts_.size(); ++j) m.set_col(j, lifts_[j]);
    auto sb = sub_.basis();
    for (size_t j = 0; j < sb.size(); ++j) m.set_col(lifts_.size() + j, sb[j]);
    auto x = solve(m, v);
    if (!x) throw std::invalid_argument("QuotientSpace: vector not in `whole`");
    return Vec<F>(x->begin(), x->begin() + lifts_.size());
  }

  // Matrix of the map induced on the quotient by t (t must preserve sub
  // and map whole into whole).
  Mat<F> induced(const Mat<F>& t) const {
    Mat<F> m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) m.set_col(j, coords(t.apply(lifts_[j])));
    return m;
  }

  // Image of a subspace of `whole` in the quotient coordinates.
  Subspace<F> image(const Subspace<F>& s) const {
    std::vector<Vec<F>> vs;
    for (auto& b : intersect(s, whole_).basis()) vs.push_back(coords(b));
    return Subspace<F>::span(dim(), vs);
  }

  // Lift of quotient coordinates back to the ambient space.
  Vec<F> lift(const Vec<F>& q) const {
    Vec<F> v(sub_.ambient(), F(0));
    for (size_t j = 0; j < dim(); ++j)
      if (!is_zero(q[j])) v = v + q[j] * lifts_[j];
    return v;
  }

 private:
  Subspace<F> sub_, whole_;
  std::vector<Vec<F>> lifts_;
};

}  // namespace nilhodge
