#pragma once

// Dense exact linear algebra over Q and Q(i): elimination, solving,
// kernels, inverses.  Dimensions in this library are small, so simple
// fraction-free-ish Gauss-Jordan is entirely adequate.

#include "nilhodge/gaussian.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nilhodge {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c, F(0)) {}
  Mat(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Mat zero(size_t r, size_t c) { return Mat(r, c); }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  F& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const F& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const F& c) { return a *= c; }
  friend Mat operator*(const F& c, Mat a) { return a *= c; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat: shape mismatch in apply");
    Vec<F> r(rows_, F(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Mat conj_transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
    return r;
  }
  Mat conjugate() const {
    Mat r = *this;
    for (auto& x : r.data_) x = conj(x);
    return r;
  }

  Mat pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: pow of non-square");
    Mat r = identity(rows_);
    for (unsigned j = 0; j < k; ++j) r = r * (*this);
    return r;
  }

  F trace() const {
    F t(0);
    for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<F> row(size_t i) const {
    return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<F> col(size_t j) const {
    Vec<F> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(size_t i, const Vec<F>& v) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_col(size_t j, const Vec<F>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  // Row-reduce in place to reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      F inv = F(1) / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  F det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square");
    Mat m = *this;
    F d(1);
    for (size_t c = 0; c < cols_; ++c) {
      size_t p = c;
      while (p < rows_ && is_zero(m(p, c))) ++p;
      if (p == rows_) return F(0);
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d *= m(c, c);
      F inv = F(1) / m(c, c);
      for (size_t i = c + 1; i < rows_; ++i) {
        if (is_zero(m(i, c))) continue;
        F f = m(i, c) * inv;
        for (size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
    Mat aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = F(1);
    }
    auto piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  // Basis of the null space, as column vectors.
  std::vector<Vec<F>> kernel_basis() const {
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Vec<F> v(cols_, F(0));
      v[c] = F(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  template <class G, class Fn>
  Mat<G> map(Fn fn) const {
    Mat<G> r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<F> data_;
};

template <class F>
Mat<F> commutator(const Mat<F>& a, const Mat<F>& b) {
  return a * b - b * a;
}

// One solution of A x = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Mat<F> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = aug.rref();
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols(), F(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

// Exponential of a nilpotent matrix (exact; throws if not nilpotent).
template <class F>
Mat<F> exp_nilpotent(const Mat<F>& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("exp_nilpotent: non-square");
  Mat<F> term = Mat<F>::identity(n.rows());
  Mat<F> sum = term;
  for (size_t k = 1; k <= n.rows(); ++k) {
    term = term * n;
    term *= F(1) / F(static_cast<long>(k));
    if (term.is_zero_matrix()) return sum;
    sum += term;
  }
  throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

template <class F>
Mat<F> from_columns(size_t ambient, const std::vector<Vec<F>>& cols) {
  Mat<F> m(ambient, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != ambient)
      throw std::invalid_argument("from_columns: wrong vector length");
    m.set_col(j, cols[j]);
  }
  return m;
}

inline Mat<GScalar> complexify(const Mat<Scalar>& m) {
  return m.template map<GScalar>([](const Scalar& x) { return GScalar(x); });
}

// Real and imaginary parts of a Q(i) matrix.
inline Mat<Scalar> real_part(const Mat<GScalar>& m) {
  return m.template map<Scalar>([](const GScalar& x) { return x.re; });
}
inline Mat<Scalar> imag_part(const Mat<GScalar>& m) {
  return m.template map<Scalar>([](const GScalar& x) { return x.im; });
}

template <class F>
Vec<F> basis_vector(size_t n, size_t i) {
  Vec<F> v(n, F(0));
  v[i] = F(1);
  return v;
}

template <class F>
Vec<F> operator+(Vec<F> a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class F>
Vec<F> operator-(Vec<F> a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class F>
Vec<F> operator*(const F& c, Vec<F> v) {
  for (auto& x : v) x *= c;
  return v;
}

}  // namespace nilhodge
