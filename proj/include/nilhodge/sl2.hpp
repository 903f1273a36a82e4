#pragma once

// Standard sl2 triples over Q: completing a nilpotent and its neutral
// element to a triple, weight components under a grading, and
// highest-weight splittings inside the adjoint representation.

#include "nilhodge/filtration.hpp"

namespace nilhodge {

// {N+, Y, N} with [Y, N+] = 2 N+, [N+, N] = Y, [Y, N] = -2 N.
template <class F>
struct StandardTriple {
  Mat<F> n_plus, y, n;

  bool well_formed() const {
    return commutator(y, n_plus) == F(2) * n_plus &&
           commutator(n_plus, n) == y &&
           commutator(y, n) == F(-2) * n;
  }
};

// ---- operators on matrix space

template <class F>
Vec<F> vec_of(const Mat<F>& m) {
  Vec<F> v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

template <class F>
Mat<F> mat_of(const Vec<F>& v, size_t rows, size_t cols) {
  Mat<F> m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// n^2 x n^2 matrix of a linear operator on n x n matrices.
template <class F, class Fn>
Mat<F> op_matrix(size_t n, Fn f) {
  Mat<F> big(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Mat<F> e(n, n);
      e(i, j) = F(1);
      big.set_col(i * n + j, vec_of(f(e)));
    }
  return big;
}

// Basis of the space of matrices annihilated by a list of linear
// operators on matrix space.
template <class F>
std::vector<Mat<F>> matrices_annihilated_by(size_t n, const std::vector<Mat<F>>& ops) {
  if (ops.empty()) {
    std::vector<Mat<F>> all;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Mat<F> e(n, n);
        e(i, j) = F(1);
        all.push_back(e);
      }
    return all;
  }
  Mat<F> stacked(ops.size() * n * n, n * n);
  for (size_t k = 0; k < ops.size(); ++k)
    for (size_t r = 0; r < n * n; ++r)
      for (size_t c = 0; c < n * n; ++c) stacked(k * n * n + r, c) = ops[k](r, c);
  std::vector<Mat<F>> out;
  for (auto& v : stacked.kernel_basis()) out.push_back(mat_of(v, n, n));
  return out;
}

// Integer spectrum of a semisimple grading operator.
template <class F>
std::vector<long> integer_spectrum(const Mat<F>& y) {
  size_t d = y.rows();
  long bound = static_cast<long>(d) * 64 + 1;  // gradings here are tiny
  std::vector<long> found;
  size_t total = 0;
  for (long k = -bound; k <= bound && total < d; ++k) {
    Mat<F> shifted = y - F(k) * Mat<F>::identity(d);
    size_t mult = d - (shifted.rank());
    if (mult > 0) {
      found.push_back(k);
      total += mult;
    }
  }
  if (total != d)
    throw std::invalid_argument("integer_spectrum: not semisimple with small integer spectrum");
  return found;
}

// Component of weight w of t under ad(y), extracted by exact Lagrange
// projection onto the ad-eigenvalue w.
template <class F>
Mat<F> ad_weight_component(const Mat<F>& t, const Mat<F>& y, long w) {
  auto spec = integer_spectrum(y);
  std::set<long> ad_spec;
  for (long a : spec)
    for (long b : spec) ad_spec.insert(a - b);
  if (!ad_spec.count(w)) return Mat<F>::zero(t.rows(), t.cols());
  Mat<F> cur = t;
  for (long mu : ad_spec) {
    if (mu == w) continue;
    cur = (commutator(y, cur) - F(mu) * cur) * (F(1) / F(w - mu));
  }
  return cur;
}

// All nonzero ad(y)-weight components of t (their sum is t).
template <class F>
std::map<long, Mat<F>> ad_weight_components(const Mat<F>& t, const Mat<F>& y) {
  auto spec = integer_spectrum(y);
  std::set<long> ad_spec;
  for (long a : spec)
    for (long b : spec) ad_spec.insert(a - b);
  std::map<long, Mat<F>> out;
  Mat<F> sum(t.rows(), t.cols());
  for (long w : ad_spec) {
    Mat<F> c = ad_weight_component(t, y, w);
    if (!c.is_zero_matrix()) {
      out[w] = c;
      sum += c;
    }
  }
  if (sum != t)
    throw std::invalid_argument("ad_weight_components: y is not semisimple");
  return out;
}

// ---- triple completion

// Raising operator for (n, y): built on a y-homogeneous string basis by
// N+(N^a v) = a(l - a + 1) N^{a-1} v on a string of length l + 1.
template <class F>
Mat<F> complete_triple(const Mat<F>& n, const Mat<F>& y) {
  if (commutator(y, n) != F(-2) * n)
    throw std::invalid_argument("complete_triple: [y, n] != -2n");
  size_t d = n.rows();
  auto dec = string_decomposition(n, y);
  std::vector<Vec<F>> cols_in, cols_out;
  for (const auto& s : dec.strings) {
    long l = static_cast<long>(s.length()) - 1;
    // the head must sit in weight l for (n, y) to span an sl2 action
    if (y.apply(s.vectors.front()) != F(l) * s.vectors.front())
      throw std::invalid_argument("complete_triple: head weight differs from string length");
    for (long a = 0; a <= l; ++a) {
      cols_in.push_back(s.vectors[a]);
      Vec<F> img(d, F(0));
      if (a > 0) img = F(a * (l - a + 1)) * s.vectors[a - 1];
      cols_out.push_back(img);
    }
  }
  Mat<F> basis = from_columns(d, cols_in);
  Mat<F> images = from_columns(d, cols_out);
  auto inv = basis.inverse();
  if (!inv) throw std::logic_error("complete_triple: string basis is singular");
  Mat<F> np = images * *inv;
  StandardTriple<F> t{np, y, n};
  if (!t.well_formed()) throw std::logic_error("complete_triple: bracket check failed");
  return np;
}

// Independent characterization: the unique solution of the linear system
// [x, n] = y, [y, x] = 2x.
template <class F>
std::optional<Mat<F>> complete_triple_linear(const Mat<F>& n, const Mat<F>& y) {
  size_t d = n.rows();
  Mat<F> a1 = op_matrix<F>(d, [&](const Mat<F>& x) { return commutator(x, n); });
  Mat<F> a2 = op_matrix<F>(d, [&](const Mat<F>& x) {
    return commutator(y, x) - F(2) * x;
  });
  Mat<F> sys(2 * d * d, d * d);
  for (size_t r = 0; r < d * d; ++r)
    for (size_t c = 0; c < d * d; ++c) {
      sys(r, c) = a1(r, c);
      sys(d * d + r, c) = a2(r, c);
    }
  Vec<F> rhs = vec_of(y);
  rhs.resize(2 * d * d, F(0));
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return mat_of(*sol, d, d);
}

// Split x (of ad(h)-weight w for the pair (n0, h)) as [n0, gamma] + x0
// with x0 a highest-weight vector: [n0plus, x0] = 0 and gamma of weight
// w + 2.  Additional homogeneous linear conditions on gamma may be
// supplied as n^2 x n^2 matrices.  Returns (gamma, x0).
template <class F>
std::pair<Mat<F>, Mat<F>> highest_weight_split(const Mat<F>& x, const Mat<F>& n0,
                                               const Mat<F>& h, const Mat<F>& n0plus,
                                               const std::vector<Mat<F>>& extra_ops = {}) {
  size_t d = x.rows();
  if (x.is_zero_matrix()) return {Mat<F>::zero(d, d), Mat<F>::zero(d, d)};
  // unknowns: gamma; conditions: [h, gamma] = (w+2) gamma and
  // [n0plus, x - [n0, gamma]] = 0, where w is the weight of x
  Mat<F> hx = commutator(h, x);
  F w(0);
  bool found = false;
  for (size_t i = 0; i < d && !found; ++i)
    for (size_t j = 0; j < d && !found; ++j)
      if (!is_zero(x(i, j))) {
        w = hx(i, j) / x(i, j);
        found = true;
      }
  if (hx != w * x)
    throw std::invalid_argument("highest_weight_split: x is not ad(h)-homogeneous");

  Mat<F> c1 = op_matrix<F>(d, [&](const Mat<F>& g) {
    return commutator(h, g) - (w + F(2)) * g;
  });
  Mat<F> c2 = op_matrix<F>(d, [&](const Mat<F>& g) {
    return commutator(n0plus, commutator(n0, g));
  });
  size_t blocks = 2 + extra_ops.size();
  Mat<F> sys(blocks * d * d, d * d);
  for (size_t r = 0; r < d * d; ++r)
    for (size_t c = 0; c < d * d; ++c) {
      sys(r, c) = c1(r, c);
      sys(d * d + r, c) = c2(r, c);
      for (size_t k = 0; k < extra_ops.size(); ++k)
        sys((2 + k) * d * d + r, c) = extra_ops[k](r, c);
    }
  Vec<F> rhs(blocks * d * d, F(0));
  Vec<F> target = vec_of(commutator(n0plus, x));
  for (size_t r = 0; r < d * d; ++r) rhs[d * d + r] = target[r];
  auto sol = solve(sys, rhs);
  if (!sol)
    throw std::logic_error("highest_weight_split: inconsistent sl2 data");
  Mat<F> gamma = mat_of(*sol, d, d);
  Mat<F> x0 = x - commutator(n0, gamma);
  if (!commutator(n0plus, x0).is_zero_matrix())
    throw std::logic_error("highest_weight_split: residue is not highest weight");
  return {gamma, x0};
}

}  // namespace nilhodge
