#pragma once

// Reusable explicit models: polarized string blocks, vanishing-cycle
// configurations, small commuting-pair examples with known deformation
// spaces, and the four-dimensional pair whose polarization constraints
// are infeasible.

#include "nilhodge/deligne.hpp"

namespace nilhodge {
namespace models {

// One string block of length n + 1: basis (a_n, ..., a_0), the lowering
// operator sends a_j to j a_{j-1}, and the pairing is
// Q(a_j, a_{n-j}) = (-1)^n (-1)^j j! (n-j)!  (symmetric for n even,
// skew for n odd).
struct StringBlock {
  Mat<Scalar> n;
  Mat<Scalar> gram;
  Mat<Scalar> h;  // grading by weight centered at 0: a_j has weight 2j - n
};

inline StringBlock string_block(unsigned deg) {
  size_t d = deg + 1;
  StringBlock b{Mat<Scalar>(d, d), Mat<Scalar>(d, d), Mat<Scalar>(d, d)};
  for (size_t i = 0; i < d; ++i) {
    long j = static_cast<long>(deg - i);
    if (j > 0) b.n(i + 1, i) = Scalar(j);
    b.h(i, i) = Scalar(2 * j - static_cast<long>(deg));
    Scalar q = factorial(static_cast<unsigned>(j)) * factorial(deg - static_cast<unsigned>(j));
    if (j % 2 != 0) q = -q;
    if (deg % 2 != 0) q = -q;
    b.gram(i, static_cast<size_t>(deg) - i) = q;
  }
  return b;
}

// Block-diagonal assembly helpers.
inline Mat<Scalar> direct_sum(const std::vector<Mat<Scalar>>& blocks) {
  size_t d = 0;
  for (auto& b : blocks) d += b.rows();
  Mat<Scalar> out(d, d);
  size_t off = 0;
  for (auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

// A one-variable fixture: operator, pairing, weight, grading of the
// weight filtration, and the limit Hodge filtration when relevant.
struct PairModel {
  size_t dim = 0;
  long weight = 0;
  Mat<Scalar> n1, n2;
  Mat<Scalar> gram;  // parity = (-1)^weight
  Mat<Scalar> y;     // grading of W(N_1 + N_2) shifted to weight
  HodgeFiltration f;
  std::vector<Mat<Scalar>> etas;  // the named auxiliary morphisms
};

// Two vanishing cycles in weight one: basis (a1', a2', a1, a2) with
// Q(aj', ak) = delta_{jk} (skew), N_j(v) = Q(v, a_j) a_j.  The systems
// with this sl2 data are exactly (N_1, N_2 + a N_1, Y).
inline PairModel vanishing_cycle_pair() {
  PairModel m;
  m.dim = 4;
  m.weight = 1;
  m.n1 = Mat<Scalar>(4, 4);
  m.n1(2, 0) = Scalar(1);
  m.n2 = Mat<Scalar>(4, 4);
  m.n2(3, 1) = Scalar(1);
  m.gram = Mat<Scalar>(4, 4);
  m.gram(0, 2) = Scalar(1);
  m.gram(2, 0) = Scalar(-1);
  m.gram(1, 3) = Scalar(1);
  m.gram(3, 1) = Scalar(-1);
  m.y = Mat<Scalar>(4, 4);
  m.y(0, 0) = m.y(1, 1) = Scalar(2);
  m.f = HodgeFiltration(4);
  m.f.set(1, Subspace<GScalar>::span(4, {basis_vector<GScalar>(4, 0),
                                         basis_vector<GScalar>(4, 1)}));
  m.f.set(0, Subspace<GScalar>::full(4));
  return m;
}

// Two commuting strings of degree 2 plus a fixed line: basis
// (a2, a1, a0, b2, b1, b0, c), weight 2.  The candidate deformations
// eta_1..eta_4 are stored in etas; exactly eta_2 (together with N_1)
// survives the system conditions, so the answer is
// (N_1, N_2 + a eta_2 + b N_1, Y), Y = 2 Id + H_1 + H_2.
inline PairModel two_strings_and_line() {
  PairModel m;
  m.dim = 7;
  m.weight = 2;
  StringBlock s = string_block(2);
  Mat<Scalar> z3(3, 3), z1(1, 1);
  m.n1 = direct_sum({s.n, z3, z1});
  m.n2 = direct_sum({z3, s.n, z1});
  Mat<Scalar> one(1, 1);
  one(0, 0) = Scalar(1);
  m.gram = direct_sum({s.gram, s.gram, one});
  Mat<Scalar> h1 = direct_sum({s.h, z3, z1});
  Mat<Scalar> h2 = direct_sum({z3, s.h, z1});
  m.y = Scalar(2) * Mat<Scalar>::identity(7) + h1 + h2;
  m.f = HodgeFiltration(7);
  m.f.set(2, Subspace<GScalar>::span(7, {basis_vector<GScalar>(7, 0),
                                         basis_vector<GScalar>(7, 3)}));
  m.f.set(1, Subspace<GScalar>::span(7, {basis_vector<GScalar>(7, 0), basis_vector<GScalar>(7, 3),
                                         basis_vector<GScalar>(7, 1), basis_vector<GScalar>(7, 4),
                                         basis_vector<GScalar>(7, 6)}));
  m.f.set(0, Subspace<GScalar>::full(7));
  Mat<Scalar> e1(7, 7), e2(7, 7), e3(7, 7), e4(7, 7);
  e1(4, 0) = Scalar(1);   // a2 -> b1
  e1(2, 4) = frac(1, 2);  // b1 -> a0/2
  e2(6, 0) = Scalar(1);   // a2 -> c
  e2(2, 6) = frac(-1, 2);
  e3(1, 3) = Scalar(1);   // b2 -> a1
  e3(5, 1) = frac(1, 2);
  e4(6, 3) = Scalar(1);   // b2 -> c
  e4(5, 6) = frac(-1, 2);
  m.etas = {e1, e2, e3, e4};
  return m;
}

// One string of degree 2 plus m fixed lines, weight 2; the commuting
// lowest-weight deformations eta_i(a2) = c_i, eta_i(c_i) = -a0/2.
inline PairModel string_and_lines(size_t lines) {
  PairModel m;
  m.dim = 3 + lines;
  m.weight = 2;
  StringBlock s = string_block(2);
  std::vector<Mat<Scalar>> blocks{s.n};
  Mat<Scalar> one(1, 1);
  one(0, 0) = Scalar(1);
  std::vector<Mat<Scalar>> gblocks{s.gram};
  std::vector<Mat<Scalar>> hblocks{s.h};
  Mat<Scalar> z1(1, 1);
  for (size_t i = 0; i < lines; ++i) {
    blocks.push_back(z1);
    gblocks.push_back(one);
    hblocks.push_back(z1);
  }
  m.n1 = direct_sum(blocks);
  m.n2 = Mat<Scalar>(m.dim, m.dim);
  m.gram = direct_sum(gblocks);
  m.y = Scalar(2) * Mat<Scalar>::identity(m.dim) + direct_sum(hblocks);
  for (size_t i = 0; i < lines; ++i) {
    Mat<Scalar> e(m.dim, m.dim);
    e(3 + i, 0) = Scalar(1);
    e(2, 3 + i) = frac(-1, 2);
    m.etas.push_back(e);
  }
  return m;
}

// A string of degree 3 against a string of degree 1 twisted into
// weight 2: basis (a3, a2, a1, a0, b1, b0),
// Q(a_j, a_{3-j}) = -(-1)^j j! (3-j)!, Q(b1, b0) = 1 (skew).  The
// deformation direction eta(a3) = b1, eta(b0) = -a0/6 has weight -3 for
// the first grading.
inline PairModel deep_deformation_pair() {
  PairModel m;
  m.dim = 6;
  m.weight = 3;
  StringBlock s3 = string_block(3);
  StringBlock s1 = string_block(1);
  Mat<Scalar> z2(2, 2), z4(4, 4);
  m.n1 = direct_sum({s3.n, z2});
  m.n2 = direct_sum({z4, s1.n});
  Mat<Scalar> g1(2, 2);
  g1(0, 1) = Scalar(1);
  g1(1, 0) = Scalar(-1);
  m.gram = direct_sum({s3.gram, g1});
  // a_j sits in weight 2j, b_j in weight 2j + 2
  Mat<Scalar> y(6, 6);
  long wts[6] = {6, 4, 2, 0, 4, 2};
  for (size_t i = 0; i < 6; ++i) y(i, i) = Scalar(wts[i]);
  m.y = y;
  Mat<Scalar> eta(6, 6);
  eta(4, 0) = Scalar(1);
  eta(3, 5) = frac(-1, 6);
  m.etas = {eta};
  return m;
}

// Commuting pair on R^4 (basis e1, f1, e2, f2) with N1: e1 -> f1,
// e2 -> f2 and N2: e1 -> f2, pure weight filtration, F^1 = <e1, e2>,
// grading 2 on the e's and 0 on the f's.  No polarizing form compatible
// with this data exists: the constraints force Q(e2, f2) = 0 while
// positivity requires Q(e2, f2) > 0.
struct InfeasiblePair {
  Mat<Scalar> n1, n2;
  Filtration<Scalar> w;
  HodgeFiltration f;
  Mat<Scalar> y;
};

inline InfeasiblePair infeasible_pair() {
  InfeasiblePair m;
  m.n1 = Mat<Scalar>(4, 4);
  m.n1(1, 0) = Scalar(1);  // e1 -> f1
  m.n1(3, 2) = Scalar(1);  // e2 -> f2
  m.n2 = Mat<Scalar>(4, 4);
  m.n2(3, 0) = Scalar(1);  // e1 -> f2
  m.w = Filtration<Scalar>(4);
  m.w.set(1, Subspace<Scalar>::full(4));
  m.w.set(0, Subspace<Scalar>::zero(4));
  m.f = HodgeFiltration(4);
  m.f.set(1, Subspace<GScalar>::span(4, {basis_vector<GScalar>(4, 0),
                                         basis_vector<GScalar>(4, 2)}));
  m.f.set(0, Subspace<GScalar>::full(4));
  m.y = Mat<Scalar>(4, 4);
  m.y(0, 0) = m.y(2, 2) = Scalar(2);
  return m;
}

}  // namespace models
}  // namespace nilhodge
