// Explicit models for degenerations of effective weight-2 Hodge structures:
// a standard basis with exact pairings, the reductive symmetry groups and
// their action on the space of admissible nilpotent directions, membership
// tests for the open orbits, nilpotent-cone probing, the five-type
// classification for Hodge numbers (2, *, 2), and commuting root-sl2
// constructions realizing all five types.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilhodge/classify.hpp"
#include "nilhodge/deligne.hpp"
#include "nilhodge/diagrams.hpp"
#include "nilhodge/filtration.hpp"
#include "nilhodge/hodge.hpp"

namespace nilhodge {
namespace weight2 {

// ---------------------------------------------------------------------------
// The model space.
//
// Parameters (a, b, c, d): a = dim of the deepest (2,2) piece, a + b = dim
// of the (1,1) piece, c = dim of the (2,1) piece, d = dim of the (2,0)
// piece; so h^{2,0} = a + c + d and h^{1,1} = a + b + 2c.
//
// Real basis, in order:
//   e_s (a), Ne_s (a), f_j (b), N^2e_s (a)      -- the V0 block
//   u_s, v_s, Nu_s, Nv_s (c each)               -- the V1 block
//   x_s, y_s (d each)                           -- the V2 block
// with pairings Q(e_s, N^2 e_t) = d_st, Q(Ne_s, Ne_t) = -d_st,
// Q(f_j, f_k) = d_jk, Q(u_s, Nv_t) = -Q(v_s, Nu_t) = d_st / 2, and
// Q(x_s, x_t) = Q(y_s, y_t) = -d_st / 2.

struct Weight2Model {
  long a = 0, b = 0, c = 0, d = 0;
  size_t dim = 0;
  Mat<Scalar> q;        // the polarization form (symmetric)
  Mat<Scalar> n0, n1;   // standard nilpotents on the V0 / V1 blocks
  Mat<Scalar> y;        // grading operator: multiplies I^{p,q} by p + q
  HodgeFiltration f;    // split limit Hodge filtration
  std::map<std::pair<long, long>, Subspace<GScalar>> pieces;

  // basis index helpers
  size_t e(long s) const { return static_cast<size_t>(s); }
  size_t ne(long s) const { return static_cast<size_t>(a + s); }
  size_t fj(long j) const { return static_cast<size_t>(2 * a + j); }
  size_t n2e(long s) const { return static_cast<size_t>(2 * a + b + s); }
  size_t u(long s) const { return static_cast<size_t>(3 * a + b + s); }
  size_t v(long s) const { return static_cast<size_t>(3 * a + b + c + s); }
  size_t nu(long s) const { return static_cast<size_t>(3 * a + b + 2 * c + s); }
  size_t nv(long s) const { return static_cast<size_t>(3 * a + b + 3 * c + s); }
  size_t x(long s) const { return static_cast<size_t>(3 * a + b + 4 * c + s); }
  size_t yv(long s) const { return static_cast<size_t>(3 * a + b + 4 * c + d + s); }

  long h20() const { return a + c + d; }
  long h11() const { return a + b + 2 * c; }
  long m() const { return 2 * h20() + h11(); }
};

inline Weight2Model build_model(long a, long b, long c, long d) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || a + b + c + d == 0)
    throw std::invalid_argument("build_model: invalid dimensions");
  Weight2Model md;
  md.a = a;
  md.b = b;
  md.c = c;
  md.d = d;
  size_t n = static_cast<size_t>(3 * a + b + 4 * c + 2 * d);
  md.dim = n;
  md.q = Mat<Scalar>(n, n);
  md.n0 = Mat<Scalar>(n, n);
  md.n1 = Mat<Scalar>(n, n);
  md.y = Mat<Scalar>(n, n);
  Scalar half(1);
  half /= 2;
  for (long s = 0; s < a; ++s) {
    md.q(md.e(s), md.n2e(s)) = md.q(md.n2e(s), md.e(s)) = Scalar(1);
    md.q(md.ne(s), md.ne(s)) = Scalar(-1);
    md.n0(md.ne(s), md.e(s)) = Scalar(1);
    md.n0(md.n2e(s), md.ne(s)) = Scalar(1);
    md.y(md.e(s), md.e(s)) = Scalar(4);
    md.y(md.ne(s), md.ne(s)) = Scalar(2);
  }
  for (long j = 0; j < b; ++j) {
    md.q(md.fj(j), md.fj(j)) = Scalar(1);
    md.y(md.fj(j), md.fj(j)) = Scalar(2);
  }
  for (long s = 0; s < c; ++s) {
    md.q(md.u(s), md.nv(s)) = md.q(md.nv(s), md.u(s)) = half;
    md.q(md.v(s), md.nu(s)) = md.q(md.nu(s), md.v(s)) = -half;
    md.n1(md.nu(s), md.u(s)) = Scalar(1);
    md.n1(md.nv(s), md.v(s)) = Scalar(1);
    md.y(md.u(s), md.u(s)) = md.y(md.v(s), md.v(s)) = Scalar(3);
    md.y(md.nu(s), md.nu(s)) = md.y(md.nv(s), md.nv(s)) = Scalar(1);
  }
  for (long s = 0; s < d; ++s) {
    md.q(md.x(s), md.x(s)) = -half;
    md.q(md.yv(s), md.yv(s)) = -half;
    md.y(md.x(s), md.x(s)) = md.y(md.yv(s), md.yv(s)) = Scalar(2);
  }

  // the split bigrading
  GScalar gi(Scalar(0), Scalar(1));
  auto bv = [&](size_t i) { return basis_vector<GScalar>(n, i); };
  auto add_piece = [&](long p, long qq, std::vector<Vec<GScalar>> vs) {
    if (vs.empty()) return;
    md.pieces[{p, qq}] = Subspace<GScalar>::span(n, vs);
  };
  std::vector<Vec<GScalar>> p22, p11, p00, p21, p12, p10, p01, p20, p02;
  for (long s = 0; s < a; ++s) {
    p22.push_back(bv(md.e(s)));
    p11.push_back(bv(md.ne(s)));
    p00.push_back(bv(md.n2e(s)));
  }
  for (long j = 0; j < b; ++j) p11.push_back(bv(md.fj(j)));
  for (long s = 0; s < c; ++s) {
    Vec<GScalar> w = bv(md.u(s)), wb = bv(md.u(s));
    w[md.v(s)] = gi;
    wb[md.v(s)] = -gi;
    p21.push_back(w);
    p12.push_back(wb);
    Vec<GScalar> nw = bv(md.nu(s)), nwb = bv(md.nu(s));
    nw[md.nv(s)] = gi;
    nwb[md.nv(s)] = -gi;
    p10.push_back(nw);
    p01.push_back(nwb);
  }
  for (long s = 0; s < d; ++s) {
    Vec<GScalar> z = bv(md.x(s)), zb = bv(md.x(s));
    z[md.yv(s)] = gi;
    zb[md.yv(s)] = -gi;
    p20.push_back(z);
    p02.push_back(zb);
  }
  add_piece(2, 2, p22);
  add_piece(1, 1, p11);
  add_piece(0, 0, p00);
  add_piece(2, 1, p21);
  add_piece(1, 2, p12);
  add_piece(1, 0, p10);
  add_piece(0, 1, p01);
  add_piece(2, 0, p20);
  add_piece(0, 2, p02);

  md.f = HodgeFiltration(n);
  std::vector<Vec<GScalar>> f2 = p22, f1;
  for (auto& w : p21) f2.push_back(w);
  for (auto& z : p20) f2.push_back(z);
  f1 = f2;
  for (auto& w : p11) f1.push_back(w);
  for (auto& w : p12) f1.push_back(w);
  for (auto& w : p10) f1.push_back(w);
  md.f.set(2, f2.empty() ? Subspace<GScalar>::zero(n) : Subspace<GScalar>::span(n, f2));
  md.f.set(1, f1.empty() ? Subspace<GScalar>::zero(n) : Subspace<GScalar>::span(n, f1));
  md.f.set(0, Subspace<GScalar>::full(n));
  return md;
}

// ---------------------------------------------------------------------------
// Coordinates on the space of admissible nilpotent directions: a symmetric
// c x c matrix X (the V1 part) and an (a+b) x a matrix Y (the V0 part).

inline Mat<Scalar> from_g_coords(const Weight2Model& md, const Mat<Scalar>& xm,
                                 const Mat<Scalar>& ym) {
  if (xm.rows() != static_cast<size_t>(md.c) || xm.cols() != static_cast<size_t>(md.c) ||
      ym.rows() != static_cast<size_t>(md.a + md.b) || ym.cols() != static_cast<size_t>(md.a))
    throw std::invalid_argument("from_g_coords: wrong shapes");
  if (xm != xm.transpose()) throw std::invalid_argument("from_g_coords: X not symmetric");
  Mat<Scalar> n(md.dim, md.dim);
  for (long s = 0; s < md.c; ++s)
    for (long t = 0; t < md.c; ++t) {
      n(md.nu(t), md.u(s)) = xm(static_cast<size_t>(t), static_cast<size_t>(s));
      n(md.nv(t), md.v(s)) = xm(static_cast<size_t>(t), static_cast<size_t>(s));
    }
  for (long s = 0; s < md.a; ++s) {
    for (long i = 0; i < md.a; ++i)
      n(md.ne(i), md.e(s)) = ym(static_cast<size_t>(i), static_cast<size_t>(s));
    for (long j = 0; j < md.b; ++j)
      n(md.fj(j), md.e(s)) = ym(static_cast<size_t>(md.a + j), static_cast<size_t>(s));
  }
  // the induced map to the bottom block is forced by the isometry condition
  for (long t = 0; t < md.a; ++t)
    for (long s = 0; s < md.a; ++s)
      n(md.n2e(s), md.ne(t)) = ym(static_cast<size_t>(t), static_cast<size_t>(s));
  for (long j = 0; j < md.b; ++j)
    for (long s = 0; s < md.a; ++s)
      n(md.n2e(s), md.fj(j)) = -ym(static_cast<size_t>(md.a + j), static_cast<size_t>(s));
  return n;
}

struct GCoords {
  Mat<Scalar> x;  // symmetric c x c
  Mat<Scalar> y;  // (a+b) x a
};

inline std::optional<GCoords> to_g_coords(const Weight2Model& md, const Mat<Scalar>& n) {
  if (n.rows() != md.dim || n.cols() != md.dim) return std::nullopt;
  Mat<Scalar> xm(static_cast<size_t>(md.c), static_cast<size_t>(md.c));
  Mat<Scalar> ym(static_cast<size_t>(md.a + md.b), static_cast<size_t>(md.a));
  for (long s = 0; s < md.c; ++s)
    for (long t = 0; t < md.c; ++t)
      xm(static_cast<size_t>(t), static_cast<size_t>(s)) = n(md.nu(t), md.u(s));
  if (xm != xm.transpose()) return std::nullopt;
  for (long s = 0; s < md.a; ++s) {
    for (long i = 0; i < md.a; ++i)
      ym(static_cast<size_t>(i), static_cast<size_t>(s)) = n(md.ne(i), md.e(s));
    for (long j = 0; j < md.b; ++j)
      ym(static_cast<size_t>(md.a + j), static_cast<size_t>(s)) = n(md.fj(j), md.e(s));
  }
  if (from_g_coords(md, xm, ym) != n) return std::nullopt;
  return GCoords{xm, ym};
}

// ---------------------------------------------------------------------------
// The reductive symmetry group preserving the bigrading: block elements
// (D; E1, E2; R) with D in GL(c), E1 in GL(a), E2 preserving the signature
// (-1_a, 1_b) pairing on the middle block, and R orthogonal on the V2 block.

struct LeviElement {
  Mat<Scalar> dmat;  // c x c invertible
  Mat<Scalar> e1;    // a x a invertible
  Mat<Scalar> e2;    // (a+b) x (a+b), preserves diag(-1_a, 1_b)
  Mat<Scalar> r;     // d x d orthogonal
};

inline LeviElement levi_identity(const Weight2Model& md) {
  return LeviElement{Mat<Scalar>::identity(static_cast<size_t>(md.c)),
                     Mat<Scalar>::identity(static_cast<size_t>(md.a)),
                     Mat<Scalar>::identity(static_cast<size_t>(md.a + md.b)),
                     Mat<Scalar>::identity(static_cast<size_t>(md.d))};
}

inline bool levi_valid(const Weight2Model& md, const LeviElement& g) {
  size_t a = static_cast<size_t>(md.a), b = static_cast<size_t>(md.b);
  if (g.dmat.rows() != static_cast<size_t>(md.c) || g.e1.rows() != a ||
      g.e2.rows() != a + b || g.r.rows() != static_cast<size_t>(md.d))
    return false;
  if (is_zero(g.dmat.det()) || is_zero(g.e1.det())) return false;
  Mat<Scalar> oneab(a + b, a + b);
  for (size_t i = 0; i < a; ++i) oneab(i, i) = Scalar(-1);
  for (size_t i = a; i < a + b; ++i) oneab(i, i) = Scalar(1);
  if (g.e2.transpose() * oneab * g.e2 != oneab) return false;
  if (g.r.transpose() * g.r != Mat<Scalar>::identity(static_cast<size_t>(md.d))) return false;
  return true;
}

inline Mat<Scalar> levi_embed(const Weight2Model& md, const LeviElement& g) {
  if (!levi_valid(md, g)) throw std::invalid_argument("levi_embed: invalid element");
  Mat<Scalar> m(md.dim, md.dim);
  Mat<Scalar> e1inv = *g.e1.inverse();
  Mat<Scalar> e1t = g.e1.transpose();
  Mat<Scalar> dti = *g.dmat.transpose().inverse();
  for (long s = 0; s < md.a; ++s)
    for (long t = 0; t < md.a; ++t) {
      m(md.e(t), md.e(s)) = e1inv(static_cast<size_t>(t), static_cast<size_t>(s));
      m(md.n2e(t), md.n2e(s)) = e1t(static_cast<size_t>(t), static_cast<size_t>(s));
    }
  auto mid = [&](long i) { return i < md.a ? md.ne(i) : md.fj(i - md.a); };
  for (long s = 0; s < md.a + md.b; ++s)
    for (long t = 0; t < md.a + md.b; ++t)
      m(mid(t), mid(s)) = g.e2(static_cast<size_t>(t), static_cast<size_t>(s));
  for (long s = 0; s < md.c; ++s)
    for (long t = 0; t < md.c; ++t) {
      m(md.u(t), md.u(s)) = dti(static_cast<size_t>(t), static_cast<size_t>(s));
      m(md.v(t), md.v(s)) = dti(static_cast<size_t>(t), static_cast<size_t>(s));
      m(md.nu(t), md.nu(s)) = g.dmat(static_cast<size_t>(t), static_cast<size_t>(s));
      m(md.nv(t), md.nv(s)) = g.dmat(static_cast<size_t>(t), static_cast<size_t>(s));
    }
  for (long s = 0; s < md.d; ++s)
    for (long t = 0; t < md.d; ++t) {
      m(md.x(t), md.x(s)) = g.r(static_cast<size_t>(t), static_cast<size_t>(s));
      m(md.yv(t), md.yv(s)) = g.r(static_cast<size_t>(t), static_cast<size_t>(s));
    }
  return m;
}

// ---------------------------------------------------------------------------
// Open-orbit membership.

// exact positive-definiteness via leading principal minors
inline bool spd(const Mat<Scalar>& g) {
  if (g != g.transpose()) return false;
  for (size_t k = 1; k <= g.rows(); ++k) {
    Mat<Scalar> lead(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    if (!(lead.det() > 0)) return false;
  }
  return true;
}

inline bool in_x_orbit(const Mat<Scalar>& xm) { return spd(xm); }

// Gram matrix of the squared map: alpha^t alpha - beta^t beta
inline Mat<Scalar> y_gram(const Weight2Model& md, const Mat<Scalar>& ym) {
  size_t a = static_cast<size_t>(md.a), b = static_cast<size_t>(md.b);
  Mat<Scalar> oneab(a + b, a + b);
  for (size_t i = 0; i < a; ++i) oneab(i, i) = Scalar(-1);
  for (size_t i = a; i < a + b; ++i) oneab(i, i) = Scalar(1);
  return (ym.transpose() * oneab * ym) * Scalar(-1);
}

inline bool in_y_cone(const Weight2Model& md, const Mat<Scalar>& ym) {
  if (md.a == 0) return true;
  return spd(y_gram(md, ym));
}

// connected component tag: the top a x a block must have positive
// determinant, matching the component of the standard direction
inline bool in_y0_orbit(const Weight2Model& md, const Mat<Scalar>& ym) {
  if (!in_y_cone(md, ym)) return false;
  if (md.a == 0) return true;
  size_t a = static_cast<size_t>(md.a);
  Mat<Scalar> top(a, a);
  for (size_t i = 0; i < a; ++i)
    for (size_t j = 0; j < a; ++j) top(i, j) = ym(i, j);
  return top.det() > 0;
}

struct Membership {
  bool in_g11 = false;  // lies in the (-1,-1) coordinate space at all
  bool in_x = false;
  bool in_y = false;
  bool in_y0 = false;
  bool ok() const { return in_g11 && in_x && in_y0; }
};

inline Membership orbit_membership(const Weight2Model& md, const Mat<Scalar>& n) {
  Membership r;
  auto gc = to_g_coords(md, n);
  if (!gc) return r;
  r.in_g11 = true;
  r.in_x = in_x_orbit(gc->x);
  r.in_y = in_y_cone(md, gc->y);
  r.in_y0 = in_y0_orbit(md, gc->y);
  return r;
}

// ---------------------------------------------------------------------------
// Dimension formulas.

inline std::optional<long> max_cone_dim(long a, long b, long c, long /*d*/) {
  if (a == 0 || a == 1) return a * (a + b) + c * (c + 1) / 2;
  if (a == 2) return (2 + b) + c * (c + 1) / 2;
  return std::nullopt;  // deeper cases need the general orbit machinery
}

inline long real_rank_bound(long a, long b, long c) {
  return c + std::min(2 * a, a + b);
}

inline bool hermitian_v0_factor(long a) { return a <= 1; }

// ---------------------------------------------------------------------------
// Bigraded pieces of the isometry algebra (over C), for the structural
// Hermitian / contact dichotomy of the V0 factor.

inline size_t g_pq_dim(const Weight2Model& md, long r, long s) {
  size_t n = md.dim;
  Mat<GScalar> qc = complexify(md.q);
  std::vector<Vec<GScalar>> rows;
  auto idx = [&](size_t i, size_t j) { return i * n + j; };
  // isometry: (M^t Q + Q M)_{ij} = 0
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec<GScalar> row(n * n, GScalar());
      for (size_t k = 0; k < n; ++k) {
        row[idx(k, i)] += qc(k, j);
        row[idx(k, j)] += qc(i, k);
      }
      rows.push_back(std::move(row));
    }
  // block conditions: M maps each piece into the target piece
  for (auto& [pq, piece] : md.pieces) {
    std::pair<long, long> tgt{pq.first + r, pq.second + s};
    auto it = md.pieces.find(tgt);
    Mat<GScalar> ann = it == md.pieces.end()
                           ? Mat<GScalar>::identity(n)
                           : it->second.annihilator();
    for (auto& w : piece.basis())
      for (size_t ai = 0; ai < ann.rows(); ++ai) {
        Vec<GScalar> row(n * n, GScalar());
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) row[idx(i, j)] += ann(ai, i) * w[j];
        rows.push_back(std::move(row));
      }
  }
  Mat<GScalar> a(rows.size(), n * n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n * n; ++j) a(i, j) = rows[i][j];
  return a.kernel_basis().size();
}

inline bool contact_v0_factor(const Weight2Model& md) {
  return g_pq_dim(md, 2, 2) == 1;
}

// abelian test for the nilpotent-direction space
inline bool g11_abelian(const Weight2Model& md) {
  std::vector<Mat<Scalar>> basis;
  for (long i = 0; i < md.c; ++i)
    for (long j = i; j < md.c; ++j) {
      Mat<Scalar> xm(static_cast<size_t>(md.c), static_cast<size_t>(md.c));
      xm(static_cast<size_t>(i), static_cast<size_t>(j)) = Scalar(1);
      xm(static_cast<size_t>(j), static_cast<size_t>(i)) = Scalar(1);
      basis.push_back(from_g_coords(
          md, xm, Mat<Scalar>(static_cast<size_t>(md.a + md.b), static_cast<size_t>(md.a))));
    }
  for (long i = 0; i < md.a + md.b; ++i)
    for (long j = 0; j < md.a; ++j) {
      Mat<Scalar> ym(static_cast<size_t>(md.a + md.b), static_cast<size_t>(md.a));
      ym(static_cast<size_t>(i), static_cast<size_t>(j)) = Scalar(1);
      basis.push_back(from_g_coords(md, Mat<Scalar>(static_cast<size_t>(md.c), static_cast<size_t>(md.c)), ym));
    }
  for (auto& m1 : basis)
    for (auto& m2 : basis)
      if (!commutator(m1, m2).is_zero_matrix()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The five types for Hodge numbers (2, *, 2).

enum class H2Type { I, II, III, IV, V };

inline std::string type_name(H2Type t) {
  switch (t) {
    case H2Type::I: return "I";
    case H2Type::II: return "II";
    case H2Type::III: return "III";
    case H2Type::IV: return "IV";
    case H2Type::V: return "V";
  }
  return "?";
}

// (a, c, d) of the limit Hodge diamond for each type
inline std::tuple<long, long, long> type_params(H2Type t) {
  switch (t) {
    case H2Type::I: return {0, 1, 1};
    case H2Type::II: return {1, 0, 1};
    case H2Type::III: return {0, 2, 0};
    case H2Type::IV: return {1, 1, 0};
    case H2Type::V: return {2, 0, 0};
  }
  throw std::logic_error("type_params");
}

// the class of the standard nilpotent of the given type on an m-dim space
inline SignedDiagram reference_diagram(H2Type t, long m) {
  auto [a, c, d] = type_params(t);
  long b = m - 4 - a - 2 * c;
  if (b < 0) throw std::invalid_argument("reference_diagram: m too small for this type");
  Weight2Model md = build_model(a, b, c, d);
  return signed_diagram_of(md.n0 + md.n1, BilinearForm{md.q, 1}, 2);
}

inline std::optional<H2Type> classify_h2x2_type(const Mat<Scalar>& n,
                                                const Mat<Scalar>& gram, long m) {
  SignedDiagram diag = signed_diagram_of(n, BilinearForm{gram, 1}, 2);
  for (H2Type t : {H2Type::I, H2Type::II, H2Type::III, H2Type::IV, H2Type::V}) {
    auto [a, c, d] = type_params(t);
    if (m - 4 - a - 2 * c < 0) continue;
    if (diag == reference_diagram(t, m)) return t;
  }
  return std::nullopt;
}

// closure-order constraints on the types of faces of a cone of each type
struct FaceRules {
  std::vector<H2Type> allowed;
  std::map<H2Type, long> max_face_dim;  // entries only where a bound applies
};

inline FaceRules face_constraints(H2Type t) {
  FaceRules r;
  switch (t) {
    case H2Type::I: r.allowed = {H2Type::I}; break;
    case H2Type::II: r.allowed = {H2Type::I, H2Type::II}; break;
    case H2Type::III: r.allowed = {H2Type::I, H2Type::III}; break;
    case H2Type::IV:
      r.allowed = {H2Type::I, H2Type::II, H2Type::III, H2Type::IV};
      break;
    case H2Type::V:
      r.allowed = {H2Type::I, H2Type::II, H2Type::III, H2Type::IV, H2Type::V};
      break;
  }
  r.max_face_dim[H2Type::I] = 1;
  r.max_face_dim[H2Type::III] = 3;
  return r;
}

// ---------------------------------------------------------------------------
// Cone probing: sound-but-incomplete verification that an open cone of
// commuting nilpotent isometries has a constant weight filtration (and a
// constant conjugacy class), with optional open-orbit membership when a
// model frame is supplied.  All positively-spanned interior checks use a
// finite probe set, so the report always says "probed", never "proved".

struct ConeReport {
  bool ok = true;
  size_t dim = 0;
  std::vector<std::string> log;
  std::string text() const {
    std::ostringstream os;
    for (auto& l : log) os << l << "\n";
    return os.str();
  }
};

inline ConeReport cone_check(const std::vector<Mat<Scalar>>& gens,
                             const Mat<Scalar>& gram, long weight,
                             const Weight2Model* model = nullptr) {
  ConeReport rep;
  auto note = [&](bool pass, const std::string& msg) {
    rep.log.push_back(std::string(pass ? "[ok]   " : "[FAIL] ") + msg);
    if (!pass) rep.ok = false;
  };
  if (gens.empty()) {
    note(false, "no generators");
    return rep;
  }
  size_t n = gens[0].rows();
  bool structural = true;
  for (auto& g : gens)
    if (!is_nilpotent(g) || !is_infinitesimal_isometry(g, gram)) structural = false;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(gens[i], gens[j]).is_zero_matrix()) structural = false;
  note(structural, "generators are commuting nilpotent isometries");
  if (!structural) return rep;

  // dimension of the cone = rank of the generator span
  Mat<Scalar> span(gens.size(), n * n);
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) span(g, i * n + j) = gens[g](i, j);
  rep.dim = span.rank();
  rep.log.push_back("[ok]   cone dimension " + std::to_string(rep.dim));

  // interior probe points: barycenter, plus points shifted toward each
  // generator and each generator pair
  std::vector<Mat<Scalar>> probes;
  Mat<Scalar> bar(n, n);
  for (auto& g : gens) bar += g;
  probes.push_back(bar);
  for (auto& g : gens) probes.push_back(bar + g + g);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      probes.push_back(bar + gens[i] + gens[j]);

  Filtration<Scalar> w0 = monodromy_filtration(probes[0], weight);
  bool wconst = true;
  for (auto& p : probes)
    if (!(monodromy_filtration(p, weight) == w0)) wconst = false;
  note(wconst, "weight filtration constant on " + std::to_string(probes.size()) +
                   " interior probe points (probed, not proved)");

  SignedDiagram d0 = signed_diagram_of(probes[0], BilinearForm{gram, weight % 2 == 0 ? 1 : -1}, weight);
  bool dconst = true;
  for (auto& p : probes)
    if (!(signed_diagram_of(p, BilinearForm{gram, weight % 2 == 0 ? 1 : -1}, weight) == d0))
      dconst = false;
  note(dconst, "conjugacy class " + to_text(d0) +
                   " constant on interior probes (probed, not proved)");

  // faces: every proper generator subset must degenerate downward
  if (gens.size() <= 6) {
    for (size_t mask = 1; mask + 1 < (size_t(1) << gens.size()); ++mask) {
      Mat<Scalar> face(n, n);
      std::string which;
      for (size_t i = 0; i < gens.size(); ++i)
        if (mask & (size_t(1) << i)) {
          face += gens[i];
          which += (which.empty() ? "" : ",") + std::to_string(i + 1);
        }
      SignedDiagram fd =
          signed_diagram_of(face, BilinearForm{gram, weight % 2 == 0 ? 1 : -1}, weight);
      bool leq = dokovic_leq(fd, d0);
      std::string line = "face {" + which + "}: " + to_text(fd);
      if (weight == 2) {
        auto t = classify_h2x2_type(face, gram, static_cast<long>(n));
        if (t) line += " (type " + type_name(*t) + ")";
      }
      note(leq, line + (leq ? " lies below the cone class" : " does not lie below the cone class"));
    }
  }

  if (model) {
    bool mem = true;
    for (auto& p : probes) {
      Membership ms = orbit_membership(*model, p);
      if (!ms.ok()) mem = false;
    }
    note(mem, "interior probes lie in the open orbit of the model frame (probed, not proved)");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Commuting root sl2s on R^m with the anti-diagonal pairing
// Q(e_j, e_k) = delta_{j+k, m+1}.  Four distinguished commuting root
// directions realize all five types via generic sums.

struct RootSl2 {
  Mat<Scalar> nminus, h, nplus;
};

struct RootSystemData {
  long m = 0;
  Mat<Scalar> gram;
  std::vector<RootSl2> triples;  // one per requested root, in index order
  std::vector<int> roots;        // the requested subset of {1,2,3,4}
  Mat<Scalar> generic;           // a generic nilnegative of the subset
};

inline Mat<Scalar> antidiag_gram(long m) {
  Mat<Scalar> q(static_cast<size_t>(m), static_cast<size_t>(m));
  for (long j = 1; j <= m; ++j)
    q(static_cast<size_t>(j - 1), static_cast<size_t>(m - j)) = Scalar(1);
  return q;
}

inline RootSystemData build_root_sl2s(long m, const std::vector<int>& subset) {
  if (m < 8) throw std::invalid_argument("build_root_sl2s: need m >= 8");
  std::set<int> sel(subset.begin(), subset.end());
  for (int r : sel)
    if (r < 1 || r > 4) throw std::invalid_argument("build_root_sl2s: roots are 1..4");
  if (sel.empty()) throw std::invalid_argument("build_root_sl2s: empty subset");
  RootSystemData out;
  out.m = m;
  out.gram = antidiag_gram(m);
  // matrix unit e_j^k maps e_k to e_j (1-indexed)
  auto unit = [&](long j, long k) {
    Mat<Scalar> e(static_cast<size_t>(m), static_cast<size_t>(m));
    e(static_cast<size_t>(j - 1), static_cast<size_t>(k - 1)) = Scalar(1);
    return e;
  };
  auto pair_for = [&](int r) -> std::pair<Mat<Scalar>, Mat<Scalar>> {
    switch (r) {
      case 1: return {unit(3, 2) - unit(m - 1, m - 2), unit(2, 3) - unit(m - 2, m - 1)};
      case 2: return {unit(4, 1) - unit(m, m - 3), unit(1, 4) - unit(m - 3, m)};
      case 3: return {unit(m - 2, 2) - unit(m - 1, 3), unit(2, m - 2) - unit(3, m - 1)};
      default: return {unit(m - 3, 1) - unit(m, 4), unit(1, m - 3) - unit(4, m)};
    }
  };
  // sign pattern making the generic sums positively curved on the long strings
  std::map<int, Scalar> coeff{{1, Scalar(1)}, {2, Scalar(1)}, {3, Scalar(-1)}, {4, Scalar(-1)}};
  Mat<Scalar> gen(static_cast<size_t>(m), static_cast<size_t>(m));
  for (int r : sel) {
    auto [nm, np] = pair_for(r);
    RootSl2 t{nm, commutator(np, nm), np};
    out.triples.push_back(t);
    out.roots.push_back(r);
    gen += nm * coeff[r];
  }
  out.generic = gen;
  return out;
}

// the type predicted for each generic nilnegative of a root subset
inline H2Type predicted_type(const std::vector<int>& subset) {
  std::set<int> s(subset.begin(), subset.end());
  if (s.size() == 1) return H2Type::I;
  if (s.size() == 2) {
    if (s == std::set<int>{1, 3} || s == std::set<int>{2, 4}) return H2Type::II;
    return H2Type::III;
  }
  if (s.size() == 3) return H2Type::IV;
  return H2Type::V;
}

}  // namespace weight2
}  // namespace nilhodge
