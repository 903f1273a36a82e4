// Acceptance suite: one line per criterion, plain pass/fail, exit 0 only
// when every criterion passes.  Each criterion re-checks a worked example
// or property end to end through the public headers.

#include "nilhodge/deligne.hpp"
#include "nilhodge/hodge.hpp"
#include "nilhodge/models.hpp"
#include "nilhodge/poly.hpp"
#include "nilhodge/weight2.hpp"

#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace nilhodge;

namespace {

Filtration<Scalar> pure_filtration(size_t dim, long k) {
  Filtration<Scalar> w(dim);
  w.set(k - 1, Subspace<Scalar>::zero(dim));
  w.set(k, Subspace<Scalar>::full(dim));
  return w;
}

bool in_span(const Mat<Scalar>& m, const std::vector<Mat<Scalar>>& basis) {
  size_t d = m.rows();
  Mat<Scalar> stacked(basis.size() + 1, d * d);
  for (size_t b = 0; b < basis.size(); ++b)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) stacked(b, i * d + j) = basis[b](i, j);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) stacked(basis.size(), i * d + j) = m(i, j);
  return stacked.rank() == basis.size();
}

// ---------------------------------------------------------------------------
// 1. the polarizing-form obstruction pipeline

bool criterion1() {
  auto m = models::infeasible_pair();
  Report rep = check_dh(DHSystem{m.w, {m.n1, m.n2}, m.f});
  if (!rep.ok()) return false;
  auto cert = polarization_feasibility({m.n1, m.n2}, m.f, 1,
                                       {"e1", "f1", "e2", "f2"});
  if (cert.feasible) return false;
  if (cert.forced_identity.find("Q(e2, f2)") == std::string::npos) return false;
  return cert.required_positive == "Q(e2, f2) > 0";
}

// ---------------------------------------------------------------------------
// 2. enumeration counts, with an independent sign-assignment oracle

size_t brute_count_spR(size_t half) {
  size_t n = 2 * half;
  // all partitions of n
  std::vector<std::vector<size_t>> parts;
  std::function<void(size_t, size_t, std::vector<size_t>&)> rec =
      [&](size_t rem, size_t mx, std::vector<size_t>& cur) {
        if (rem == 0) {
          parts.push_back(cur);
          return;
        }
        for (size_t p = std::min(rem, mx); p >= 1; --p) {
          cur.push_back(p);
          rec(rem - p, p, cur);
          cur.pop_back();
        }
      };
  std::vector<size_t> cur;
  rec(n, n, cur);
  // signs: even rows carry an independent +/- each, odd rows are blank and
  // must come in pairs; count canonical multisets of (length, sign)
  std::set<std::multiset<std::pair<size_t, int>>> seen;
  for (const auto& p : parts) {
    bool ok = true;
    std::map<size_t, size_t> mult;
    for (size_t len : p) mult[len]++;
    for (auto [len, m] : mult)
      if (len % 2 == 1 && m % 2 == 1) ok = false;
    if (!ok) continue;
    size_t evens = 0;
    for (size_t len : p)
      if (len % 2 == 0) ++evens;
    for (size_t mask = 0; mask < (size_t(1) << evens); ++mask) {
      std::multiset<std::pair<size_t, int>> key;
      size_t e = 0;
      for (size_t len : p) {
        if (len % 2 == 1)
          key.insert({len, 0});
        else
          key.insert({len, (mask >> e++) & 1 ? 1 : -1});
      }
      seen.insert(key);
    }
  }
  return seen.size();
}

bool criterion2() {
  if (enumerate_admissible(GroupSpec{GroupKind::SpC, 3}).size() != 8) return false;
  if (enumerate_admissible(GroupSpec{GroupKind::OC, 7}).size() != 7) return false;
  auto spr = enumerate_admissible(GroupSpec{GroupKind::SpR, 2});
  return spr.size() == brute_count_spR(2);
}

// ---------------------------------------------------------------------------
// 3. the closure order on the worked diagram families

bool criterion3() {
  auto diag = [](const std::string& s) { return parse_diagram(s); };
  // five non-generic limit types in the (2, *, 2) family: a chain with one
  // incomparable middle pair
  auto I = weight2::reference_diagram(weight2::H2Type::I, 9);
  auto II = weight2::reference_diagram(weight2::H2Type::II, 9);
  auto III = weight2::reference_diagram(weight2::H2Type::III, 9);
  auto IV = weight2::reference_diagram(weight2::H2Type::IV, 9);
  auto V = weight2::reference_diagram(weight2::H2Type::V, 9);
  auto lt = [](const SignedDiagram& a, const SignedDiagram& b) {
    return dokovic_leq(a, b) && !dokovic_leq(b, a);
  };
  if (!(lt(I, II) && lt(I, III) && lt(II, IV) && lt(III, IV) && lt(IV, V)))
    return false;
  if (dokovic_leq(II, III) || dokovic_leq(III, II)) return false;

  // the five degenerate limit classes on a 9-dim orthogonal space with
  // Hodge numbers (3,3,3): a total chain
  std::vector<SignedDiagram> chain = {
      diag("2 2 1+ 1- 1- 1- 1-"), diag("3- 1+ 1+ 1- 1- 1- 1-"),
      diag("3- 2 2 1- 1-"), diag("3- 3- 1+ 1- 1-"), diag("3- 3- 3-")};
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j) {
      if (i < j && !lt(chain[i], chain[j])) return false;
      if (i > j && dokovic_leq(chain[i], chain[j])) return false;
    }

  // the seven degenerate limit classes on a 6-dim symplectic space with
  // Hodge numbers (1,1,1,1,1,1): relations A < C,F; B < E,F; C < D,E;
  // D,E,F < G, transitive consequences omitted
  SignedDiagram A = diag("2+ 1 1 1 1"), B = diag("2- 2- 1 1"),
                C = diag("2+ 2+ 1 1"), D = diag("2+ 2+ 2+"), E = diag("3 3"),
                F = diag("4- 1 1"), G = diag("6+");
  std::vector<SignedDiagram> all = {A, B, C, D, E, F, G};
  auto idx = [&](const SignedDiagram& d) {
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i] == d) return i;
    return all.size();
  };
  auto edges = hasse_edges(all, dokovic_leq);
  std::set<std::pair<size_t, size_t>> covers;  // (upper, lower)
  for (auto [u, v] : edges) covers.insert({u, v});
  std::set<std::pair<size_t, size_t>> expected = {
      {idx(C), idx(A)}, {idx(F), idx(A)}, {idx(E), idx(B)}, {idx(F), idx(B)},
      {idx(D), idx(C)}, {idx(E), idx(C)}, {idx(G), idx(D)}, {idx(G), idx(E)},
      {idx(G), idx(F)}};
  return covers == expected;
}

// ---------------------------------------------------------------------------
// 4. chain gradings and deformation spaces of the two worked pairs

bool criterion4() {
  {
    auto m = models::vanishing_cycle_pair();
    DeligneSystem s{pure_filtration(4, 1), {m.n1, m.n2}, m.y};
    Chain c = build_chain(s);
    Mat<Scalar> h1(4, 4), h2(4, 4);
    h1(0, 0) = Scalar(1);
    h1(2, 2) = Scalar(-1);
    h2(1, 1) = Scalar(1);
    h2(3, 3) = Scalar(-1);
    if (c.y[0] != Mat<Scalar>::identity(4)) return false;
    if (c.h[0] != h1 || c.h[1] != h2) return false;
    std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>> extra{
        [&](const Mat<Scalar>& g) { return commutator(m.n1, g); }};
    auto basis = deformation_space(c.y[1], c.h[1], c.nplus[1], extra);
    if (basis.size() != 1 || !in_span(m.n1, basis)) return false;
  }
  {
    auto m = models::two_strings_and_line();
    DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
    Chain c = build_chain(s);
    // block gradings: H_1 = diag(2,0,-2) on the first string, H_2 on the second
    for (size_t i = 0; i < 7; ++i)
      for (size_t j = 0; j < 7; ++j) {
        Scalar e1 = (i == j && i < 3) ? Scalar(2 - 2 * long(i)) : Scalar(0);
        Scalar e2 = (i == j && i >= 3 && i < 6) ? Scalar(8 - 2 * long(i)) : Scalar(0);
        if (c.h[0](i, j) != e1 || c.h[1](i, j) != e2) return false;
      }
    std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>> extra{
        [&](const Mat<Scalar>& g) { return commutator(m.n1, g); },
        [&](const Mat<Scalar>& g) { return g.transpose() * m.gram + m.gram * g; }};
    auto basis = deformation_space(c.y[1], c.h[1], c.nplus[1], extra);
    if (basis.size() != 2) return false;
    if (!in_span(m.n1, basis) || !in_span(m.etas[1], basis)) return false;
    if (in_span(m.etas[3], basis)) return false;
    // the rejected direction fails the highest-weight test on assembly
    std::string why;
    if (extend_system(DeligneSystem{s.w, {m.n1}, c.y[1]}, m.n2, c.h[1],
                      m.etas[3], &why))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. grading uniqueness, functoriality, and the one-variable bijection

bool criterion5() {
  std::vector<DeligneSystem> fixtures;
  {
    auto m = models::vanishing_cycle_pair();
    fixtures.push_back({pure_filtration(4, 1), {m.n1, m.n2}, m.y});
  }
  {
    auto m = models::two_strings_and_line();
    fixtures.push_back({pure_filtration(7, 2), {m.n1, m.n2}, m.y});
  }
  for (const auto& s : fixtures) {
    size_t d = s.y.rows();
    Chain c = build_chain(s);
    // no component of weight -1 anywhere in the chain
    for (size_t j = 1; j <= s.vars(); ++j) {
      auto comps = ad_weight_components(s.ns[j - 1], c.y[j - 1]);
      if (comps.count(-1)) return false;
      for (auto& [wt, piece] : comps)
        if (wt > 0) return false;
    }
    // grading is basis-independent: conjugating the data conjugates the
    // output (two non-trivial changes of basis per fixture)
    size_t applied = 0;
    for (int which = 0; which < 2; ++which) {
      Mat<Scalar> g = Mat<Scalar>::identity(d);
      if (which == 0)
        g(0, d - 1) = Scalar(1);
      else
        for (size_t i = 0; i < d; ++i) g(i, i) = Scalar(2 + (i % 3));
      std::vector<Mat<Scalar>> gns;
      for (const auto& n : s.ns) gns.push_back(g * n * *g.inverse());
      Filtration<Scalar> gw(d);
      for (long k : s.w.jumps()) gw.set(k, s.w.at(k).image_under(g));
      DeligneSystem conj{gw, gns, g * s.y * *g.inverse()};
      if (!check_deligne_system(conj).ok) continue;  // g may break W; skip
      ++applied;
      Chain cc = build_chain(conj);
      for (size_t j = 0; j < c.y.size(); ++j)
        if (cc.y[j] * g != g * c.y[j]) return false;
      // the change of basis is a morphism and intertwines the gradings
      if (!is_morphism(g, s, conj)) return false;
    }
    if (applied == 0) return false;
    // one-variable normal form round-trips
    for (size_t j = 1; j <= s.vars(); ++j) {
      Filtration<Scalar> base = *filtration_of_grading(c.y[j - 1]);
      DeligneSystem one{base, {s.ns[j - 1]}, c.y[j]};
      if (!check_deligne_system(one).ok) continue;
      SplitForm sf = psi(one);
      auto back = psi_inverse(base, sf.nhat, sf.h, sf.y0, sf.nminus);
      if (!back) return false;
      if (back->ns[0] != one.ns[0] || back->y != one.y) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. the substitution semigroup, symbolically

bool criterion6() {
  auto m = models::two_strings_and_line();
  std::vector<Mat<Scalar>> qs = {m.n1, m.n2, m.n1 + m.n2};  // commuting
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = 0; j < qs.size(); ++j)
      if (!commutator(qs[i], qs[j]).is_zero_matrix()) return false;
  std::vector<Mat<Poly>> ns;
  for (const auto& q : qs) {
    Mat<Poly> x(q.rows(), q.cols());
    for (size_t r = 0; r < q.rows(); ++r)
      for (size_t c = 0; c < q.cols(); ++c) x(r, c) = Poly(q(r, c));
    ns.push_back(x);
  }
  Poly a = Poly::var(0), b = Poly::var(1);
  auto lhs = kato_phi(kato_phi(ns, a), b);
  auto rhs = kato_phi(ns, a + b);
  for (size_t j = 0; j < ns.size(); ++j)
    if (lhs[j] != rhs[j]) return false;
  auto id = kato_phi(ns, Poly(0));
  for (size_t j = 0; j < ns.size(); ++j)
    if (id[j] != ns[j]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// 7. weight filtration axioms plus exhaustive small-dimension uniqueness

// invariant subspaces adapted to the string basis: unions of string tails
std::vector<Subspace<Scalar>> adapted_invariant_subspaces(const Mat<Scalar>& n) {
  auto dec = string_decomposition(n);
  std::vector<std::vector<Vec<Scalar>>> strings;
  for (const auto& s : dec.strings) strings.push_back(s.vectors);
  std::vector<size_t> take(strings.size(), 0);
  std::vector<Subspace<Scalar>> out;
  size_t d = n.rows();
  while (true) {
    std::vector<Vec<Scalar>> vecs;
    for (size_t s = 0; s < strings.size(); ++s)
      for (size_t k = 0; k < take[s]; ++k)
        vecs.push_back(strings[s][strings[s].size() - 1 - k]);
    out.push_back(Subspace<Scalar>::span(d, vecs));
    size_t s = 0;
    while (s < strings.size() && take[s] == strings[s].size()) take[s++] = 0;
    if (s == strings.size()) break;
    ++take[s];
  }
  return out;
}

// count filtrations (over candidate steps) satisfying the two axioms
size_t count_valid_filtrations(const Mat<Scalar>& n, const Filtration<Scalar>& w,
                               long lo, long hi,
                               const std::vector<Subspace<Scalar>>& cands,
                               Filtration<Scalar>* found) {
  size_t d = n.rows();
  size_t count = 0;
  std::vector<size_t> pick;
  std::function<void(long, std::optional<size_t>)> rec =
      [&](long k, std::optional<size_t> prev) {
        if (k > hi) {
          if (!prev || !cands[*prev].is_full()) return;
          Filtration<Scalar> m(d);
          long kk = lo;
          for (size_t ix : pick) m.set(kk++, cands[ix]);
          if (!m.well_formed()) return;
          if (is_relative_monodromy_filtration(n, w, m)) {
            ++count;
            if (found) *found = m;
          }
          return;
        }
        for (size_t i = 0; i < cands.size(); ++i) {
          if (prev && !cands[i].contains(cands[*prev])) continue;
          pick.push_back(i);
          rec(k + 1, i);
          pick.pop_back();
        }
      };
  rec(lo, std::nullopt);
  return count;
}

bool criterion7() {
  // every fixture operator's weight filtration passes the verifier
  {
    auto m = models::two_strings_and_line();
    for (const auto& n : {m.n1, m.n2, m.n1 + m.n2}) {
      auto w = monodromy_filtration(n, 2);
      if (!is_relative_monodromy_filtration(n, pure_filtration(7, 2), w))
        return false;
    }
    auto d6 = models::deep_deformation_pair();
    auto w = monodromy_filtration(d6.n1 + d6.n2, 3);
    if (!is_relative_monodromy_filtration(d6.n1 + d6.n2, pure_filtration(6, 3), w))
      return false;
  }
  // exhaustive uniqueness on dim 5: one degree-2 and one degree-1 string
  {
    Mat<Scalar> n(5, 5);
    n(1, 0) = n(2, 1) = Scalar(1);  // 3-string
    n(4, 3) = Scalar(1);            // 2-string
    auto cands = adapted_invariant_subspaces(n);
    Filtration<Scalar> found;
    size_t cnt = count_valid_filtrations(n, pure_filtration(5, 0), -2, 2,
                                         cands, &found);
    if (cnt != 1) return false;
    if (found != monodromy_filtration(n, 0)) return false;
  }
  // exhaustive non-existence over a filtration the operator does not respect
  {
    Mat<Scalar> n(2, 2);
    n(1, 0) = Scalar(1);
    Filtration<Scalar> w(2);
    w.set(0, Subspace<Scalar>::span(2, {basis_vector<Scalar>(2, 1)}));
    w.set(1, Subspace<Scalar>::full(2));
    if (relative_monodromy_filtration(n, w)) return false;
    auto cands = adapted_invariant_subspaces(n);
    if (count_valid_filtrations(n, w, -2, 3, cands, nullptr) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. the explicit weight-2 frames

bool criterion8() {
  using namespace weight2;
  for (auto [a, b, c, d] : std::vector<std::array<long, 4>>{
           {2, 1, 0, 0}, {1, 2, 1, 1}, {0, 0, 2, 0}}) {
    Weight2Model md = build_model(a, b, c, d);
    // pairing identities on the frame
    for (long s = 0; s < a; ++s) {
      if (md.q(md.e(s), md.n2e(s)) != Scalar(1)) return false;
      if (md.q(md.ne(s), md.ne(s)) != Scalar(-1)) return false;
    }
    for (long j = 0; j < b; ++j)
      if (md.q(md.fj(j), md.fj(j)) != Scalar(1)) return false;
    for (long s = 0; s < c; ++s) {
      if (md.q(md.u(s), md.nv(s)) != frac(1, 2)) return false;
      if (md.q(md.v(s), md.nu(s)) != frac(-1, 2)) return false;
    }
    for (long s = 0; s < d; ++s) {
      if (md.q(md.x(s), md.x(s)) != frac(-1, 2)) return false;
      if (md.q(md.yv(s), md.yv(s)) != frac(-1, 2)) return false;
    }
    Mat<Scalar> n = md.n0 + md.n1;
    if (!is_infinitesimal_isometry(n, md.q)) return false;
    if (*filtration_of_grading(md.y) != monodromy_filtration(n, 2)) return false;
  }
  // symmetry action agrees with raw conjugation
  {
    Weight2Model md = build_model(2, 1, 2, 1);
    Mat<Scalar> dmat(2, 2), e1(2, 2), e2(3, 3), r(1, 1);
    dmat(0, 0) = dmat(1, 1) = Scalar(1);
    dmat(0, 1) = Scalar(2);
    e1(0, 0) = Scalar(2);
    e1(0, 1) = e1(1, 0) = e1(1, 1) = Scalar(1);
    e2(0, 0) = e2(2, 2) = frac(5, 3);
    e2(0, 2) = e2(2, 0) = frac(4, 3);
    e2(1, 1) = Scalar(1);
    r(0, 0) = Scalar(-1);
    LeviElement lev{dmat, e1, e2, r};
    if (!levi_valid(md, lev)) return false;
    Mat<Scalar> g = levi_embed(md, lev);
    if (g.transpose() * md.q * g != md.q) return false;
    Mat<Scalar> xm(2, 2), ym(3, 2);
    xm(0, 0) = Scalar(1);
    xm(0, 1) = xm(1, 0) = Scalar(2);
    xm(1, 1) = Scalar(3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 2; ++j) ym(i, j) = Scalar(long(2 * i + j + 1));
    Mat<Scalar> raw = g * from_g_coords(md, xm, ym) * *g.inverse();
    Mat<Scalar> law =
        from_g_coords(md, dmat * xm * dmat.transpose(), e2 * ym * e1);
    if (raw != law) return false;
  }
  // cone caps for the two-string family, any number of fixed pairs
  for (long d = 0; d <= 2; ++d)
    if (weight2::max_cone_dim(2, 1, 0, d) != 3) return false;
  // the worked three-generator cone probes at full dimension
  {
    Weight2Model md = build_model(2, 1, 0, 0);
    auto ydir = [&](std::initializer_list<std::initializer_list<long>> rows) {
      Mat<Scalar> ym(3, 2);
      size_t r = 0;
      for (auto& row : rows) {
        size_t c = 0;
        for (long v : row) ym(r, c++) = Scalar(v);
        ++r;
      }
      return from_g_coords(md, Mat<Scalar>(0, 0), ym);
    };
    auto rep = cone_check({ydir({{1, 0}, {0, 0}, {0, 0}}),
                           ydir({{1, 0}, {0, 0}, {1, 0}}),
                           ydir({{0, 0}, {0, 1}, {0, 0}})},
                          md.q, 2, &md);
    if (!rep.ok || rep.dim != 3) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 9. commuting root triples realize all five types

bool criterion9() {
  using namespace weight2;
  auto all = build_root_sl2s(9, {1, 2, 3, 4});
  for (const auto& t : all.triples) {
    if (commutator(t.nplus, t.nminus) != t.h) return false;
    if (commutator(t.h, t.nminus) != Scalar(-2) * t.nminus) return false;
    if (!is_infinitesimal_isometry(t.nminus, all.gram)) return false;
  }
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (!commutator(all.triples[i].nminus, all.triples[j].nminus)
               .is_zero_matrix())
        return false;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> sub;
    for (int r = 1; r <= 4; ++r)
      if (mask & (1 << (r - 1))) sub.push_back(r);
    auto d = build_root_sl2s(9, sub);
    auto t = classify_h2x2_type(d.generic, d.gram, 9);
    if (!t || *t != predicted_type(sub)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 10. cross-module consistency of the two diagram routes

bool criterion10() {
  // explicit split fixtures: diamond route equals the classifier
  {
    auto m = models::two_strings_and_line();
    Mat<Scalar> n = m.n1 + m.n2;
    auto big = deligne_bigrading(monodromy_filtration(n, 2), m.f);
    if (!big) return false;
    if (!(chromosome(diamond_of(*big, n, 2)) ==
          signed_diagram_of(n, BilinearForm{m.gram, 1}, 2)))
      return false;
  }
  for (auto [a, b, c, d] : std::vector<std::array<long, 4>>{
           {2, 1, 0, 0}, {1, 2, 1, 1}, {0, 0, 2, 0}, {1, 0, 0, 1}}) {
    weight2::Weight2Model md = weight2::build_model(a, b, c, d);
    Mat<Scalar> n = md.n0 + md.n1;
    auto w = filtration_of_grading(md.y);
    if (!w) return false;
    auto big = deligne_bigrading(*w, md.f);
    if (!big) return false;
    SignedDiagram direct = signed_diagram_of(n, BilinearForm{md.q, 1}, 2);
    if (!(chromosome(diamond_of(*big, n, 2)) == direct)) return false;
    // the classifier's output is an admissible diagram of the isometry group
    auto sig = diagram_signature(direct);
    auto all = enumerate_admissible(GroupSpec{GroupKind::Opq, sig.plus, sig.minus});
    bool member = false;
    for (const auto& x : all)
      if (x == direct) member = true;
    if (!member) return false;
  }
  // a skew fixture lands in the admissible symplectic list
  {
    auto m = models::deep_deformation_pair();
    SignedDiagram d = signed_diagram_of(m.n1 + m.n2, BilinearForm{m.gram, -1}, 3);
    auto all = enumerate_admissible(GroupSpec{GroupKind::SpR, 3});
    bool member = false;
    for (const auto& x : all)
      if (x == d) member = true;
    if (!member) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 11. the stabilizer predicate, both directions

bool criterion11() {
  auto m = models::vanishing_cycle_pair();
  DeligneSystem s{pure_filtration(4, 1), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  // g fixing the filtration and both sl2 pairs: conjugation leaves the
  // chain data untouched
  Mat<Scalar> good(4, 4);
  good(0, 0) = good(2, 2) = Scalar(2);
  good(1, 1) = good(3, 3) = Scalar(3);
  if (!stabilizes_chain_data(good, c, m.f)) return false;
  {
    std::vector<Mat<Scalar>> gns;
    for (const auto& n : s.ns) gns.push_back(good * n * *good.inverse());
    DeligneSystem conj{s.w, gns, good * s.y * *good.inverse()};
    Chain cc = build_chain(conj);
    for (size_t j = 0; j < c.y.size(); ++j)
      if (cc.y[j] != c.y[j]) return false;
    for (size_t j = 0; j < c.nhat.size(); ++j)
      if (cc.nhat[j] != c.nhat[j]) return false;
  }
  // g violating one pair: rejected, and the conjugated chain differs
  Mat<Scalar> bad = Mat<Scalar>::identity(4);
  bad(1, 0) = Scalar(1);
  if (stabilizes_chain_data(bad, c, m.f)) return false;
  {
    std::vector<Mat<Scalar>> gns;
    for (const auto& n : s.ns) gns.push_back(bad * n * *bad.inverse());
    DeligneSystem conj{s.w, gns, bad * s.y * *bad.inverse()};
    bool differs = false;
    try {
      Chain cc = build_chain(conj);
      for (size_t j = 0; j < c.y.size(); ++j)
        if (cc.y[j] != c.y[j]) differs = true;
      for (size_t j = 0; j < c.nhat.size(); ++j)
        if (cc.nhat[j] != c.nhat[j]) differs = true;
    } catch (const std::exception&) {
      differs = true;
    }
    if (!differs) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Item {
    const char* label;
    bool (*fn)();
  };
  const Item items[] = {
      {"criterion 1 (obstruction pipeline: axioms pass, no polarizing form)", criterion1},
      {"criterion 2 (enumeration counts with brute-force oracle)", criterion2},
      {"criterion 3 (closure order on the worked diagram families)", criterion3},
      {"criterion 4 (chain gradings and deformation dimensions)", criterion4},
      {"criterion 5 (grading uniqueness, morphisms, normal-form round trip)", criterion5},
      {"criterion 6 (substitution semigroup, symbolic)", criterion6},
      {"criterion 7 (weight filtration axioms and exhaustive uniqueness)", criterion7},
      {"criterion 8 (weight-2 frames, action law, cone caps)", criterion8},
      {"criterion 9 (root triples realize all five types)", criterion9},
      {"criterion 10 (diamond route matches the classifier; admissibility)", criterion10},
      {"criterion 11 (chain stabilizer predicate, both directions)", criterion11},
  };
  bool all = true;
  for (const auto& item : items) {
    bool ok = false;
    try {
      ok = item.fn();
    } catch (const std::exception& e) {
      std::cout << item.label << ": FAIL (exception: " << e.what() << ")\n";
      all = false;
      continue;
    }
    std::cout << item.label << (ok ? ": pass" : ": FAIL") << "\n";
    if (!ok) all = false;
  }
  return all ? 0 : 1;
}
