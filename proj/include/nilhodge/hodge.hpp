#pragma once

// Hodge-theoretic layer: mixed-Hodge-structure predicates, axiom
// checkers for filtered systems of commuting nilpotents, polarization
// feasibility with exact certificates, the signed-diagram map of a
// split polarized structure, and direct-summand search for sub-objects.
//
// All limit data is required to be split over R; non-split inputs are
// reported as failures of the corresponding check, never approximated.

#include "nilhodge/deligne.hpp"

#include <sstream>

namespace nilhodge {

// ---- reports

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  bool ok() const {
    for (auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  std::string text() const {
    std::ostringstream os;
    for (auto& it : items) {
      os << (it.pass ? "pass" : "FAIL") << "  " << it.name;
      if (!it.detail.empty()) os << "  (" << it.detail << ")";
      os << "\n";
    }
    return os.str();
  }
};

// ---- Hodge-structure predicates

// F induces a pure structure of weight k: F^p (+) conj(F^{k+1-p}) = V
// for every p.
inline bool is_pure_hodge_structure(const DecFiltration<GScalar>& f, long k) {
  size_t d = f.ambient();
  for (long p : f.jumps()) {
    Subspace<GScalar> a = f.at(p);
    Subspace<GScalar> b = conj(f.at(k + 1 - p));
    if (a.dim() + b.dim() != d) return false;
    if (intersect(a, b).dim() != 0) return false;
  }
  return true;
}

// Restriction of a complex filtration to a complexified real subspace,
// in the coordinates of sc.
inline DecFiltration<GScalar> restrict_hodge(const SubCoords<GScalar>& sc,
                                             const DecFiltration<GScalar>& f) {
  DecFiltration<GScalar> r(sc.dim());
  for (const auto& [p, s] : f.raw()) r.set(p, sc.restrict_space(s));
  return r;
}

// Induced filtration on the graded piece Gr_k of w; the quotient lifts
// are canonical-basis vectors, hence real, so coordinatewise conj on
// the quotient matches conjugation upstairs.
inline DecFiltration<GScalar> induced_hodge_on_graded(const Filtration<Scalar>& w, long k,
                                                      const DecFiltration<GScalar>& f,
                                                      const QuotientSpace<GScalar>& q) {
  Filtration<GScalar> wc = complexify(w);
  DecFiltration<GScalar> r(q.dim());
  for (long p : f.jumps()) r.set(p, q.image(intersect(f.at(p), wc.at(k))));
  return r;
}

// (F, W) is a mixed Hodge structure: every graded piece is pure of its
// weight.
inline bool is_mixed_hodge_structure(const DecFiltration<GScalar>& f,
                                     const Filtration<Scalar>& w) {
  if (f.ambient() != w.ambient() || !f.well_formed() || !w.well_formed()) return false;
  Filtration<GScalar> wc = complexify(w);
  for (long k : w.jumps()) {
    QuotientSpace<GScalar> q(wc.at(k - 1), wc.at(k));
    if (!is_pure_hodge_structure(induced_hodge_on_graded(w, k, f, q), k)) return false;
  }
  return true;
}

// ---- the filtered-system checker (conditions (a)-(d), (f1), (f2))

struct DHSystem {
  Filtration<Scalar> w;
  std::vector<Mat<Scalar>> ns;
  HodgeFiltration f;
};

inline Report check_dh(const DHSystem& s) {
  Report rep;
  size_t d = s.w.ambient();
  // (a) commuting nilpotents preserving W
  bool a_ok = s.w.well_formed();
  for (size_t j = 0; j < s.ns.size() && a_ok; ++j) {
    if (!is_nilpotent(s.ns[j]) || !preserves_filtration(s.ns[j], s.w)) a_ok = false;
    for (size_t l = j + 1; l < s.ns.size() && a_ok; ++l)
      if (!commutator(s.ns[j], s.ns[l]).is_zero_matrix()) a_ok = false;
  }
  rep.add("(a) commuting nilpotents preserving W", a_ok);
  if (!a_ok) return rep;

  // (b) all iterated relative weight filtrations exist
  std::vector<Filtration<Scalar>> tower{s.w.normalized()};
  bool b_ok = true;
  std::string b_msg;
  for (size_t j = 0; j < s.ns.size(); ++j) {
    auto m = relative_monodromy_filtration(s.ns[j], tower[j]);
    if (!m) {
      b_ok = false;
      b_msg = "step " + std::to_string(j + 1) + " has no relative weight filtration";
      break;
    }
    tower.push_back(m->normalized());
  }
  rep.add("(b) relative weight filtrations exist", b_ok, b_msg);
  if (!b_ok) return rep;
  size_t r = s.ns.size();

  // (c) restriction to the steps of earlier filtrations
  bool c_ok = true;
  std::string c_msg;
  for (size_t j = 1; j <= r && c_ok; ++j)
    for (size_t k = 0; k + 1 < j && c_ok; ++k)
      for (long l : tower[k].jumps()) {
        Subspace<Scalar> u = tower[k].at(l);
        if (u.is_full() || u.dim() == 0) continue;
        SubCoords<Scalar> sc(u);
        if (!u.contains(u.image_under(s.ns[j - 1]))) {
          c_ok = false;
          c_msg = "operator " + std::to_string(j) + " leaves a step";
          break;
        }
        auto mr = relative_monodromy_filtration(sc.restrict_op(s.ns[j - 1]),
                                                sc.restrict_filtration(tower[j - 1]));
        if (!mr || *mr != sc.restrict_filtration(tower[j])) {
          c_ok = false;
          c_msg = "restricted relative filtration mismatch at step W^" +
                  std::to_string(k) + "_" + std::to_string(l);
          break;
        }
      }
  rep.add("(c) hereditary restriction of relative filtrations", c_ok, c_msg);

  // (d) each N_j preserves all steps, and lowers W^k by 2 when k >= j
  bool d_ok = true;
  std::string d_msg;
  for (size_t j = 1; j <= r && d_ok; ++j)
    for (size_t k = 0; k < tower.size() && d_ok; ++k)
      for (long l : tower[k].jumps()) {
        Subspace<Scalar> img = tower[k].at(l).image_under(s.ns[j - 1]);
        if (!tower[k].at(l).contains(img)) {
          d_ok = false;
          d_msg = "N_" + std::to_string(j) + " does not preserve W^" + std::to_string(k);
          break;
        }
        if (k >= j && !tower[k].at(l - 2).contains(img)) {
          d_ok = false;
          d_msg = "N_" + std::to_string(j) + " does not lower W^" + std::to_string(k) +
                  " by two";
          break;
        }
      }
  rep.add("(d) step preservation and lowering", d_ok, d_msg);

  // (f1) horizontality
  bool f1_ok = true;
  for (auto& n : s.ns) {
    Mat<GScalar> nc = complexify(n);
    for (long p : s.f.jumps())
      if (!s.f.at(p - 1).contains(s.f.at(p).image_under(nc))) f1_ok = false;
  }
  rep.add("(f1) N_j F^p inside F^{p-1}", f1_ok);

  // (f2) mixed Hodge structure on V and on every step of every W^k, k < r
  bool f2_ok = is_mixed_hodge_structure(s.f, tower[r]);
  std::string f2_msg = f2_ok ? "" : "(F, W^r) is not a mixed Hodge structure";
  for (size_t k = 1; k < r && f2_ok; ++k)
    for (long l : tower[k].jumps()) {
      Subspace<Scalar> u = tower[k].at(l);
      if (u.is_full() || u.dim() == 0) continue;
      SubCoords<Scalar> sc(u);
      SubCoords<GScalar> scc(complexify(u));
      if (!is_mixed_hodge_structure(restrict_hodge(scc, s.f),
                                    sc.restrict_filtration(tower[r]))) {
        f2_ok = false;
        f2_msg = "restriction to a step of W^" + std::to_string(k) +
                 " is not a mixed Hodge structure";
      }
    }
  rep.add("(f2) mixed Hodge structures on V and restrictions", f2_ok, f2_msg);
  (void)d;
  return rep;
}

// ---- polarized split orbit check on one (graded) piece

// Q_l-positivity on the primitive parts of the bigrading determined by
// N = sum N_j; the ambient here is a single graded piece of weight k.
inline bool split_orbit_polarized(const std::vector<Mat<Scalar>>& ns,
                                  const DecFiltration<GScalar>& f, const Mat<Scalar>& q,
                                  long k, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  size_t d = q.rows();
  Mat<Scalar> n(d, d);
  for (auto& nj : ns) n += nj;
  if (!is_nilpotent(n)) return fail("sum of operators is not nilpotent");
  for (auto& nj : ns)
    if (!is_infinitesimal_isometry(nj, q))
      return fail("an operator is not an infinitesimal isometry");
  Filtration<Scalar> m = monodromy_filtration(n, k);
  auto big = deligne_bigrading(m, f);
  if (!big) return fail("limit structure is missing or not split over R");
  Mat<GScalar> nc = complexify(n);
  Mat<GScalar> qc = complexify(q);
  // each operator moves the bigrading by (-1, -1)
  for (auto& nj : ns) {
    Mat<GScalar> njc = complexify(nj);
    for (auto& [pq, piece] : big->pieces)
      if (!big->piece(pq.first - 1, pq.second - 1).contains(piece.image_under(njc)))
      return fail("an operator is not a (-1,-1)-morphism of the limit structure");
  }
  // first bilinear relation Q(F^p, F^{k-p+1}) = 0
  for (long p : f.jumps())
    for (auto& u : f.at(p).basis())
      for (auto& v : f.at(k - p + 1).basis())
        if (!is_zero(form_eval(qc, u, v))) return fail("first bilinear relation fails");
  // positivity i^{p-q} Q(x, N^l conj(x)) > 0 on primitive parts
  for (auto& [pq, piece] : big->pieces) {
    long l = pq.first + pq.second - k;
    if (l < 0) continue;
    if (pq.first < pq.second) continue;  // conjugate piece carries the same form
    Mat<GScalar> nl = nc.pow(static_cast<unsigned>(l));
    Subspace<GScalar> prim = intersect(
        piece, Subspace<GScalar>::span(d, nc.pow(static_cast<unsigned>(l + 1)).kernel_basis()));
    if (prim.dim() == 0) continue;
    Mat<GScalar> gram(prim.dim(), prim.dim());
    auto bas = prim.basis();
    GScalar weil = i_power(pq.first - pq.second);
    for (size_t s = 0; s < bas.size(); ++s)
      for (size_t t = 0; t < bas.size(); ++t) {
        Vec<GScalar> bc = bas[t];
        for (auto& z : bc) z = conj(z);
        gram(s, t) = weil * form_eval(qc, bas[s], nl.apply(bc));
      }
    if (!is_hermitian(gram) || !is_positive_definite_hermitian(gram))
      return fail("positivity fails on the primitive part of type (" +
                  std::to_string(pq.first) + "," + std::to_string(pq.second) + ")");
  }
  return true;
}

// ---- full axiom check (split limit data enforced)

struct IMHMData {
  Filtration<Scalar> w;
  std::vector<Mat<Scalar>> ns;
  HodgeFiltration f;
  // matrix of the weight-k form in the canonical quotient basis of Gr_k
  std::map<long, Mat<Scalar>> gr_forms;
};

inline Report check_imhm(const IMHMData& d) {
  Report rep;
  bool st_ok = d.w.well_formed() && d.f.well_formed();
  for (auto& n : d.ns) {
    if (!is_nilpotent(n) || !preserves_filtration(n, d.w)) st_ok = false;
    for (auto& n2 : d.ns)
      if (!commutator(n, n2).is_zero_matrix()) st_ok = false;
  }
  for (long k : d.w.jumps()) {
    auto it = d.gr_forms.find(k);
    if (it == d.gr_forms.end()) {
      st_ok = false;
      continue;
    }
    QuotientSpace<Scalar> q(d.w.at(k - 1), d.w.at(k));
    if (it->second.rows() != q.dim()) st_ok = false;
    bool want_sym = ((k % 2) + 2) % 2 == 0;
    if (want_sym ? !is_symmetric(it->second) : !is_skew(it->second)) st_ok = false;
    if (is_zero(it->second.det())) st_ok = false;
  }
  rep.add("(1-3) structure: filtration, forms, commuting isometries", st_ok);
  if (!st_ok) return rep;

  // (a) horizontality
  bool a_ok = true;
  for (auto& n : d.ns) {
    Mat<GScalar> nc = complexify(n);
    for (long p : d.f.jumps())
      if (!d.f.at(p - 1).contains(d.f.at(p).image_under(nc))) a_ok = false;
  }
  rep.add("(a) horizontality", a_ok);

  // (b) polarized split orbit on every graded piece
  bool b_ok = true;
  std::string b_msg;
  for (long k : d.w.jumps()) {
    QuotientSpace<Scalar> q(d.w.at(k - 1), d.w.at(k));
    QuotientSpace<GScalar> qc(complexify(d.w.at(k - 1)), complexify(d.w.at(k)));
    std::vector<Mat<Scalar>> gr_ns;
    for (auto& n : d.ns) gr_ns.push_back(q.induced(n));
    DecFiltration<GScalar> gr_f = induced_hodge_on_graded(d.w, k, d.f, qc);
    std::string why;
    if (!split_orbit_polarized(gr_ns, gr_f, d.gr_forms.at(k), k, &why)) {
      b_ok = false;
      b_msg = "weight " + std::to_string(k) + ": " + why;
      break;
    }
  }
  rep.add("(b) graded pieces are polarized split orbits", b_ok, b_msg);

  // (c) relative filtrations for every subset, with the lowering property
  bool c_ok = true;
  std::string c_msg;
  size_t r = d.ns.size();
  for (size_t mask = 1; mask < (size_t(1) << r) && c_ok; ++mask) {
    Mat<Scalar> n(d.w.ambient(), d.w.ambient());
    for (size_t j = 0; j < r; ++j)
      if (mask & (size_t(1) << j)) n += d.ns[j];
    auto m = relative_monodromy_filtration(n, d.w);
    if (!m) {
      c_ok = false;
      c_msg = "a subset has no relative weight filtration";
      break;
    }
    for (size_t j = 0; j < r && c_ok; ++j) {
      if (!(mask & (size_t(1) << j))) continue;
      for (long l : m->jumps())
        if (!m->at(l - 2).contains(m->at(l).image_under(d.ns[j]))) {
          c_ok = false;
          c_msg = "an operator fails to lower its subset filtration by two";
          break;
        }
    }
  }
  rep.add("(c) relative filtrations for all subsets", c_ok, c_msg);
  return rep;
}

// ---- polarization feasibility over a pure base

// A linear functional (with complex coefficients) in the unknown
// entries of a (-1)^k-symmetric form.
namespace detail {

struct SymIndexer {
  size_t d;
  bool sym;  // true: symmetric, false: skew
  size_t count() const { return sym ? d * (d + 1) / 2 : d * (d - 1) / 2; }
  // index of the unknown for entry (s, t) with s <= t (s < t when skew)
  size_t at(size_t s, size_t t) const {
    // row-major over the upper triangle
    size_t skip = sym ? 0 : 1;
    size_t idx = 0;
    for (size_t i = 0; i < s; ++i) idx += d - i - skip;
    return idx + (t - s - skip);
  }
  // value of entry (s, t) of the form as a signed unknown reference
  std::pair<long, size_t> entry(size_t s, size_t t) const {
    if (s == t && !sym) return {0, 0};
    if (s <= t) return {1, at(s, t)};
    return {sym ? 1 : -1, at(t, s)};
  }
  Mat<Scalar> realize(const Vec<Scalar>& x) const {
    Mat<Scalar> q(d, d);
    for (size_t s = 0; s < d; ++s)
      for (size_t t = 0; t < d; ++t) {
        auto [sign, idx] = entry(s, t);
        if (sign != 0) q(s, t) = Scalar(sign) * x[idx];
      }
    return q;
  }
  std::string label(size_t idx, const std::vector<std::string>& names) const {
    size_t skip = sym ? 0 : 1;
    for (size_t s = 0; s < d; ++s) {
      size_t width = d - s - skip;
      if (idx < width) {
        size_t t = s + skip + idx;
        auto nm = [&](size_t i) {
          return i < names.size() ? names[i] : "v" + std::to_string(i + 1);
        };
        return "Q(" + nm(s) + ", " + nm(t) + ")";
      }
      idx -= width;
    }
    return "?";
  }
};

// functional x, y -> Q(x, y) in the unknowns
inline Vec<GScalar> form_functional(const SymIndexer& ix, const Vec<GScalar>& x,
                                    const Vec<GScalar>& y) {
  Vec<GScalar> out(ix.count(), GScalar(Scalar(0)));
  for (size_t s = 0; s < ix.d; ++s)
    for (size_t t = 0; t < ix.d; ++t) {
      auto [sign, idx] = ix.entry(s, t);
      if (sign != 0) out[idx] += GScalar(Scalar(sign)) * x[s] * y[t];
    }
  return out;
}

// Fourier-Motzkin on a homogeneous strict system sum_i c_i x_i > 0;
// returns a rational sample or nullopt.
inline std::optional<Vec<Scalar>> strict_feasible(std::vector<Vec<Scalar>> cons, size_t nvars) {
  // record, per variable from last to first, the bounds after eliminating
  // the later variables
  std::vector<std::vector<Vec<Scalar>>> levels(nvars + 1);
  for (size_t v = nvars; v-- > 0;) {
    levels[v + 1] = cons;
    std::vector<Vec<Scalar>> keep, lower, upper;
    for (auto& c : cons) {
      int sg = sign_of(c[v]);
      if (sg == 0)
        keep.push_back(c);
      else if (sg > 0)
        lower.push_back(c);
      else
        upper.push_back(c);
    }
    for (auto& lo : lower)
      for (auto& up : upper) {
        // combine so the coefficient of x_v cancels
        Vec<Scalar> c(nvars, Scalar(0));
        for (size_t i = 0; i < nvars; ++i) c[i] = lo[i] * (-up[v]) + up[i] * lo[v];
        keep.push_back(std::move(c));
      }
    cons = std::move(keep);
  }
  for (auto& c : cons) {
    bool all_zero = true;
    for (auto& x : c)
      if (!is_zero(x)) all_zero = false;
    if (all_zero) return std::nullopt;  // derived 0 > 0
  }
  // back-substitute: x_v must satisfy the var-v constraints of its level
  Vec<Scalar> x(nvars, Scalar(0));
  for (size_t v = 0; v < nvars; ++v) {
    std::optional<Scalar> lo, hi;
    for (auto& c : levels[v + 1]) {
      int sg = sign_of(c[v]);
      if (sg == 0) continue;
      Scalar rest(0);
      for (size_t i = 0; i < v; ++i) rest += c[i] * x[i];
      Scalar bound = -rest / c[v];
      if (sg > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      x[v] = (*lo + *hi) / Scalar(2);
    else if (lo)
      x[v] = *lo + Scalar(1);
    else if (hi)
      x[v] = *hi - Scalar(1);
  }
  return x;
}

}  // namespace detail

struct PolarizationCertificate {
  bool feasible = false;
  Mat<Scalar> sample;             // a valid form, when feasible
  std::string forced_identity;    // "<label> = 0 on the constraint space"
  std::string required_positive;  // "<label> > 0"
  std::vector<std::string> positivity_labels;
};

// Decide whether some (-1)^k-symmetric real form polarizes a system of
// commuting horizontal nilpotents on a pure space: isometry and
// moving-frame isotropy constraints are linear equalities; positivity
// on the limit split primitive basis gives strict inequalities, solved
// exactly.  Infeasibility is certified by a positivity requirement that
// the equalities force to vanish.
inline PolarizationCertificate polarization_feasibility(
    const std::vector<Mat<Scalar>>& ns, const HodgeFiltration& f, long k,
    const std::vector<std::string>& names = {}) {
  size_t d = f.ambient();
  detail::SymIndexer ix{d, ((k % 2) + 2) % 2 == 0};
  size_t nq = ix.count();
  std::vector<Vec<Scalar>> eqs;
  auto push_eq = [&](const Vec<GScalar>& fn) {
    Vec<Scalar> re(nq, Scalar(0)), im(nq, Scalar(0));
    bool has_re = false, has_im = false;
    for (size_t i = 0; i < nq; ++i) {
      re[i] = fn[i].re;
      im[i] = fn[i].im;
      if (!is_zero(re[i])) has_re = true;
      if (!is_zero(im[i])) has_im = true;
    }
    if (has_re) eqs.push_back(std::move(re));
    if (has_im) eqs.push_back(std::move(im));
  };

  // (i) infinitesimal-isometry constraints:
  // Q(N x, y) + Q(x, N y) = 0 on all canonical basis pairs
  for (auto& n : ns) {
    Mat<GScalar> nc = complexify(n);
    for (size_t s = 0; s < d; ++s)
      for (size_t t = s; t < d; ++t) {
        Vec<GScalar> es = basis_vector<GScalar>(d, s), et = basis_vector<GScalar>(d, t);
        Vec<GScalar> fn = detail::form_functional(ix, nc.apply(es), et);
        Vec<GScalar> fn2 = detail::form_functional(ix, es, nc.apply(et));
        for (size_t i = 0; i < nq; ++i) fn[i] += fn2[i];
        push_eq(fn);
      }
  }

  // (ii) isotropy of the moving frame: the coefficients of
  // Q(e^{N(z)} u, e^{N(z)} v) vanish for u in F^p, v in F^{k-p+1}
  size_t r = ns.size();
  std::vector<std::vector<std::pair<std::vector<unsigned>, Vec<GScalar>>>> frames;
  auto expand = [&](const Vec<GScalar>& u) {
    // all (prod_j N_j^{a_j} / a_j!) u with multi-exponent a
    std::vector<std::pair<std::vector<unsigned>, Vec<GScalar>>> out;
    out.push_back({std::vector<unsigned>(r, 0), u});
    for (size_t j = 0; j < r; ++j) {
      Mat<GScalar> nc = complexify(ns[j]);
      size_t base = out.size();
      for (size_t i = 0; i < base; ++i) {
        Vec<GScalar> cur = out[i].second;
        std::vector<unsigned> exps = out[i].first;
        unsigned a = 1;
        while (true) {
          cur = nc.apply(cur);
          bool zero = true;
          for (auto& x : cur)
            if (!is_zero(x)) zero = false;
          if (zero) break;
          Vec<GScalar> scaled = cur;
          GScalar inv(Scalar(1) / factorial(a));
          for (auto& x : scaled) x = x * inv;
          auto e2 = exps;
          e2[j] = a;
          out.push_back({e2, scaled});
          ++a;
        }
      }
    }
    return out;
  };
  for (long p : f.jumps()) {
    for (auto& u : f.at(p).basis())
      for (auto& v : f.at(k - p + 1).basis()) {
        auto eu = expand(u), ev = expand(v);
        std::map<std::vector<unsigned>, Vec<GScalar>> by_degree;
        for (auto& [ea, xa] : eu)
          for (auto& [eb, xb] : ev) {
            std::vector<unsigned> g(r);
            for (size_t j = 0; j < r; ++j) g[j] = ea[j] + eb[j];
            Vec<GScalar> fn = detail::form_functional(ix, xa, xb);
            auto it = by_degree.find(g);
            if (it == by_degree.end())
              by_degree.emplace(g, std::move(fn));
            else
              for (size_t i = 0; i < nq; ++i) it->second[i] += fn[i];
          }
        for (auto& [g, fn] : by_degree) push_eq(fn);
      }
  }

  // strict positivity requirements on the limit split data
  PolarizationCertificate cert;
  Mat<Scalar> n(d, d);
  for (auto& nj : ns) n += nj;
  Filtration<Scalar> m = monodromy_filtration(n, k);
  auto big = deligne_bigrading(m, f);
  if (!big) {
    cert.feasible = false;
    cert.forced_identity = "limit structure is missing or not split over R";
    return cert;
  }
  Mat<GScalar> nc = complexify(n);
  struct Strict {
    Vec<Scalar> fn;
    std::string label;
  };
  std::vector<Strict> strict;
  for (auto& [pq, piece] : big->pieces) {
    long l = pq.first + pq.second - k;
    if (l < 0 || pq.first < pq.second) continue;
    Mat<GScalar> nl = nc.pow(static_cast<unsigned>(l));
    Subspace<GScalar> prim = intersect(
        piece, Subspace<GScalar>::span(d, nc.pow(static_cast<unsigned>(l + 1)).kernel_basis()));
    GScalar weil = i_power(pq.first - pq.second);
    for (auto& b : prim.basis()) {
      Vec<GScalar> bc = b;
      for (auto& z : bc) z = conj(z);
      Vec<GScalar> fn = detail::form_functional(ix, b, nl.apply(bc));
      for (auto& x : fn) x = weil * x;
      Vec<Scalar> re(nq), im(nq);
      bool has_im = false;
      for (size_t i = 0; i < nq; ++i) {
        re[i] = fn[i].re;
        im[i] = fn[i].im;
        if (!is_zero(im[i])) has_im = true;
      }
      if (has_im) eqs.push_back(im);  // the value must be real
      std::string lbl;
      // prefer a readable label when the functional is one unknown
      size_t nonzero = 0, which = 0;
      for (size_t i = 0; i < nq; ++i)
        if (!is_zero(re[i])) {
          ++nonzero;
          which = i;
        }
      if (nonzero == 1 && re[which] > 0)
        lbl = ix.label(which, names);
      else
        lbl = "positivity on the primitive part of type (" + std::to_string(pq.first) +
              "," + std::to_string(pq.second) + ")";
      strict.push_back({std::move(re), std::move(lbl)});
    }
  }
  for (auto& s : strict) cert.positivity_labels.push_back(s.label);

  // solve: restrict the strict system to the kernel of the equalities
  Mat<Scalar> a(eqs.size(), nq);
  for (size_t i = 0; i < eqs.size(); ++i)
    for (size_t j = 0; j < nq; ++j) a(i, j) = eqs[i][j];
  std::vector<Vec<Scalar>> kb = a.kernel_basis();
  std::vector<Vec<Scalar>> reduced;
  for (auto& s : strict) {
    Vec<Scalar> row(kb.size(), Scalar(0));
    bool all_zero = true;
    for (size_t j = 0; j < kb.size(); ++j) {
      Scalar v(0);
      for (size_t i = 0; i < nq; ++i) v += s.fn[i] * kb[j][i];
      row[j] = v;
      if (!is_zero(v)) all_zero = false;
    }
    if (all_zero) {
      cert.feasible = false;
      cert.forced_identity = s.label + " = 0 is forced by the isometry and isotropy constraints";
      cert.required_positive = s.label + " > 0";
      return cert;
    }
    reduced.push_back(std::move(row));
  }
  auto sol = detail::strict_feasible(reduced, kb.size());
  if (!sol) {
    cert.feasible = false;
    cert.forced_identity = "the strict positivity system is contradictory";
    cert.required_positive = "simultaneous positivity of all primitive values";
    return cert;
  }
  Vec<Scalar> x(nq, Scalar(0));
  for (size_t j = 0; j < kb.size(); ++j)
    for (size_t i = 0; i < nq; ++i) x[i] += (*sol)[j] * kb[j][i];
  cert.feasible = true;
  cert.sample = ix.realize(x);
  return cert;
}

// Grade-polarizability: feasibility on every graded piece.
inline std::pair<bool, std::map<long, PolarizationCertificate>> check_graded_polarizable(
    const DHSystem& s) {
  std::map<long, PolarizationCertificate> per;
  bool all = true;
  for (long k : s.w.jumps()) {
    QuotientSpace<Scalar> q(s.w.at(k - 1), s.w.at(k));
    QuotientSpace<GScalar> qc(complexify(s.w.at(k - 1)), complexify(s.w.at(k)));
    std::vector<Mat<Scalar>> gr_ns;
    for (auto& n : s.ns) gr_ns.push_back(q.induced(n));
    DecFiltration<GScalar> gr_f = induced_hodge_on_graded(s.w, k, s.f, qc);
    per[k] = polarization_feasibility(gr_ns, gr_f, k);
    if (!per[k].feasible) all = false;
  }
  return {all, std::move(per)};
}

// ---- the signed-diagram (chromosome) map

// Primitive dimensions by Hodge type, for the diamond entry point.
struct HodgeDiamond {
  long weight = 0;
  std::map<std::pair<long, long>, size_t> primitive_dims;  // (p,q) -> dim P^{p,q}
};

// diagram from a diamond alone: each real (p,p) primitive of level l
// contributes rows with the sign table by (w, l mod 4); a conjugate
// pair p != q contributes two rows, blank when w + l is odd, and
// otherwise signed by the same table flipped when p - q = 2 mod 4
// (from the positivity requirement i^{p-q} Q_l > 0).
inline SignedDiagram chromosome(const HodgeDiamond& d) {
  SignedDiagram out;
  for (auto& [pq, dim] : d.primitive_dims) {
    auto [p, q] = pq;
    long l = p + q - d.weight;
    if (l < 0) throw std::invalid_argument("chromosome: negative primitive level");
    auto mirror = d.primitive_dims.find({q, p});
    if (mirror == d.primitive_dims.end() || mirror->second != dim)
      throw std::invalid_argument("chromosome: diamond is not conjugation-symmetric");
    size_t len = static_cast<size_t>(l) + 1;
    if (p == q) {
      for (size_t i = 0; i < dim; ++i) out.rows.push_back({len, gene_sign(d.weight, l)});
    } else if (p > q) {
      BoxSign sign;
      if (((d.weight + l) % 2 + 2) % 2 != 0) {
        sign = BoxSign::Blank;
      } else {
        sign = gene_sign(d.weight, l);
        if (((p - q) % 4 + 4) % 4 == 2)
          sign = sign == BoxSign::Plus ? BoxSign::Minus : BoxSign::Plus;
      }
      for (size_t i = 0; i < 2 * dim; ++i) out.rows.push_back({len, sign});
    }
  }
  std::sort(out.rows.begin(), out.rows.end(), row_before);
  return out;
}

// diagram from an explicit split model: same as the classifier.
inline SignedDiagram chromosome(const Mat<Scalar>& n, const BilinearForm& q, long weight) {
  return signed_diagram_of(n, q, weight);
}

// Extract the diamond of an explicit split model (for cross-checks).
inline HodgeDiamond diamond_of(const Bigrading& big, const Mat<Scalar>& n, long weight) {
  HodgeDiamond d;
  d.weight = weight;
  Mat<GScalar> nc = complexify(n);
  for (auto& [pq, piece] : big.pieces) {
    long l = pq.first + pq.second - weight;
    if (l < 0) continue;
    Subspace<GScalar> prim = intersect(
        piece, Subspace<GScalar>::span(big.ambient,
                                       nc.pow(static_cast<unsigned>(l + 1)).kernel_basis()));
    if (prim.dim() > 0) d.primitive_dims[pq] = prim.dim();
  }
  return d;
}

// ---- direct-summand search for a sub-object

// A sub-object H (invariant under all N_j, compatible with F) is a
// direct summand iff there is an equivariant, F-preserving projection
// T with image H fixing H pointwise; that is a linear system.  Returns
// a complementary sub-object (the kernel of such a T) or nullopt.
inline std::optional<Subspace<Scalar>> complement_subobject(
    const std::vector<Mat<Scalar>>& ns, const HodgeFiltration& f,
    const Subspace<Scalar>& h) {
  size_t d = h.ambient();
  size_t nu = d * d;  // unknown entries of T, row-major
  std::vector<Vec<Scalar>> rows;
  std::vector<Scalar> rhs;
  auto add_row = [&](const Vec<Scalar>& row, const Scalar& b) {
    rows.push_back(row);
    rhs.push_back(b);
  };
  // [T, N_j] = 0
  for (auto& n : ns)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Vec<Scalar> row(nu, Scalar(0));
        for (size_t l = 0; l < d; ++l) {
          row[i * d + l] += n(l, j);
          row[l * d + j] -= n(i, l);
        }
        add_row(row, Scalar(0));
      }
  // T fixes H pointwise
  for (auto& b : h.basis())
    for (size_t i = 0; i < d; ++i) {
      Vec<Scalar> row(nu, Scalar(0));
      for (size_t j = 0; j < d; ++j) row[i * d + j] = b[j];
      add_row(row, b[i]);
    }
  // image of T inside H
  Mat<Scalar> hann = h.annihilator();
  for (size_t a = 0; a < hann.rows(); ++a)
    for (size_t j = 0; j < d; ++j) {
      Vec<Scalar> row(nu, Scalar(0));
      for (size_t i = 0; i < d; ++i) row[i * d + j] = hann(a, i);
      add_row(row, Scalar(0));
    }
  // T preserves every F^p: annihilator rows of F^p kill T b
  for (long p : f.jumps()) {
    Mat<GScalar> fann = f.at(p).annihilator();
    for (size_t a = 0; a < fann.rows(); ++a)
      for (auto& b : f.at(p).basis()) {
        Vec<Scalar> re(nu, Scalar(0)), im(nu, Scalar(0));
        bool has_im = false;
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j) {
            GScalar c = fann(a, i) * b[j];
            re[i * d + j] += c.re;
            im[i * d + j] += c.im;
            if (!is_zero(c.im)) has_im = true;
          }
        add_row(re, Scalar(0));
        if (has_im) add_row(im, Scalar(0));
      }
  }
  Mat<Scalar> a(rows.size(), nu);
  Vec<Scalar> b(rows.size(), Scalar(0));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < nu; ++j) a(i, j) = rows[i][j];
    b[i] = rhs[i];
  }
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  Mat<Scalar> t(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) t(i, j) = (*sol)[i * d + j];
  return Subspace<Scalar>::span(d, t.kernel_basis());
}

}  // namespace nilhodge
