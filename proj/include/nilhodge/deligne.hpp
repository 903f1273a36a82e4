#pragma once

// Systems of commuting nilpotent operators compatible with a weight
// filtration and a grading, their canonical sl2 chains, the one-variable
// normal form, deformation spaces, and the triangular substitution of
// several-variable systems into fewer variables.

#include "nilhodge/sl2.hpp"

#include <functional>
#include <sstream>

namespace nilhodge {

// (W; N_1, ..., N_r; Y): the N_j commute, preserve W, the iterated
// relative monodromy filtrations W^j = M(N_j, W^{j-1}) all exist
// (hereditarily, i.e. also after restriction to every step of every
// earlier filtration), Y grades W^r, preserves every W^j, and
// [Y, N_j] = -2 N_j.
struct DeligneSystem {
  Filtration<Scalar> w;
  std::vector<Mat<Scalar>> ns;
  Mat<Scalar> y;

  size_t vars() const { return ns.size(); }
  size_t dim() const { return w.ambient(); }
};

struct TowerResult {
  bool ok = false;
  std::string error;
  std::vector<Filtration<Scalar>> w;  // W^0 .. W^r
};

// Iterated relative monodromy filtrations with the hereditary
// restriction conditions.
inline TowerResult build_tower(const Filtration<Scalar>& w0,
                               const std::vector<Mat<Scalar>>& ns) {
  TowerResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.error = std::move(msg);
    return res;
  };
  if (!w0.well_formed()) return fail("W^0 is not a filtration");
  for (size_t j = 0; j < ns.size(); ++j) {
    if (!is_nilpotent(ns[j]))
      return fail("N_" + std::to_string(j + 1) + " is not nilpotent");
    for (size_t k = 0; k < j; ++k)
      if (!commutator(ns[j], ns[k]).is_zero_matrix())
        return fail("N_" + std::to_string(j + 1) + " and N_" + std::to_string(k + 1) +
                    " do not commute");
  }
  res.w.push_back(w0.normalized());
  for (size_t j = 0; j < ns.size(); ++j) {
    std::string nj = "N_" + std::to_string(j + 1);
    if (!preserves_filtration(ns[j], res.w[j]))
      return fail(nj + " does not preserve W^" + std::to_string(j));
    auto m = relative_monodromy_filtration(ns[j], res.w[j]);
    if (!m)
      return fail("M(" + nj + ", W^" + std::to_string(j) + ") does not exist");
    // hereditary conditions: the same must hold on every step of every
    // earlier filtration in the tower
    for (size_t k = 0; k <= j; ++k)
      for (long l : res.w[k].jumps()) {
        Subspace<Scalar> u = res.w[k].at(l);
        if (u.is_full()) continue;
        if (!u.contains(u.image_under(ns[j])))
          return fail(nj + " does not preserve the step W^" + std::to_string(k) +
                      "_" + std::to_string(l));
        SubCoords<Scalar> sc(u);
        auto mr = relative_monodromy_filtration(sc.restrict_op(ns[j]),
                                                sc.restrict_filtration(res.w[j]));
        if (!mr)
          return fail("M(" + nj + ", W^" + std::to_string(j) +
                      ") fails on the step W^" + std::to_string(k) + "_" +
                      std::to_string(l));
        if (*mr != sc.restrict_filtration(*m))
          return fail("relative filtration of " + nj + " is not compatible with W^" +
                      std::to_string(k) + "_" + std::to_string(l));
      }
    res.w.push_back(m->normalized());
  }
  res.ok = true;
  return res;
}

struct SystemCheck {
  bool ok = false;
  std::string error;
  std::vector<Filtration<Scalar>> tower;
};

inline SystemCheck check_deligne_system(const DeligneSystem& s) {
  SystemCheck res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.error = std::move(msg);
    return res;
  };
  auto tower = build_tower(s.w, s.ns);
  if (!tower.ok) return fail(tower.error);
  res.tower = tower.w;
  if (!grades_filtration(s.y, tower.w.back()))
    return fail("Y does not grade W^r");
  for (size_t j = 0; j < tower.w.size(); ++j)
    for (long k : tower.w[j].jumps()) {
      Subspace<Scalar> step = tower.w[j].at(k);
      if (!step.contains(step.image_under(s.y)))
        return fail("Y does not preserve W^" + std::to_string(j));
    }
  for (size_t j = 0; j < s.ns.size(); ++j)
    if (commutator(s.y, s.ns[j]) != Scalar(-2) * s.ns[j])
      return fail("[Y, N_" + std::to_string(j + 1) + "] != -2 N_" + std::to_string(j + 1));
  res.ok = true;
  return res;
}

// ---- the canonical grading Y'(N, Y)

// Seed: a grading of w commuting with y, built from successive
// complements inside each eigenspace of y.
inline Mat<Scalar> seed_grading(const Filtration<Scalar>& w, const Mat<Scalar>& y) {
  size_t d = w.ambient();
  std::vector<Vec<Scalar>> cols;
  std::vector<long> weights;
  for (long lam : integer_spectrum(y)) {
    Mat<Scalar> shifted = y - Scalar(lam) * Mat<Scalar>::identity(d);
    Subspace<Scalar> e = Subspace<Scalar>::span(d, shifted.kernel_basis());
    Subspace<Scalar> prev = Subspace<Scalar>::zero(d);
    for (long k : w.jumps()) {
      Subspace<Scalar> cur = intersect(w.at(k), e);
      for (auto& v : prev.complement_in(cur)) {
        cols.push_back(v);
        weights.push_back(k);
      }
      prev = cur;
    }
  }
  if (cols.size() != d)
    throw std::invalid_argument("seed_grading: y does not preserve the filtration");
  Mat<Scalar> p = from_columns(d, cols);
  Mat<Scalar> diag(d, d);
  for (size_t i = 0; i < d; ++i) diag(i, i) = Scalar(weights[i]);
  return p * diag * *p.inverse();
}

// Y'(N, Y): the unique grading of w that commutes with y and splits n as
// a weight-0 part plus highest-weight lowering terms.  Requires that y
// grades M(N, w) and [y, n] = -2n.
inline Mat<Scalar> deligne_grading(const Mat<Scalar>& n, const Mat<Scalar>& y,
                                   const Filtration<Scalar>& w) {
  size_t d = n.rows();
  if (commutator(y, n) != Scalar(-2) * n)
    throw std::invalid_argument("deligne_grading: [y, n] != -2n");
  auto m = filtration_of_grading(y);
  if (!m || !is_relative_monodromy_filtration(n, w.normalized(), *m))
    throw std::invalid_argument("deligne_grading: y does not grade M(N, W)");

  Mat<Scalar> yp = seed_grading(w, y);
  Mat<Scalar> commute_with_y =
      op_matrix<Scalar>(d, [&](const Mat<Scalar>& g) { return commutator(y, g); });
  long span = w.highest() - w.lowest();
  for (long k = 1; k <= span + 2; ++k) {
    auto comps = ad_weight_components(n, yp);
    Mat<Scalar> n0 = comps.count(0) ? comps[0] : Mat<Scalar>::zero(d, d);
    Mat<Scalar> h = y - yp;
    Mat<Scalar> n0p = complete_triple(n0, h);
    auto it = comps.find(-k);
    if (it == comps.end()) continue;
    Mat<Scalar> gamma = highest_weight_split(it->second, n0, h, n0p, {commute_with_y}).first;
    if (gamma.is_zero_matrix()) continue;
    Mat<Scalar> u = Mat<Scalar>::identity(d) + gamma;
    yp = u * yp * *u.inverse();
  }

  // verify the defining properties before returning
  if (!grades_filtration(yp, w.normalized()))
    throw std::logic_error("deligne_grading: output does not grade W");
  if (!commutator(y, yp).is_zero_matrix())
    throw std::logic_error("deligne_grading: output does not commute with Y");
  auto comps = ad_weight_components(n, yp);
  Mat<Scalar> n0 = comps.count(0) ? comps[0] : Mat<Scalar>::zero(d, d);
  Mat<Scalar> h = y - yp;
  Mat<Scalar> n0p = complete_triple(n0, h);
  for (auto& [wt, c] : comps) {
    if (wt == 0) continue;
    if (wt > 0 || wt == -1)
      throw std::logic_error("deligne_grading: stray component of weight " +
                             std::to_string(wt));
    if (!commutator(n0p, c).is_zero_matrix())
      throw std::logic_error("deligne_grading: component of weight " +
                             std::to_string(wt) + " is not highest weight");
    if (commutator(h, c) != Scalar(-wt - 2) * c)
      throw std::logic_error("deligne_grading: component has wrong H-weight");
  }
  return yp;
}

// ---- the sl2 chain of a system

struct Chain {
  std::vector<Filtration<Scalar>> tower;  // W^0 .. W^r
  std::vector<Mat<Scalar>> y;             // Y^0 .. Y^r
  std::vector<Mat<Scalar>> nhat;          // \hat N_j = weight-0 part of N_j, j = 1..r
  std::vector<Mat<Scalar>> nplus;         // raising operator of (\hat N_j, H_j)
  std::vector<Mat<Scalar>> h;             // H_j = Y^j - Y^{j-1}
};

inline Chain build_chain(const DeligneSystem& s) {
  auto chk = check_deligne_system(s);
  if (!chk.ok) throw std::invalid_argument("build_chain: " + chk.error);
  size_t r = s.vars();
  Chain c;
  c.tower = chk.tower;
  c.y.assign(r + 1, Mat<Scalar>());
  c.nhat.assign(r, Mat<Scalar>());
  c.nplus.assign(r, Mat<Scalar>());
  c.h.assign(r, Mat<Scalar>());
  c.y[r] = s.y;
  for (size_t j = r; j >= 1; --j) {
    c.y[j - 1] = deligne_grading(s.ns[j - 1], c.y[j], c.tower[j - 1]);
    c.h[j - 1] = c.y[j] - c.y[j - 1];
    c.nhat[j - 1] = ad_weight_component(s.ns[j - 1], c.y[j - 1], 0L);
    c.nplus[j - 1] = complete_triple(c.nhat[j - 1], c.h[j - 1]);
    if (j >= 2) {
      // the truncated system must again be a system for the chain to go on
      DeligneSystem trunc{s.w, {s.ns.begin(), s.ns.begin() + (j - 1)}, c.y[j - 1]};
      auto tchk = check_deligne_system(trunc);
      if (!tchk.ok)
        throw std::invalid_argument("build_chain: truncation at " + std::to_string(j - 1) +
                                    ": " + tchk.error);
    }
  }
  return c;
}

// ---- one-variable normal form (the bijection psi)

struct SplitForm {
  Mat<Scalar> y0;      // grading of W
  Mat<Scalar> nhat;    // weight-0 part of N
  Mat<Scalar> nminus;  // strictly negative part of N
  Mat<Scalar> h;       // Y^1 - Y^0
  Mat<Scalar> nplus;   // raising operator of (nhat, h)
};

inline SplitForm psi(const DeligneSystem& s) {
  if (s.vars() != 1) throw std::invalid_argument("psi: expects a one-variable system");
  Chain c = build_chain(s);
  return SplitForm{c.y[0], c.nhat[0], s.ns[0] - c.nhat[0], c.h[0], c.nplus[0]};
}

// Reassemble a one-variable system from (Y^0, N_-) and the sl2 data
// (nhat, h).  Returns nullopt (with a reason) if the data violates the
// highest-weight or grading conditions.
inline std::optional<DeligneSystem> psi_inverse(const Filtration<Scalar>& w,
                                                const Mat<Scalar>& nhat,
                                                const Mat<Scalar>& h,
                                                const Mat<Scalar>& y0,
                                                const Mat<Scalar>& nminus,
                                                std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (!grades_filtration(y0, w.normalized())) return fail("Y^0 does not grade W");
  if (!commutator(y0, nhat).is_zero_matrix()) return fail("[Y^0, nhat] != 0");
  if (!commutator(y0, h).is_zero_matrix()) return fail("[Y^0, H] != 0");
  if (commutator(h, nhat) != Scalar(-2) * nhat) return fail("[H, nhat] != -2 nhat");
  Mat<Scalar> np = complete_triple(nhat, h);
  auto comps = ad_weight_components(nminus, y0);
  for (auto& [wt, c] : comps) {
    if (wt >= -1) return fail("N_- has a component of weight " + std::to_string(wt));
    if (commutator(h, c) != Scalar(-wt - 2) * c)
      return fail("component of weight " + std::to_string(wt) + " has wrong H-weight");
    if (!commutator(np, c).is_zero_matrix())
      return fail("component of weight " + std::to_string(wt) + " is not highest weight");
  }
  DeligneSystem s{w.normalized(), {nhat + nminus}, y0 + h};
  auto chk = check_deligne_system(s);
  if (!chk.ok) return fail(chk.error);
  return s;
}

// ---- deformation spaces

// Basis of all eta = sum of eta_{-l} (l >= 2) with eta_{-l} of weight -l
// for ad y0 and highest weight l - 2 for the pair (nhat, h) with raising
// operator nplus; extra homogeneous constraints may be supplied.
inline std::vector<Mat<Scalar>> deformation_space(
    const Mat<Scalar>& y0, const Mat<Scalar>& h, const Mat<Scalar>& nplus,
    const std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>>& extra = {}) {
  size_t d = y0.rows();
  auto spec = integer_spectrum(y0);
  long span = spec.back() - spec.front();
  std::vector<Mat<Scalar>> basis;
  for (long l = 2; l <= span; ++l) {
    std::vector<Mat<Scalar>> ops;
    ops.push_back(op_matrix<Scalar>(d, [&](const Mat<Scalar>& g) {
      return commutator(y0, g) + Scalar(l) * g;
    }));
    ops.push_back(op_matrix<Scalar>(d, [&](const Mat<Scalar>& g) {
      return commutator(h, g) - Scalar(l - 2) * g;
    }));
    ops.push_back(op_matrix<Scalar>(d, [&](const Mat<Scalar>& g) {
      return commutator(nplus, g);
    }));
    for (const auto& f : extra) ops.push_back(op_matrix<Scalar>(d, f));
    for (auto& b : matrices_annihilated_by(d, ops)) basis.push_back(b);
  }
  return basis;
}

// ---- morphisms and stabilizers

inline bool is_morphism(const Mat<Scalar>& t, const DeligneSystem& a,
                        const DeligneSystem& b) {
  if (a.vars() != b.vars()) return false;
  auto ta = build_tower(a.w, a.ns);
  auto tb = build_tower(b.w, b.ns);
  if (!ta.ok || !tb.ok) return false;
  for (size_t j = 0; j < ta.w.size(); ++j)
    for (long k : ta.w[j].jumps())
      if (!tb.w[j].at(k).contains(ta.w[j].at(k).image_under(t))) return false;
  for (size_t j = 0; j < a.ns.size(); ++j)
    if (t * a.ns[j] != b.ns[j] * t) return false;
  return t * a.y == b.y * t;
}

// g fixes the sl2 data of the chain (and a filtration F, when given).
inline bool stabilizes_chain_data(const Mat<Scalar>& g, const Chain& c,
                                  const std::optional<HodgeFiltration>& f = std::nullopt) {
  auto gi = g.inverse();
  if (!gi) return false;
  for (size_t j = 0; j < c.nhat.size(); ++j) {
    if (g * c.nhat[j] * *gi != c.nhat[j]) return false;
    if (g * c.h[j] * *gi != c.h[j]) return false;
  }
  if (f) {
    Mat<GScalar> gc = complexify(g);
    for (long p : f->jumps())
      if (f->at(p).image_under(gc) != f->at(p)) return false;
  }
  return true;
}

// ---- extension of a system by one more variable

// Attach N_{r+1} = nhat_new + eta to an existing system; conditions:
// commutation, eta in the deformation space of (nhat_new, h_new) over Y^r,
// and the enlarged data again forms a system whose chain truncates back
// to the given one.
inline std::optional<DeligneSystem> extend_system(const DeligneSystem& s,
                                                  const Mat<Scalar>& nhat_new,
                                                  const Mat<Scalar>& h_new,
                                                  const Mat<Scalar>& eta,
                                                  std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (!commutator(s.y, nhat_new).is_zero_matrix())
    return fail("[Y^r, nhat_new] != 0");
  if (commutator(h_new, nhat_new) != Scalar(-2) * nhat_new)
    return fail("[H_new, nhat_new] != -2 nhat_new");
  if (!commutator(s.y, h_new).is_zero_matrix()) return fail("[Y^r, H_new] != 0");
  Mat<Scalar> np = complete_triple(nhat_new, h_new);
  if (!eta.is_zero_matrix()) {
    auto comps = ad_weight_components(eta, s.y);
    for (auto& [wt, c] : comps) {
      if (wt >= -1)
        return fail("eta has a component of weight " + std::to_string(wt));
      if (commutator(h_new, c) != Scalar(-wt - 2) * c)
        return fail("eta component of weight " + std::to_string(wt) +
                    " has wrong H-weight");
      if (!commutator(np, c).is_zero_matrix())
        return fail("eta component of weight " + std::to_string(wt) +
                    " is not highest weight");
    }
  }
  Mat<Scalar> n_new = nhat_new + eta;
  for (size_t j = 0; j < s.ns.size(); ++j)
    if (!commutator(n_new, s.ns[j]).is_zero_matrix())
      return fail("new operator does not commute with N_" + std::to_string(j + 1));
  DeligneSystem ext{s.w, s.ns, s.y + h_new};
  ext.ns.push_back(n_new);
  auto chk = check_deligne_system(ext);
  if (!chk.ok) return fail(chk.error);
  Chain c = build_chain(ext);
  if (c.y[s.vars()] != s.y)
    return fail("chain of the extended system does not truncate to Y^r");
  return ext;
}

// ---- triangular substitution of variables

// N'_j = sum_{k=0}^{j-1} a^k / k!  N_{j-k}: pushes the j-th variable into
// the earlier ones.  Works over any coefficient ring with the right
// constructors, in particular with a symbolic parameter.
template <class F>
std::vector<Mat<F>> kato_phi(const std::vector<Mat<F>>& ns, const F& a) {
  std::vector<Mat<F>> out;
  for (size_t j = 1; j <= ns.size(); ++j) {
    Mat<F> acc = ns[j - 1];
    F power(1);
    for (size_t k = 1; k < j; ++k) {
      power *= a;
      F coeff = power;
      coeff /= F(factorial(static_cast<unsigned>(k)));
      acc += coeff * ns[j - 1 - k];
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace nilhodge
