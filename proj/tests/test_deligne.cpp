#include "nilhodge/models.hpp"
#include "nilhodge/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nilhodge;

namespace {

Filtration<Scalar> pure_filtration(size_t dim, long weight) {
  Filtration<Scalar> w(dim);
  w.set(weight, Subspace<Scalar>::full(dim));
  w.set(weight - 1, Subspace<Scalar>::zero(dim));
  return w;
}

Filtration<Scalar> conjugate_filtration(const Filtration<Scalar>& w, const Mat<Scalar>& g) {
  Filtration<Scalar> r(w.ambient());
  r.set(w.lowest() - 1, Subspace<Scalar>::zero(w.ambient()));
  for (long k : w.jumps()) r.set(k, w.at(k).image_under(g));
  return r;
}

bool in_span(const Mat<Scalar>& m, const std::vector<Mat<Scalar>>& basis) {
  size_t d = m.rows();
  std::vector<Vec<Scalar>> vs;
  for (auto& b : basis) vs.push_back(vec_of(b));
  Subspace<Scalar> s = Subspace<Scalar>::span(d * d, vs);
  return s.contains(vec_of(m));
}

}  // namespace

TEST_CASE("tower of iterated relative filtrations") {
  auto m = models::two_strings_and_line();
  auto t = build_tower(pure_filtration(7, 2), {m.n1, m.n2});
  REQUIRE(t.ok);
  REQUIRE(t.w.size() == 3);
  CHECK(t.w[0] == pure_filtration(7, 2));
  CHECK(t.w[1] == relative_monodromy_filtration(m.n1, pure_filtration(7, 2)).value());
  CHECK(t.w[2] == *filtration_of_grading(m.y));

  SECTION("non-commuting input is rejected") {
    Mat<Scalar> bad(7, 7);
    bad(0, 1) = Scalar(1);  // does not commute with n1
    auto t2 = build_tower(pure_filtration(7, 2), {m.n1, bad});
    REQUIRE_FALSE(t2.ok);
    CHECK(t2.error.find("commute") != std::string::npos);
  }
}

TEST_CASE("system validator") {
  auto m = models::two_strings_and_line();
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  auto chk = check_deligne_system(s);
  REQUIRE(chk.ok);

  SECTION("wrong grading weight is rejected") {
    DeligneSystem bad = s;
    bad.y = m.y + Mat<Scalar>::identity(7);
    CHECK_FALSE(check_deligne_system(bad).ok);
  }
  SECTION("broken bracket is rejected") {
    DeligneSystem bad = s;
    // perturb by a lowering map that still grades W^2 but spoils [Y, N_1]
    Mat<Scalar> e(7, 7);
    e(1, 0) = Scalar(2);  // a2 -> 2 a1
    bad.y = m.y + e;
    auto c = check_deligne_system(bad);
    REQUIRE_FALSE(c.ok);
    CHECK(c.error.find("-2") != std::string::npos);
  }
}

TEST_CASE("canonical grading over a pure base") {
  auto m = models::two_strings_and_line();
  Filtration<Scalar> w0 = pure_filtration(7, 2);
  DeligneSystem one{w0, {m.n1 + m.n2}, m.y};
  Chain c1 = build_chain(one);
  CHECK(c1.y[0] == Scalar(2) * Mat<Scalar>::identity(7));
  CHECK(c1.nhat[0] == m.n1 + m.n2);
}

TEST_CASE("chain of the commuting pair") {
  auto m = models::two_strings_and_line();
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  // pure case: Y^r = k Id + sum of the H_j
  Mat<Scalar> sum = Scalar(2) * Mat<Scalar>::identity(7);
  for (auto& h : c.h) sum += h;
  CHECK(c.y[2] == sum);
  CHECK(c.y[0] == Scalar(2) * Mat<Scalar>::identity(7));
  CHECK(c.nhat[0] == m.n1);
  CHECK(c.nhat[1] == m.n2);
  for (size_t j = 0; j < 2; ++j) {
    CHECK(commutator(c.h[j], c.nhat[j]) == Scalar(-2) * c.nhat[j]);
    CHECK(commutator(c.nplus[j], c.nhat[j]) == c.h[j]);
  }
}

TEST_CASE("grading of a deformed operator recovers the split data") {
  auto m = models::two_strings_and_line();
  Mat<Scalar> y0 = Scalar(2) * Mat<Scalar>::identity(7);
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  Mat<Scalar> y1 = c.y[1];
  Filtration<Scalar> w1 = *filtration_of_grading(y1);

  Mat<Scalar> n = m.n2 + m.etas[1] - Scalar(3) * m.n1;  // N_2 + eta_2 - 3 N_1
  CHECK(deligne_grading(n, m.y, w1) == y1);

  SECTION("equivariance under conjugation") {
    Mat<Scalar> g = Mat<Scalar>::identity(7);
    g(2, 0) = Scalar(1);
    g(5, 3) = Scalar(-2);
    g(6, 1) = Scalar(1);
    auto gi = *g.inverse();
    Mat<Scalar> yg = deligne_grading(g * n * gi, g * m.y * gi, conjugate_filtration(w1, g));
    CHECK(yg == g * y1 * gi);
  }
}

TEST_CASE("deformation space of the commuting pair") {
  auto m = models::two_strings_and_line();
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  Mat<Scalar> n1 = m.n1;
  Mat<Scalar> q = m.gram;
  std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>> extra{
      [&](const Mat<Scalar>& g) { return commutator(n1, g); },
      [&](const Mat<Scalar>& g) { return g.transpose() * q + q * g; }};
  auto basis = deformation_space(c.y[1], c.h[1], c.nplus[1], extra);
  REQUIRE(basis.size() == 2);
  CHECK(in_span(m.n1, basis));
  CHECK(in_span(m.etas[1], basis));  // eta_2
  CHECK_FALSE(in_span(m.etas[0], basis));
  CHECK_FALSE(in_span(m.etas[3], basis));  // eta_4: lowest weight, excluded

  SECTION("each deformation direction preserves the sl2 data") {
    for (auto& b : basis) {
      DeligneSystem def{s.w, {m.n1, m.n2 + b}, m.y};
      REQUIRE(check_deligne_system(def).ok);
      Chain cd = build_chain(def);
      CHECK(cd.nhat[1] == c.nhat[1]);
      CHECK(cd.h[1] == c.h[1]);
    }
  }
  SECTION("the lowest-weight direction changes the sl2 data") {
    DeligneSystem other{s.w, {m.n1, m.n2 + m.etas[3]}, m.y};  // eta_4
    bool same = false;
    try {
      Chain co = build_chain(other);
      same = co.nhat[1] == c.nhat[1] && co.h[1] == c.h[1];
    } catch (const std::exception&) {
      same = false;
    }
    CHECK_FALSE(same);
  }
}

TEST_CASE("vanishing-cycle pair deforms only along the first operator") {
  auto m = models::vanishing_cycle_pair();
  DeligneSystem s{pure_filtration(4, 1), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  CHECK(c.y[0] == Mat<Scalar>::identity(4));
  std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>> extra{
      [&](const Mat<Scalar>& g) { return commutator(m.n1, g); }};
  auto basis = deformation_space(c.y[1], c.h[1], c.nplus[1], extra);
  REQUIRE(basis.size() == 1);
  CHECK(in_span(m.n1, basis));
}

TEST_CASE("deep deformation direction of the degree-3 pair") {
  auto m = models::deep_deformation_pair();
  Filtration<Scalar> w0 = pure_filtration(6, 3);
  DeligneSystem s{w0, {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  Mat<Scalar> eta = m.etas[0];
  // eta has weight -3 for ad Y^1 and commutes with N_1
  CHECK(commutator(c.y[1], eta) == Scalar(-3) * eta);
  CHECK(commutator(m.n1, eta).is_zero_matrix());
  // lowest weight -3 for the first pair, highest weight 1 for the second
  CHECK(commutator(c.h[0], eta) == Scalar(-3) * eta);
  CHECK(commutator(c.nhat[0], eta).is_zero_matrix());
  CHECK(commutator(c.h[1], eta) == Scalar(1) * eta);
  CHECK(commutator(c.nplus[1], eta).is_zero_matrix());
  // the deformed pair is again a system with the same chain data
  DeligneSystem def{w0, {m.n1, m.n2 + eta}, m.y};
  auto chk = check_deligne_system(def);
  REQUIRE(chk.ok);
  Chain cd = build_chain(def);
  CHECK(cd.y[1] == c.y[1]);
  CHECK(cd.nhat[1] == c.nhat[1]);
}

TEST_CASE("one-variable normal form round trip") {
  auto m = models::two_strings_and_line();
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  Filtration<Scalar> w1 = *filtration_of_grading(c.y[1]);
  DeligneSystem one{w1, {m.n2 + m.etas[1]}, m.y};
  SplitForm sf = psi(one);
  CHECK(sf.y0 == c.y[1]);
  CHECK(sf.nhat == m.n2);
  CHECK(sf.nminus == m.etas[1]);
  auto back = psi_inverse(w1, sf.nhat, sf.h, sf.y0, sf.nminus);
  REQUIRE(back.has_value());
  CHECK(back->ns[0] == one.ns[0]);
  CHECK(back->y == one.y);

  SECTION("invalid lowering part is rejected") {
    std::string why;
    auto bad = psi_inverse(w1, sf.nhat, sf.h, sf.y0, m.etas[3], &why);
    CHECK_FALSE(bad.has_value());
    CHECK(!why.empty());
  }
}

TEST_CASE("extension by a new commuting operator") {
  auto m = models::two_strings_and_line();
  Filtration<Scalar> w0 = pure_filtration(7, 2);
  DeligneSystem base{w0, {m.n1, m.n2}, m.y};
  Chain c = build_chain(base);
  DeligneSystem trunc{w0, {m.n1}, c.y[1]};
  REQUIRE(check_deligne_system(trunc).ok);
  auto ext = extend_system(trunc, m.n2, c.h[1], m.etas[1]);
  REQUIRE(ext.has_value());
  CHECK(ext->ns.size() == 2);
  CHECK(ext->ns[1] == m.n2 + m.etas[1]);
  CHECK(ext->y == m.y);

  std::string why;
  auto bad = extend_system(trunc, m.n2, c.h[1], m.etas[3], &why);
  CHECK_FALSE(bad.has_value());
}

TEST_CASE("system behind the infeasible pair is still a system") {
  auto m = models::infeasible_pair();
  DeligneSystem s{m.w, {m.n1, m.n2}, m.y};
  CHECK(check_deligne_system(s).ok);
}

TEST_CASE("chain stabilizer") {
  auto m = models::two_strings_and_line();
  DeligneSystem s{pure_filtration(7, 2), {m.n1, m.n2}, m.y};
  Chain c = build_chain(s);
  CHECK(stabilizes_chain_data(Mat<Scalar>::identity(7), c, m.f));
  CHECK(stabilizes_chain_data(Scalar(-1) * Mat<Scalar>::identity(7), c, m.f));
  Mat<Scalar> g = Mat<Scalar>::identity(7) + m.n1;  // moves H_1
  CHECK_FALSE(stabilizes_chain_data(g, c, m.f));
}

TEST_CASE("triangular substitution of variables") {
  auto m = models::vanishing_cycle_pair();
  SECTION("two variables over the rationals") {
    auto out = kato_phi<Scalar>({m.n1, m.n2}, Scalar(5));
    CHECK(out[0] == m.n1);
    CHECK(out[1] == m.n2 + Scalar(5) * m.n1);
    DeligneSystem s{pure_filtration(4, 1), out, m.y};
    CHECK(check_deligne_system(s).ok);
  }
  SECTION("composition law, symbolically") {
    std::vector<Mat<Poly>> ns;
    long seed = 1;
    for (int t = 0; t < 4; ++t) {
      Mat<Poly> x(2, 2);
      for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) x(i, j) = Poly(seed++);
      ns.push_back(x);
    }
    Poly a = Poly::var(0), b = Poly::var(1);
    auto lhs = kato_phi(kato_phi(ns, a), b);
    auto rhs = kato_phi(ns, a + b);
    REQUIRE(lhs.size() == rhs.size());
    for (size_t j = 0; j < lhs.size(); ++j) CHECK(lhs[j] == rhs[j]);
  }
}
