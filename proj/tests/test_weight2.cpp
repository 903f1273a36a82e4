#include "nilhodge/weight2.hpp"
#include "nilhodge/models.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nilhodge;
using namespace nilhodge::weight2;

TEST_CASE("model pairings and limit structure") {
  for (auto [a, b, c, d] : std::vector<std::tuple<long, long, long, long>>{
           {2, 1, 0, 0}, {1, 2, 1, 1}, {0, 0, 2, 0}, {1, 0, 0, 1}}) {
    Weight2Model md = build_model(a, b, c, d);
    CAPTURE(a, b, c, d);
    Mat<Scalar> n = md.n0 + md.n1;
    CHECK(md.q == md.q.transpose());
    CHECK(is_infinitesimal_isometry(n, md.q));
    CHECK(commutator(md.n0, md.n1).is_zero_matrix());
    // defining pairings
    Scalar half(1);
    half /= 2;
    for (long s = 0; s < a; ++s) {
      // the named basis vectors really are n0-images: e -> Ne -> N^2 e
      CHECK(md.n0.apply(basis_vector<Scalar>(md.dim, md.e(s)))[md.ne(s)] == Scalar(1));
      CHECK(md.n0.apply(basis_vector<Scalar>(md.dim, md.ne(s)))[md.n2e(s)] == Scalar(1));
      CHECK(md.q(md.e(s), md.n2e(s)) == Scalar(1));
      CHECK(md.q(md.ne(s), md.ne(s)) == Scalar(-1));
    }
    for (long j = 0; j < b; ++j) CHECK(md.q(md.fj(j), md.fj(j)) == Scalar(1));
    for (long s = 0; s < c; ++s) {
      CHECK(md.q(md.u(s), md.nv(s)) == half);
      CHECK(md.q(md.v(s), md.nu(s)) == -half);
      CHECK(md.n1.apply(basis_vector<Scalar>(md.dim, md.u(s)))[md.nu(s)] == Scalar(1));
    }
    for (long s = 0; s < d; ++s) CHECK(md.q(md.x(s), md.x(s)) == -half);
    // the grading operator induces the weight filtration of the nilpotent
    auto w = filtration_of_grading(md.y);
    REQUIRE(w.has_value());
    CHECK(*w == monodromy_filtration(n, 2));
    // split polarized limit structure
    std::string why;
    CHECK(split_orbit_polarized({md.n0, md.n1}, md.f, md.q, 2, &why));
    INFO(why);
    // the canonical bigrading recovers the model pieces
    auto big = deligne_bigrading(*w, md.f);
    REQUIRE(big.has_value());
    for (auto& [pq, piece] : md.pieces) CHECK(big->piece(pq.first, pq.second) == piece);
  }
}

TEST_CASE("the (2,1,0,0) model matches the seven-dimensional example") {
  Weight2Model md = build_model(2, 1, 0, 0);
  auto t = models::two_strings_and_line();
  CHECK(signed_diagram_of(md.n0 + md.n1, BilinearForm{md.q, 1}, 2) ==
        signed_diagram_of(t.n1 + t.n2, BilinearForm{t.gram, 1}, 2));
}

TEST_CASE("symmetry action on nilpotent directions") {
  Weight2Model md = build_model(2, 1, 2, 1);
  LeviElement g = levi_identity(md);
  Scalar third = Scalar(1) / 3;
  g.dmat = Mat<Scalar>(2, 2);
  g.dmat(0, 0) = Scalar(1);
  g.dmat(0, 1) = Scalar(2);
  g.dmat(1, 1) = Scalar(1);
  g.e1 = Mat<Scalar>(2, 2);
  g.e1(0, 0) = Scalar(2);
  g.e1(0, 1) = g.e1(1, 0) = g.e1(1, 1) = Scalar(1);
  g.e2 = Mat<Scalar>(3, 3);  // hyperbolic rotation mixing the two signs
  g.e2(0, 0) = g.e2(2, 2) = Scalar(5) * third;
  g.e2(0, 2) = g.e2(2, 0) = Scalar(4) * third;
  g.e2(1, 1) = Scalar(1);
  g.r = Mat<Scalar>(1, 1);
  g.r(0, 0) = Scalar(-1);
  REQUIRE(levi_valid(md, g));
  Mat<Scalar> gm = levi_embed(md, g);
  CHECK(gm.transpose() * md.q * gm == md.q);  // lands in the isometry group

  Mat<Scalar> xm(2, 2);
  xm(0, 0) = Scalar(1);
  xm(0, 1) = xm(1, 0) = Scalar(2);
  xm(1, 1) = Scalar(3);
  Mat<Scalar> ym(3, 2);
  ym(0, 0) = Scalar(1);
  ym(0, 1) = Scalar(2);
  ym(1, 0) = Scalar(3);
  ym(1, 1) = Scalar(4);
  ym(2, 0) = Scalar(5);
  ym(2, 1) = Scalar(6);
  Mat<Scalar> n = from_g_coords(md, xm, ym);
  CHECK(is_infinitesimal_isometry(n, md.q));
  // action law: conjugation acts by (X, Y) -> (D X D^t, E2 Y E1)
  CHECK(gm * n * *gm.inverse() ==
        from_g_coords(md, g.dmat * xm * g.dmat.transpose(), g.e2 * ym * g.e1));
  // round trip through coordinates
  auto gc = to_g_coords(md, n);
  REQUIRE(gc.has_value());
  CHECK(gc->x == xm);
  CHECK(gc->y == ym);

  SECTION("the orthogonal factor acts trivially") {
    LeviElement flip = levi_identity(md);
    flip.r = g.r;
    Mat<Scalar> fm = levi_embed(md, flip);
    CHECK(fm * n * *fm.inverse() == n);
  }
}

TEST_CASE("open-orbit membership") {
  Weight2Model md = build_model(1, 2, 2, 0);
  CHECK(in_x_orbit(Mat<Scalar>::identity(2)));
  CHECK_FALSE(in_x_orbit(Mat<Scalar>::identity(2) * Scalar(-1)));
  Mat<Scalar> y0(3, 1);
  y0(0, 0) = Scalar(1);
  CHECK(in_y0_orbit(md, y0));
  Mat<Scalar> yneg = y0 * Scalar(-1);
  CHECK(in_y_cone(md, yneg));        // still in the open cone
  CHECK_FALSE(in_y0_orbit(md, yneg));  // but in the other component
  // the standard direction passes the full membership test
  CHECK(orbit_membership(md, md.n0 + md.n1).ok());

  SECTION("positive combinations of definite directions stay definite") {
    Mat<Scalar> x1(2, 2), x2(2, 2);
    x1(0, 0) = Scalar(2);
    x1(0, 1) = x1(1, 0) = x1(1, 1) = Scalar(1);
    x2(0, 0) = Scalar(1);
    x2(1, 1) = Scalar(3);
    for (auto [s, t] : std::vector<std::pair<long, long>>{{1, 1}, {2, 5}, {7, 1}})
      CHECK(in_x_orbit(x1 * Scalar(s) + x2 * Scalar(t)));
  }
}

TEST_CASE("dimension formulas") {
  CHECK(max_cone_dim(2, 1, 0, 0) == 3);
  CHECK(max_cone_dim(0, 2, 3, 1) == 6);
  CHECK(max_cone_dim(1, 3, 2, 0) == 4 + 3);
  CHECK_FALSE(max_cone_dim(3, 0, 0, 0).has_value());
  CHECK(real_rank_bound(2, 1, 0) == 3);
  CHECK(real_rank_bound(0, 4, 2) == 2);
}

TEST_CASE("Hermitian versus contact structure of the V0 factor") {
  for (long a = 0; a <= 3; ++a) {
    Weight2Model md = build_model(a, 1, 0, 0);
    CAPTURE(a);
    CHECK(g11_abelian(md) == (a <= 1));
    CHECK(hermitian_v0_factor(a) == (a <= 1));
    CHECK(g_pq_dim(md, 2, 2) == static_cast<size_t>(a * (a - 1) / 2));
    CHECK(contact_v0_factor(md) == (a == 2));
  }
}

TEST_CASE("five types and their closure order") {
  long m = 9;
  std::map<H2Type, SignedDiagram> ref;
  for (H2Type t : {H2Type::I, H2Type::II, H2Type::III, H2Type::IV, H2Type::V})
    ref[t] = reference_diagram(t, m);
  // chain with the two middle classes incomparable
  CHECK(dokovic_leq(ref[H2Type::I], ref[H2Type::II]));
  CHECK(dokovic_leq(ref[H2Type::I], ref[H2Type::III]));
  CHECK(dokovic_leq(ref[H2Type::II], ref[H2Type::IV]));
  CHECK(dokovic_leq(ref[H2Type::III], ref[H2Type::IV]));
  CHECK(dokovic_leq(ref[H2Type::IV], ref[H2Type::V]));
  CHECK_FALSE(dokovic_leq(ref[H2Type::II], ref[H2Type::III]));
  CHECK_FALSE(dokovic_leq(ref[H2Type::III], ref[H2Type::II]));
  CHECK_FALSE(dokovic_leq(ref[H2Type::II], ref[H2Type::I]));
  CHECK_FALSE(dokovic_leq(ref[H2Type::V], ref[H2Type::IV]));
  // shapes
  CHECK(shape_of(ref[H2Type::V]) == Partition({3, 3, 1, 1, 1}));
  CHECK(shape_of(ref[H2Type::III]) == Partition({2, 2, 2, 2, 1}));
  // face rules
  FaceRules fr = face_constraints(H2Type::III);
  CHECK(fr.allowed == std::vector<H2Type>{H2Type::I, H2Type::III});
  CHECK(fr.max_face_dim[H2Type::III] == 3);
}

TEST_CASE("commuting root sl2s realize all five types") {
  long m = 9;
  RootSystemData all = build_root_sl2s(m, {1, 2, 3, 4});
  REQUIRE(all.triples.size() == 4);
  for (auto& t : all.triples) {
    CHECK(is_infinitesimal_isometry(t.nminus, all.gram));
    CHECK(commutator(t.h, t.nminus) == t.nminus * Scalar(-2));
    CHECK(commutator(t.h, t.nplus) == t.nplus * Scalar(2));
    CHECK(commutator(t.nplus, t.nminus) == t.h);
  }
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      for (auto* a : {&all.triples[i].nminus, &all.triples[i].h, &all.triples[i].nplus})
        for (auto* b : {&all.triples[j].nminus, &all.triples[j].h, &all.triples[j].nplus})
          CHECK(commutator(*a, *b).is_zero_matrix());

  // the full type table over all nonempty subsets
  for (size_t mask = 1; mask < 16; ++mask) {
    std::vector<int> subset;
    for (int r = 1; r <= 4; ++r)
      if (mask & (size_t(1) << (r - 1))) subset.push_back(r);
    RootSystemData rd = build_root_sl2s(m, subset);
    CAPTURE(mask);
    auto t = classify_h2x2_type(rd.generic, rd.gram, m);
    REQUIRE(t.has_value());
    CHECK(*t == predicted_type(subset));
  }

  SECTION("the four directions span a cone of full dimension") {
    std::vector<Mat<Scalar>> gens;
    std::map<int, Scalar> coeff{{1, Scalar(1)}, {2, Scalar(1)}, {3, Scalar(-1)}, {4, Scalar(-1)}};
    for (size_t i = 0; i < 4; ++i) gens.push_back(all.triples[i].nminus * coeff[all.roots[i]]);
    ConeReport rep = cone_check(gens, all.gram, 2);
    INFO(rep.text());
    CHECK(rep.ok);
    CHECK(rep.dim == 4);
  }

  SECTION("small ambient dimension is rejected") {
    CHECK_THROWS(build_root_sl2s(7, {1, 2, 3, 4}));
  }
}

TEST_CASE("cone probing in the seven-dimensional model") {
  Weight2Model md = build_model(2, 1, 0, 0);
  Mat<Scalar> empty_x(0, 0);
  auto ydir = [&](std::initializer_list<std::initializer_list<long>> rows) {
    Mat<Scalar> y(3, 2);
    size_t i = 0;
    for (auto& r : rows) {
      size_t j = 0;
      for (long vv : r) y(i, j++) = Scalar(vv);
      ++i;
    }
    return from_g_coords(md, empty_x, y);
  };
  Mat<Scalar> g1 = ydir({{1, 0}, {0, 0}, {0, 0}});
  Mat<Scalar> g2 = ydir({{1, 0}, {0, 0}, {1, 0}});  // first direction deformed
  Mat<Scalar> g3 = ydir({{0, 0}, {0, 1}, {0, 0}});
  ConeReport rep = cone_check({g1, g2, g3}, md.q, 2, &md);
  INFO(rep.text());
  CHECK(rep.ok);
  CHECK(rep.dim == 3);
  CHECK(static_cast<long>(rep.dim) == *max_cone_dim(2, 1, 0, 0));

  SECTION("a single interior direction passes") {
    ConeReport single = cone_check({md.n0}, md.q, 2, &md);
    CHECK(single.ok);
    CHECK(single.dim == 1);
  }
}
