#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagint/derived_homology.hpp"

using namespace lagint;

namespace {

Polynomial p(const PolyRing& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

unsigned long table_at(const BigradedDimsTable& t, int k, long d) { return t.at(k, d); }

} // namespace

TEST_CASE("koszul_dg: spec examples") {
  PolyRing line({"x"}, {1});
  auto k1 = koszul_dg({p(line, "x")}, line);
  REQUIRE(k1.odd_generators().size() == 1);
  CHECK(k1.odd_generators()[0].internal_degree == 1);
  CHECK(k1.d_squared_is_zero());

  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  auto k2 = koszul_dg({p(ring, "wx"), p(ring, "wy")}, ring);
  REQUIRE(k2.odd_generators().size() == 2);
  DgWord e1;
  e1.odd = {0};
  CHECK(k2.odd_generators()[0].differential ==
        [&] {
          DgElement el;
          el.add_term(DgWord{}, p(ring, "wx"));
          return el;
        }());

  PolyRing plane({"x", "y"}, {1, 1});
  auto k3 = koszul_dg({p(plane, "x^2"), p(plane, "y^3")}, plane);
  CHECK(k3.odd_generators()[0].internal_degree == 2);
  CHECK(k3.odd_generators()[1].internal_degree == 3);

  CHECK_THROWS_AS(koszul_dg({p(plane, "x"), p(plane, "x*y")}, plane), NotRegular);
}

TEST_CASE("tate_moment_extension: spec examples") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  std::vector<Polynomial> ideal = {p(ring, "wx"), p(ring, "wy")};

  // empty moment list reduces to the Koszul presentation
  auto plain = tate_moment_extension(ideal, {}, {}, ring);
  CHECK(plain.even_generators().empty());
  CHECK(plain.odd_generators().size() == 2);

  // the f = xy moment generator with lift (x, -y)
  std::vector<Polynomial> moment = {p(ring, "x*wx - y*wy")};
  std::vector<std::vector<Polynomial>> lifts = {{p(ring, "x"), p(ring, "-y")}};
  auto tate = tate_moment_extension(ideal, moment, lifts, ring);
  REQUIRE(tate.even_generators().size() == 1);
  const auto& eps = tate.even_generators()[0];
  CHECK(eps.internal_degree == 2);
  // d(eps) = x e1 - y e2 - f, and d(d(eps)) = 0
  DgElement want;
  DgWord w_e1, w_e2, w_f;
  w_e1.even = {0};
  w_e1.odd = {0};
  w_e2.even = {0};
  w_e2.odd = {1};
  w_f.even = {0};
  w_f.odd = {2};
  want.add_term(w_e1, p(ring, "x"));
  want.add_term(w_e2, p(ring, "-y"));
  want.add_term(w_f, p(ring, "-1"));
  CHECK(eps.differential == want);
  CHECK(tate.d_squared_is_zero());

  // tautological lift
  PolyRing line({"x"}, {1});
  auto taut = tate_moment_extension({p(line, "x")}, {p(line, "x")},
                                    {{p(line, "1")}}, line);
  CHECK(taut.d_squared_is_zero());

  // a broken lift is rejected
  CHECK_THROWS_AS(
      tate_moment_extension(ideal, moment, {{p(ring, "x"), p(ring, "y")}}, ring),
      BadLift);
}

TEST_CASE("dg words multiply with Koszul signs") {
  DgWord a, b;
  a.odd = {0};
  b.odd = {1};
  auto ab = word_product(a, b, 0);
  auto ba = word_product(b, a, 0);
  REQUIRE(ab);
  REQUIRE(ba);
  CHECK(ab->second == -ba->second);
  CHECK(!word_product(a, a, 0)); // squares of odd generators vanish
}

TEST_CASE("derived_tensor_dims: diagonal self-intersection (HKR case)") {
  PolyRing ring({"x", "y"}, {1, 1});
  IdealPresentation diag1(ring, {p(ring, "x - y")});
  IdealPresentation diag2(ring, {p(ring, "x - y")});
  Window window{-3, 6};
  auto table = derived_tensor_dims(diag1, diag2, window);
  for (long d = 0; d <= 6; ++d) {
    CHECK(table_at(table, 0, d) == 1);
    CHECK(table_at(table, -1, d) == (d >= 1 ? 1u : 0u));
    CHECK(table_at(table, -2, d) == 0);
  }
}

TEST_CASE("derived_tensor_dims: transverse conormals vanish above degree 0") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  IdealPresentation i(ring, {p(ring, "x"), p(ring, "wy")});
  IdealPresentation j(ring, {p(ring, "y"), p(ring, "wx")});
  Window window{-3, 5};
  auto table = derived_tensor_dims(i, j, window);
  CHECK(table_at(table, 0, 0) == 1);
  for (long d = 1; d <= 5; ++d) CHECK(table_at(table, 0, d) == 0);
  for (int k = 1; k <= 3; ++k)
    for (long d = 0; d <= 5; ++d) CHECK(table_at(table, -k, d) == 0);
}

TEST_CASE("derived_tensor_dims: zero section against the graph of d(x^2)") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  IdealPresentation i(ring, {p(ring, "wx"), p(ring, "wy")});
  IdealPresentation j(ring, {p(ring, "wx - 2*x"), p(ring, "wy")});
  Window window{-3, 6};
  auto table = derived_tensor_dims(i, j, window);
  // H^0 = Q[y]; H^{-1} = Q[y] shifted by the degree of the excess generator
  for (long d = 0; d <= 6; ++d) {
    CHECK(table_at(table, 0, d) == 1);
    CHECK(table_at(table, -1, d) == (d >= 1 ? 1u : 0u));
    CHECK(table_at(table, -2, d) == 0);
  }
}

TEST_CASE("derived_tensor_dims: row zero is the Hilbert function of the sum") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  IdealPresentation i(ring, {p(ring, "wx"), p(ring, "wy")});
  IdealPresentation j(ring, {p(ring, "wx - y"), p(ring, "wy - x")});
  Window window{-2, 8};
  auto table = derived_tensor_dims(i, j, window);
  std::vector<Polynomial> sum = {p(ring, "wx"), p(ring, "wy"), p(ring, "wx - y"),
                                 p(ring, "wy - x")};
  auto hf = hilbert_function(hilbert_series(IdealPresentation(ring, sum)), 8);
  for (long d = 0; d <= 8; ++d)
    CHECK(table_at(table, 0, d) == static_cast<unsigned long>(hf[static_cast<size_t>(d)]));
}

TEST_CASE("derived_tensor_dims is symmetric for regular pairs") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  IdealPresentation i(ring, {p(ring, "wx"), p(ring, "wy")});
  IdealPresentation j(ring, {p(ring, "wx - 2*x"), p(ring, "wy")});
  Window window{-3, 5};
  auto ij = derived_tensor_dims(i, j, window);
  IdealPresentation i2(ring, {p(ring, "wx"), p(ring, "wy")});
  IdealPresentation j2(ring, {p(ring, "wx - 2*x"), p(ring, "wy")});
  auto ji = derived_tensor_dims(j2, i2, window);
  CHECK(ij == ji);
}

TEST_CASE("derived_tensor_dims rejects non-regular presentations") {
  PolyRing ring({"x", "y"}, {1, 1});
  IdealPresentation bad(ring, {p(ring, "x"), p(ring, "x*y")});
  IdealPresentation ok(ring, {p(ring, "y")});
  CHECK_THROWS_AS(derived_tensor_dims(bad, ok, Window{-2, 4}), NotRegular);
}

TEST_CASE("moment_tensor_dims: no moment generators reduces to derived tensor") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  MomentModelData data;
  data.first_ideal = {p(ring, "wx"), p(ring, "wy")};
  data.second_ideal = {p(ring, "wx - 2*x"), p(ring, "wy")};
  Window window{-3, 5};
  auto with = moment_tensor_dims(ring, data, window);
  auto without = derived_tensor_dims(IdealPresentation(ring, data.first_ideal),
                                     IdealPresentation(ring, data.second_ideal), window);
  CHECK(with == without);
}

TEST_CASE("moment_tensor_dims: the f = xy Tate model") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  MomentModelData data;
  data.first_ideal = {p(ring, "wx"), p(ring, "wy")};
  data.second_ideal = {p(ring, "wx - y"), p(ring, "wy - x")};
  data.moment_gens = {p(ring, "x*wx - y*wy")};
  data.lifts = {{p(ring, "x"), p(ring, "-y")}};
  Window window{-6, 8};
  auto table = moment_tensor_dims(ring, data, window);
  // homology is one dimensional at (0,0), (-2,2), (-4,4), (-6,6): the
  // epsilon-polynomial classes computed by hand
  for (int k = -6; k <= 0; ++k)
    for (long d = 0; d <= 8; ++d) {
      unsigned long want = (k % 2 == 0 && d == -k) ? 1u : 0u;
      CHECK(table_at(table, k, d) == want);
    }
}

TEST_CASE("moment_tensor_dims: transverse conormal pair with a moment generator") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  MomentModelData data;
  data.first_ideal = {p(ring, "x"), p(ring, "wy")};
  data.second_ideal = {p(ring, "y"), p(ring, "wx")};
  data.moment_gens = {p(ring, "x*wx - y*wy")};
  data.lifts = {{p(ring, "wx"), p(ring, "-y")}};
  Window window{-6, 8};
  auto table = moment_tensor_dims(ring, data, window);
  // H^0 block at the origin plus the epsilon tail of period 2
  for (int k = -6; k <= 0; ++k)
    for (long d = 0; d <= 8; ++d) {
      unsigned long want = (k % 2 == 0 && d == -k) ? 1u : 0u;
      CHECK(table_at(table, k, d) == want);
    }
}

TEST_CASE("moment_tensor_dims validates its inputs") {
  PolyRing ring({"x", "y", "wx", "wy"}, {1, 1, 1, 1});
  MomentModelData data;
  data.first_ideal = {p(ring, "wx"), p(ring, "wy")};
  data.second_ideal = {p(ring, "wx - y"), p(ring, "wy - x")};
  data.moment_gens = {p(ring, "x*wx - y*wy")};
  data.lifts = {{p(ring, "x"), p(ring, "y")}};
  CHECK_THROWS_AS(moment_tensor_dims(ring, data, Window{-2, 4}), BadLift);

  // a valid lift whose moment generator misses the second ideal
  data.lifts = {{p(ring, "x"), Polynomial(ring)}};
  data.moment_gens = {p(ring, "x*wx")};
  CHECK_THROWS_AS(moment_tensor_dims(ring, data, Window{-2, 4}),
                  MomentNotInIntersection);
}

TEST_CASE("sym_two_term_prediction: wedge only") {
  PolyRing bring({"u"}, {1});
  QuotientRing base(bring, {});
  std::vector<FreeSummand> wedge = {{1, {}}};
  // p = k with no sym part: dims of wedge^k alone
  Window window{-4, 5};
  auto p1 = sym_two_term_prediction(base, wedge, {}, {}, 1, window);
  for (long d = 0; d <= 5; ++d)
    CHECK(p1.at(-1, d) == (d >= 1 ? 1u : 0u));
  auto p2 = sym_two_term_prediction(base, wedge, {}, {}, 2, window);
  CHECK(p2.entries.empty()); // wedge^2 of a rank-1 module vanishes
}

TEST_CASE("sym_two_term_prediction: sym only, rank 1 in degree -2") {
  PolyRing point({}, {});
  QuotientRing base(point, {});
  std::vector<FreeSummand> sym = {{2, {}}};
  Window window{-6, 8};
  for (unsigned p = 0; p <= 3; ++p) {
    auto table = sym_two_term_prediction(base, {}, sym, {{}}, p, window);
    for (int k = -6; k <= 0; ++k)
      for (long d = 0; d <= 8; ++d) {
        unsigned long want =
            (k == -2 * static_cast<int>(p) && d == 2 * static_cast<long>(p)) ? 1u : 0u;
        CHECK(table.at(k, d) == want);
      }
  }
}

TEST_CASE("sym_two_term_prediction: zero map gives the Kunneth product") {
  PolyRing point({}, {});
  QuotientRing base(point, {});
  std::vector<FreeSummand> wedge = {{1, {}}};
  std::vector<FreeSummand> sym = {{2, {}}};
  std::vector<std::vector<Polynomial>> zero_map = {{Polynomial(point)}};
  Window window{-6, 8};
  // p = 2: pieces wedge^1 (x) sym^1 at hom -3 and sym^2 at hom -4
  auto table = sym_two_term_prediction(base, wedge, sym, zero_map, 2, window);
  CHECK(table.at(-3, 3) == 1); // e (deg 1) * eps (deg 2)
  CHECK(table.at(-4, 4) == 1); // eps^2
  CHECK(table.at(-2, 2) == 0);
}

TEST_CASE("wedge_power_hilbert: free modules count shifted monomials") {
  PolyRing bring({"u", "v"}, {1, 1});
  QuotientRing base(bring, {});
  GradedModulePresentation module;
  module.generators = {{1, {}}, {1, {}}};
  auto w1 = wedge_power_hilbert(base, module, 1, 5);
  // two generators of degree 1 over Q[u,v]: dims 2*binom(d-1+1, 1)
  CHECK(w1.at(1) == 2);
  CHECK(w1.at(2) == 4);
  CHECK(w1.at(3) == 6);
  auto w2 = wedge_power_hilbert(base, module, 2, 5);
  CHECK(w2.at(2) == 1);
  CHECK(w2.at(4) == 3);
  CHECK(wedge_power_hilbert(base, module, 3, 5).empty());
}

TEST_CASE("wedge_power_hilbert with relations") {
  // coker of Q[u](-1) --u--> Q[u](0)+Q[u](-1): Omega-style presentation
  PolyRing bring({"u"}, {1});
  QuotientRing base(bring, {});
  GradedModulePresentation module;
  module.generators = {{0, {}}, {1, {}}};
  // relation u * g0 - 1 * g1 = 0 (degree 1)
  module.relations = {{parse_polynomial(bring, "u"), parse_polynomial(bring, "-1")}};
  auto w1 = wedge_power_hilbert(base, module, 1, 4);
  // the quotient is free of rank 1 generated in degree 0
  CHECK(w1.at(0) == 1);
  CHECK(w1.at(1) == 1);
  CHECK(w1.at(2) == 1);
}
