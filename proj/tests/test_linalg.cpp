#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lagint/cyclotomic.hpp"
#include "lagint/finite_complex.hpp"
#include "lagint/poincare_series.hpp"
#include "lagint/sparse_matrix.hpp"

using namespace lagint;

TEST_CASE("cyclotomic polynomials") {
  CHECK(Scalar::cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(Scalar::cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(Scalar::cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
  CHECK(Scalar::cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(Scalar::cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(Scalar::cyclotomic_polynomial(12) ==
        std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic arithmetic is exact") {
  Scalar z = Scalar::root_of_unity(4, 1);
  CHECK(z * z == Scalar(-1));
  CHECK(z * z * z * z == Scalar::one());
  // zeta_n^n = 1 identically for several orders
  for (unsigned n : {2u, 3u, 5u, 6u, 8u}) {
    Scalar w = Scalar::root_of_unity(n, 1);
    Scalar acc = Scalar::one();
    for (unsigned k = 0; k < n; ++k) acc = acc * w;
    CHECK(acc == Scalar::one());
  }
  // inverse in Q(zeta_3): (1 + zeta) has inverse -zeta^2 = 1 + zeta... check
  Scalar z3 = Scalar::root_of_unity(3, 1);
  Scalar a = Scalar::one() + z3;
  CHECK(a * a.inverse() == Scalar::one());
  // division by a rational mixes in
  CHECK((z3 / Scalar(2)) * Scalar(2) == z3);
}

TEST_CASE("rank: spec examples") {
  SparseMatrix id2(2, 2);
  id2.set(0, 0, Scalar::one());
  id2.set(1, 1, Scalar::one());
  CHECK(id2.rank() == 2);

  SparseMatrix zero(3, 4);
  CHECK(zero.rank() == 0);

  SparseMatrix dependent(2, 2);
  dependent.set(0, 0, Scalar(1));
  dependent.set(0, 1, Scalar(2));
  dependent.set(1, 0, Scalar(2));
  dependent.set(1, 1, Scalar(4));
  CHECK(dependent.rank() == 1);
}

TEST_CASE("rank plus kernel dimension equals column count") {
  // deterministic pseudo-random small matrices over Q
  unsigned long state = 12345;
  auto next = [&]() {
    state = state * 6364136223846793005ul + 1442695040888963407ul;
    return static_cast<long>((state >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 20; ++trial) {
    size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 6;
    SparseMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        long v = next();
        if (v != 0) m.set(r, c, Scalar(v));
      }
    CHECK(m.rank() + m.kernel_dim() == cols);
  }
}

TEST_CASE("solve returns exact solutions") {
  SparseMatrix m(2, 2);
  m.set(0, 0, Scalar(2));
  m.set(0, 1, Scalar(1));
  m.set(1, 1, Scalar(3));
  auto x = m.solve({Scalar(5), Scalar(9)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::one());
  CHECK((*x)[1] == Scalar(3));
  // inconsistent system
  SparseMatrix bad(2, 1);
  bad.set(0, 0, Scalar(1));
  bad.set(1, 0, Scalar(1));
  CHECK(!bad.solve({Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("homology: exact two-term complex") {
  FiniteComplex c(0, {1, 1});
  c.differential_from(0).set(0, 0, Scalar::one());
  auto h = c.homology_dims();
  CHECK(h.at(0) == 0);
  CHECK(h.at(1) == 0);
}

TEST_CASE("homology: zero differentials give term dimensions") {
  FiniteComplex c(-2, {3, 5, 2});
  auto h = c.homology_dims();
  CHECK(h.at(-2) == 3);
  CHECK(h.at(-1) == 5);
  CHECK(h.at(0) == 2);
}

TEST_CASE("homology: NotAComplex when d o d is nonzero") {
  FiniteComplex c(0, {1, 1, 1});
  c.differential_from(0).set(0, 0, Scalar::one());
  c.differential_from(1).set(0, 0, Scalar::one());
  CHECK_THROWS_AS(c.homology_dims(), NotAComplex);
}

// Koszul complex blocks for the pair (2x, 0) over Q[x,y], assembled by hand:
// generators e1 (internal degree 1, d(e1) = 2x) and e2 (internal degree 0,
// d(e2) = 0).  Expected graded dims: H_0 and H_1 both (1,1,1,1,1) in internal
// degrees 0..4, H_2 = 0.
TEST_CASE("homology: Koszul blocks of (2x, 0) over Q[x,y]") {
  auto monomials = [](long degree) {
    // monomials x^a y^b of total degree `degree`; index = a
    return static_cast<size_t>(degree + 1);
  };
  for (long d = 0; d <= 4; ++d) {
    // term dims at internal degree d:
    //   hom -2: e1e2 with coefficient degree d-1
    //   hom -1: e1 (coeff degree d-1) + e2 (coeff degree d)
    //   hom  0: coeff degree d
    size_t dim_e1e2 = d >= 1 ? monomials(d - 1) : 0;
    size_t dim_e1 = d >= 1 ? monomials(d - 1) : 0;
    size_t dim_e2 = monomials(d);
    size_t dim_r = monomials(d);
    FiniteComplex block(-2, {dim_e1e2, dim_e1 + dim_e2, dim_r});
    // d(e1 * m) = 2x m ; d(e2 * m) = 0 ; d(e1e2 * m) = 2x m e2
    // basis order in hom -1: e1-part first, then e2-part
    auto& d1 = block.differential_from(-1);
    for (size_t a = 0; a < dim_e1; ++a) {
      // x^a y^{d-1-a} * 2x = 2 x^{a+1} y^{d-1-a}: row index a+1 in degree-d list
      d1.set(a + 1, a, Scalar(2));
    }
    auto& d2 = block.differential_from(-2);
    for (size_t a = 0; a < dim_e1e2; ++a) d2.set(dim_e1 + a + 1, a, Scalar(2));
    auto h = block.homology_dims();
    CHECK(h.at(0) == 1);
    CHECK(h.at(-1) == 1);
    CHECK(h.at(-2) == 0);
  }
}

TEST_CASE("series_truncate: spec examples") {
  // 1/(1-t^2), N=6
  PoincareSeries geo = PoincareSeries::inverse_one_minus_t2(1);
  auto c = series_truncate(geo, 6);
  std::vector<Rational> want{1, 0, 1, 0, 1, 0, 1};
  CHECK(c == want);

  // (1-t^4)/(1-t^2), N=4 -> 1 + t^2
  PoincareSeries frac(Poly1(std::vector<Integer>{1, 0, 0, 0, -1}),
                      Poly1(std::vector<Integer>{1, 0, -1}));
  auto c2 = series_truncate(frac, 4);
  std::vector<Rational> want2{1, 0, 1, 0, 0};
  CHECK(c2 == want2);

  // 1/1, N=3
  auto c3 = series_truncate(PoincareSeries::constant(Integer(1)), 3);
  std::vector<Rational> want3{1, 0, 0, 0};
  CHECK(c3 == want3);
}

TEST_CASE("poincare series arithmetic and simplification") {
  PoincareSeries a = PoincareSeries::inverse_one_minus_t2(2);
  PoincareSeries b = PoincareSeries::inverse_one_minus_t2(1).shifted(2);
  PoincareSeries diff = (a - b * PoincareSeries::inverse_one_minus_t2(1)).simplified();
  // 1/(1-t^2)^2 - t^2/(1-t^2)^2 = 1/(1-t^2)
  CHECK(diff.equals(PoincareSeries::inverse_one_minus_t2(1)));
  CHECK(diff.to_string() == PoincareSeries::inverse_one_minus_t2(1).to_string());
}
