#include <doctest.h>

#include "matgor/inverse_system.hpp"
#include "matgor/io.hpp"
#include "matgor/linalg.hpp"

using namespace matgor;

TEST_SUITE("inverse-systems") {
  TEST_CASE("exact linear algebra") {
    QMatrix a(3, 3);
    int v[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = v[i][j];
    CHECK(determinant(a) == -1);
    CHECK(rank(a) == 3);
    a(2, 0) = Rational(3, 1);
    a(2, 1) = 4;
    a(2, 2) = 3;  // row 3 = row 1 + row 2
    CHECK(rank(a) == 2);
    CHECK(determinant(a) == 0);
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    for (int i = 0; i < 3; ++i) {
      Rational s = 0;
      for (int j = 0; j < 3; ++j) s += a(i, j) * ns[0][j];
      CHECK(s == 0);
    }
    CHECK(ns[0][2] == 1);
    QMatrix b = a;
    auto piv = rref(b);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK((QMatrix::identity(3) * a) == a);
  }

  TEST_CASE("echelon basis expresses combinations") {
    EchelonBasis eb;
    CHECK(eb.add({{0, Rational(1)}, {2, Rational(2)}}));
    CHECK(eb.add({{1, Rational(1)}, {2, Rational(1)}}));
    CHECK_FALSE(eb.add({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(7)}}));
    auto c = eb.express({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(7)}});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK_FALSE(eb.express({{3, Rational(1)}}).has_value());
    CHECK(primitive(std::vector<Rational>{Rational(1, 2), Rational(-3, 4)}) == std::vector<Integer>{2, -3});
  }

  TEST_CASE("Boolean and uniform quotients") {
    CHECK(ann_hilbert(phi(boolean_matroid(3)), 3) == HilbertVector{1, 3, 3, 1});
    CHECK(jm_hilbert(boolean_matroid(3)) == HilbertVector{1, 3, 3, 1});
    auto u = uniform_matroid(2, 3);
    auto r = ann_equals_jm(u);
    CHECK(r.equal);
    CHECK(r.hilbert_ann == HilbertVector{1, 3, 1});
    CHECK(r.extra_generators.empty());
    CHECK(is_gorenstein(GradedQuotient::ann(phi(u), 3)));
    CHECK(is_gorenstein(GradedQuotient::jm(u)));
  }

  TEST_CASE("five-vector matroid: Ann differs from J") {
    auto m = builtin_matroid("fivevec");
    auto r = ann_equals_jm(m);
    CHECK_FALSE(r.equal);
    CHECK(r.hilbert_ann == HilbertVector{1, 5, 5, 1});
    CHECK(r.hilbert_jm == HilbertVector{1, 5, 6, 1});
    REQUIRE(r.extra_generators.count(2) == 1);
    REQUIRE(r.extra_generators.at(2).size() == 1);
    CHECK(to_string(r.extra_generators.at(2)[0]) == "1 * x1*x3 - 1 * x1*x5 - 1 * x3*x4 + 1 * x4*x5");
    auto qa = GradedQuotient::ann(phi(m), 5);
    auto qj = GradedQuotient::jm(m);
    CHECK(is_gorenstein(qa));
    CHECK_FALSE(is_gorenstein(qj));
    auto pr = poincare_pairing_ranks(qj);
    REQUIRE(pr.size() == 2);
    CHECK(pr[1].rank == 5);
    CHECK(pr[1].dim_high == 6);
    CHECK(catalecticant_rank_lemma(m, 1));
  }

  TEST_CASE("quotient multiplication") {
    auto m = projective_geometry(2, 3);
    auto q = GradedQuotient::ann(phi(m), 7);
    CHECK(q.hilbert() == HilbertVector{1, 7, 7, 1});
    auto ones = std::vector<Rational>(7, 1);
    auto m1 = q.multiplication(ones, 1);
    CHECK(m1.rows() == 7);
    CHECK(m1.cols() == 7);
    CHECK(rank(m1) == 7);
    CHECK(rank(q.power_map(ones, 0, 3)) == 1);
    // x_e^2 = 0 and circuit monomials vanish
    CHECK(q.coords(from_elements({0, 1, 2})) == std::vector<Rational>{0});
    auto p = q.pairing(1);
    CHECK(rank(p) == 7);
  }

  TEST_CASE("invalid Ann inputs") {
    CHECK_THROWS_AS(GradedQuotient::ann(SquareFreePoly{}, 3), InputError);
    CHECK_THROWS_AS(GradedQuotient::ann(parse_square_free("x1 + x1*x2"), 3), InputError);
    CHECK_THROWS_AS(GradedQuotient::ann(parse_square_free("x4"), 3), InputError);
    CHECK_THROWS_AS(catalecticant_rank_lemma(builtin_matroid("fivevec"), 2), InputError);
  }
}
