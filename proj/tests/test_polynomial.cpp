#include <doctest.h>

#include "matgor/io.hpp"
#include "matgor/polynomial.hpp"

using namespace matgor;

TEST_SUITE("multilinear-poly") {
  TEST_CASE("canonical text form") {
    auto f = parse_square_free("x2*x1 + 3/6 * x3 - 2");
    CHECK(to_string(f) == "-2 + 1/2 * x3 + 1 * x1*x2");
    CHECK(to_string(parse_square_free("0")) == "0");
    CHECK(to_string(parse_square_free("x1 - x1")) == "0");
    CHECK(to_string(parse_poly("x1^2 * x2 - 4*x3", 3)) == "-4 * x3 + 1 * x1*x1*x2");
    CHECK(parse_poly("2*x1*x1", 2) == parse_poly("2 * x1^2", 2));
  }

  TEST_CASE("round trip") {
    for (const char* s : {"1 * x1*x2 + 1 * x1*x3", "-1/3 * x4 + 7 * x1*x2*x5", "5",
                          "1 * x1*x3 - 1 * x1*x5 - 1 * x3*x4 + 1 * x4*x5"}) {
      CHECK(to_string(parse_square_free(s)) == s);
      CHECK(to_string(parse_poly(s, 5)) == s);
    }
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_square_free(""), InputError);
    CHECK_THROWS_AS(parse_square_free("x1*x1"), InputError);
    CHECK_THROWS_AS(parse_square_free("x0"), InputError);
    CHECK_THROWS_AS(parse_square_free("1 * x1 x2"), InputError);
    CHECK_THROWS_AS(parse_square_free("1/0 * x1"), InputError);
    CHECK_THROWS_AS(parse_poly("x4", 3), InputError);
  }

  TEST_CASE("basis generating polynomial") {
    auto m = builtin_matroid("fivevec");
    auto f = phi(m);
    CHECK(f.terms().size() == 8);
    CHECK(f.degree() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f.coefficient(from_elements({0, 1, 3})) == 0);
    CHECK(f.coefficient(from_elements({0, 1, 2})) == 1);
    CHECK(phi_level(m, 1).terms().size() == 5);
    CHECK(phi_level(m, 0) == SquareFreePoly::monomial(0));
  }

  TEST_CASE("differential operators") {
    auto f = parse_square_free("1 * x1*x2 + 1 * x1*x3 + 1 * x2*x3");
    CHECK(to_string(apply_diff(singleton(0), f)) == "1 * x2 + 1 * x3");
    CHECK(apply_diff(from_elements({0, 1, 2}), f).is_zero());
    auto op = parse_poly("x1 - x2", 3);
    CHECK(to_string(apply_diff(op, f)) == "-1 * x1 + 1 * x2");
    CHECK(apply_diff(parse_poly("x1^2", 3), f).is_zero());
  }

  TEST_CASE("evaluation and arithmetic") {
    auto f = parse_square_free("1 * x1*x2 - 2 * x3");
    CHECK(f.evaluate({Rational(2), Rational(3), Rational(1, 2)}) == 5);
    auto g = parse_square_free("1 * x4");
    CHECK(to_string(f.mul_disjoint(g)) == "-2 * x3*x4 + 1 * x1*x2*x4");
    CHECK(to_string(g.shifted(1)) == "1 * x5");
    auto p = parse_poly("x1 + x2", 2);
    auto q = parse_poly("x1 - x2", 2);
    CHECK((p * q) == parse_poly("x1^2 - x2^2", 2));
    CHECK((p * q).exact_div(q) == p);
  }

  TEST_CASE("Hessian of x1*x2*x3") {
    auto g = parse_square_free("1 * x1*x2*x3");
    std::vector<DiffPoly> basis = {Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    CHECK(hessian_det_at(basis, g, {Rational(1), Rational(1), Rational(1)}) == 2);
    CHECK(hessian_det_symbolic(basis, g, 3) == parse_poly("2 * x1*x2*x3", 3));
    CHECK(hessian_det_at(basis, g, {Rational(2), Rational(3), Rational(5)}) == 60);
  }

  TEST_CASE("bareiss determinant with pivoting") {
    const int n = 2;
    std::vector<std::vector<Poly>> a = {{Poly(n), Poly::variable(n, 0)}, {Poly::variable(n, 1), Poly::constant(n, 3)}};
    CHECK(bareiss_determinant(a, n) == parse_poly("-1 * x1*x2", n));
  }
}
