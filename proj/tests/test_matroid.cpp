#include <doctest.h>

#include "matgor/io.hpp"
#include "matgor/matroid.hpp"

using namespace matgor;

TEST_SUITE("matroid-core") {
  TEST_CASE("five-vector matroid basics") {
    auto m = builtin_matroid("fivevec");
    CHECK(m.size() == 5);
    CHECK(m.rank() == 3);
    CHECK(m.bases().size() == 8);
    CHECK(m.level(2).size() == 10);
    CHECK(m.loops() == 0);
    // {1,2,4} and {2,3,5} are the dependent triples
    CHECK_FALSE(m.is_independent(from_elements({0, 1, 3})));
    CHECK_FALSE(m.is_independent(from_elements({1, 2, 4})));
    CHECK(m.closure(from_elements({0, 1})) == from_elements({0, 1, 3}));
    CHECK(m.closure(from_elements({0, 2})) == from_elements({0, 2}));
    CHECK(m.rank(m.ground()) == 3);
    CHECK_FALSE(m.axiom_violation().has_value());
    CHECK(m.describe(from_elements({0, 3})) == "{1,4}");
  }

  TEST_CASE("equivalence classes of the five-vector matroid") {
    auto m = builtin_matroid("fivevec");
    auto ec = equivalence_classes(m);
    CHECK(ec.counts() == std::vector<int>{1, 5, 6, 1});
    int big = 0;
    for (const auto& c : ec.levels[2])
      if (c.members.size() > 1) {
        ++big;
        CHECK(c.members.size() == 3);
        CHECK(popcount(c.flat) == 3);
      }
    CHECK(big == 2);
    CHECK(ec.levels[3].front().members.size() == 8);
    CHECK_FALSE(equivalence_lemma_violation(m).has_value());
    for (Subset s : m.independents()) {
      int i = ec.class_index(s);
      CHECK(ec.levels[popcount(s)][i].flat == m.closure(s));
    }
  }

  TEST_CASE("projective geometries") {
    auto m = projective_geometry(2, 2);
    CHECK(m.size() == 3);
    CHECK(m.rank() == 2);
    auto f = projective_geometry(2, 3);
    CHECK(f.size() == 7);
    CHECK(f.bases().size() == 28);
    CHECK(equivalence_classes(f).counts() == std::vector<int>{1, 7, 7, 1});
    CHECK(isomorphic(f, builtin_matroid("fano")));
    CHECK(equivalence_classes(projective_geometry(3, 3)).counts() == std::vector<int>{1, 13, 13, 1});
    CHECK_THROWS_AS(projective_geometry(2, 6), GuardExceeded);
  }

  TEST_CASE("constructions") {
    auto b = boolean_matroid(4);
    CHECK(b.rank() == 4);
    CHECK(b.bases().size() == 1);
    auto u = uniform_matroid(2, 4);
    CHECK(u.bases().size() == 6);
    CHECK(truncation(b, 2).bases().size() == 6);
    CHECK(isomorphic(truncation(b, 2), u));
    auto ds = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
    CHECK(ds.size() == 4);
    CHECK(ds.bases().size() == 4);
    CHECK_FALSE(isomorphic(ds, u));
    CHECK_THROWS_AS(truncation(b, 5), InputError);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(from_bases(numeric_labels(3), {}), InputError);
    CHECK_THROWS_AS(from_bases(numeric_labels(3), {from_elements({0}), from_elements({1, 2})}), InputError);
    // {1,2}, {3,4}: exchanging 1 needs {2,3} or {2,4}
    CHECK_THROWS_AS(from_bases(numeric_labels(4), {from_elements({0, 1}), from_elements({2, 3})}),
                    BasisExchangeViolation);
    CHECK_THROWS_AS(Matroid(numeric_labels(3), {0, from_elements({0, 1})}), AxiomViolation);
    CHECK_THROWS_AS(projective_plane({{1, 2, 3}, {1, 4, 5}, {2, 4, 6}}), AxiomViolation);
    CHECK_THROWS_AS(boolean_matroid(41), GuardExceeded);
  }

  TEST_CASE("subset helpers") {
    CHECK(k_subsets(5, 2).size() == 10);
    CHECK(lex_less(from_elements({0, 1}), from_elements({0, 1, 2})));
    CHECK(lex_less(from_elements({0, 1, 2}), from_elements({0, 2})));
    CHECK(elements(from_elements({4, 1, 3})) == std::vector<int>{1, 3, 4});
  }
}
