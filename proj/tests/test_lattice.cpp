#include <doctest.h>

#include "matgor/io.hpp"
#include "matgor/lattice.hpp"

using namespace matgor;

TEST_SUITE("flats-lattice") {
  TEST_CASE("lattice of the rank-2 uniform matroid on 3 elements") {
    auto l = build_lattice(builtin_matroid("m22"));
    CHECK(l.size() == 5);
    CHECK(l.level_sizes() == std::vector<int>{1, 3, 1});
    auto p = lattice_predicates(l);
    CHECK(p.graded);
    CHECK(p.atomic);
    CHECK(p.semimodular);
    CHECK(p.modular);
    CHECK(p.n_atoms == 3);
    CHECK(p.n_coatoms == 3);
  }

  TEST_CASE("five-vector lattice is not modular") {
    auto m = builtin_matroid("fivevec");
    auto l = build_lattice(m);
    CHECK(l.level_sizes() == std::vector<int>{1, 5, 6, 1});
    auto p = lattice_predicates(l);
    CHECK(p.graded);
    CHECK(p.atomic);
    CHECK(p.semimodular);
    CHECK_FALSE(p.modular);
    CHECK(p.greene_consistent);
    REQUIRE(p.non_modular_pair.has_value());
    auto [x, y] = *p.non_modular_pair;
    CHECK(m.rank(x) + m.rank(y) != m.rank(x & y) + m.rank(m.closure(x | y)));
    // {1,3} and {4,5} are disjoint lines spanning the whole space
    int a = l.index_of(from_elements({0, 2})), b = l.index_of(from_elements({3, 4}));
    CHECK(l.meet(a, b) == l.bottom());
    CHECK(l.join(a, b) == l.top());
    CHECK(l.index_of(from_elements({0, 1})) == -1);
  }

  TEST_CASE("projective plane lattices are modular") {
    for (const char* name : {"fano", "m23"}) {
      auto p = lattice_predicates(build_lattice(builtin_matroid(name)));
      CHECK(p.modular);
      CHECK(p.n_atoms == 7);
      CHECK(p.n_coatoms == 7);
    }
    auto u = lattice_predicates(build_lattice(uniform_matroid(3, 4)));
    CHECK_FALSE(u.modular);
    CHECK(u.n_coatoms == 6);
  }

  TEST_CASE("chains and antichains") {
    auto c = RankedPoset::chain(3);
    CHECK(c.size() == 4);
    CHECK(max_antichain(c).size == 1);
    auto b = build_lattice(boolean_matroid(4));
    CHECK(b.size() == 16);
    auto a = max_antichain(b);
    CHECK(a.size == 6);
    CHECK(a.min_chain_cover == 6);
    int covered = 0;
    for (const auto& ch : a.chains) covered += int(ch.size());
    CHECK(covered == 16);
    auto order = b.strict_order();
    for (int i : a.witness)
      for (int j : a.witness) CHECK_FALSE(order[i][j]);
    auto s = sperner_check(b);
    CHECK(s.sperner);
    CHECK(s.max_level == 6);
  }

  TEST_CASE("order-raising maps") {
    auto r = order_raising_maps(builtin_matroid("m23"));
    CHECK(r.certificate);
    REQUIRE(r.maps.size() == 3);
    CHECK(r.maps[1].rank == 7);
    for (const auto& mp : r.maps) CHECK(mp.support_ok);
    auto zero = order_raising_maps(builtin_matroid("m22"), std::vector<Rational>(3, 0));
    CHECK_FALSE(zero.certificate);
    CHECK_THROWS_AS(order_raising_maps(builtin_matroid("fivevec")), DimensionMismatch);
    CHECK_THROWS_AS(order_raising_maps(builtin_matroid("m22"), std::vector<Rational>(2, 1)), InputError);
  }
}
