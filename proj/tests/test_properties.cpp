// Randomized properties over small matroids from random matrices.
#include <doctest.h>

#include <random>

#include "matgor/groebner.hpp"
#include "matgor/inverse_system.hpp"
#include "matgor/io.hpp"
#include "matgor/lattice.hpp"
#include "matgor/polyhedral.hpp"

using namespace matgor;

namespace {

// Loopless matroid from random columns over GF(p); nullopt when rank < 2.
std::optional<Matroid> random_matroid(std::mt19937& rng, int p, int rows, int cols) {
  FiniteField f(p);
  std::vector<std::vector<FiniteField::Element>> c;
  while (int(c.size()) < cols) {
    std::vector<FiniteField::Element> v(rows);
    bool zero = true;
    for (auto& x : v) {
      x = rng() % p;
      zero = zero && x == 0;
    }
    if (!zero) c.push_back(v);
  }
  auto m = from_gf_matrix(GFMatrix::from_columns(f, c));
  if (m.rank() < 2) return std::nullopt;
  return m;
}

std::vector<Matroid> sample(unsigned seed, int count, int max_cols) {
  std::mt19937 rng(seed);
  std::vector<Matroid> out;
  while (int(out.size()) < count) {
    int p = rng() % 2 ? 2 : 3;
    int rows = 2 + rng() % 2;
    int cols = 3 + rng() % (max_cols - 2);
    if (auto m = random_matroid(rng, p, rows, cols)) out.push_back(*m);
  }
  return out;
}

bool symmetric(const std::vector<int>& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("axioms and rank function") {
    for (const auto& m : sample(1, 25, 6)) {
      CHECK_FALSE(m.axiom_violation().has_value());
      CHECK_FALSE(equivalence_lemma_violation(m).has_value());
      for (Subset a = 0; a <= m.ground(); ++a) {
        CHECK(m.rank(a) <= popcount(a));
        CHECK(is_subset(a, m.closure(a)));
        CHECK(m.closure(m.closure(a)) == m.closure(a));
        for (Subset b = a; b <= m.ground(); b += 3) CHECK(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
      }
      auto j = matroid_to_json(m);
      CHECK(matroid_from_json(j).independents() == m.independents());
    }
  }

  TEST_CASE("inverse systems") {
    for (const auto& m : sample(2, 20, 6)) {
      auto r = ann_equals_jm(m);
      CHECK(symmetric(r.hilbert_ann));
      CHECK(r.hilbert_jm == equivalence_classes(m).counts());
      REQUIRE(r.hilbert_ann.size() == r.hilbert_jm.size());
      // J_M is contained in Ann, so the Ann quotient is smaller
      for (std::size_t d = 0; d < r.hilbert_ann.size(); ++d) CHECK(r.hilbert_ann[d] <= r.hilbert_jm[d]);
      CHECK(is_gorenstein(GradedQuotient::ann(phi(m), m.size())));
      CHECK(r.equal == is_gorenstein(GradedQuotient::jm(m)));
      // equality exactly for modular lattices of flats
      auto p = lattice_predicates(build_lattice(m));
      CHECK(r.equal == p.modular);
      CHECK(p.greene_consistent);
      CHECK(build_lattice(m).level_sizes() == r.hilbert_jm);
      for (int l = 0; 2 * l <= m.rank(); ++l) CHECK(catalecticant_rank_lemma(m, l));
    }
  }

  TEST_CASE("universal Groebner basis") {
    for (const auto& m : sample(3, 8, 5)) {
      auto probe = universal_gb_probe(m, 4, 9);
      CHECK(probe.passed);
      CHECK(initial_ideal_oracle_check(m, 3, 5).passed);
    }
  }

  TEST_CASE("polytopes and tropical support function") {
    for (const auto& m : sample(4, 10, 6)) {
      CHECK(support_function_check(m, 15, 2).pass());
      CHECK(edmonds_check(m).pass());
    }
  }

  TEST_CASE("fans on four and five elements") {
    for (const auto& m : sample(5, 6, 5)) {
      auto j = jm_fan(m);
      auto a = ann_fan(m);
      CHECK_FALSE(fan_completeness_violation(j).has_value());
      CHECK_FALSE(fan_completeness_violation(a).has_value());
      CHECK(refines(a, j));
      CHECK(jm_groebner_fan(m).cones == j.cones);
      CHECK(hypersurf_identities(m).pass());
    }
  }

  TEST_CASE("polynomial text round trip") {
    std::mt19937 rng(6);
    for (int t = 0; t < 200; ++t) {
      SquareFreePoly f;
      int terms = rng() % 5;
      for (int i = 0; i < terms; ++i) f.add_term(Subset(rng() % 64), Rational(long(rng() % 21) - 10, long(rng() % 4) + 1));
      auto s = to_string(f);
      CHECK(parse_square_free(s) == f);
      CHECK(to_string(parse_square_free(s)) == s);
    }
  }
}
