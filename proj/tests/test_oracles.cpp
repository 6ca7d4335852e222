// Independent recomputations of frozen values.
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "matgor/groebner.hpp"
#include "matgor/inverse_system.hpp"
#include "matgor/io.hpp"
#include "matgor/lattice.hpp"
#include "matgor/lefschetz.hpp"
#include "matgor/polyhedral.hpp"
#include "matgor/report.hpp"

using namespace matgor;

namespace {

// rank of a set of GF(2) vectors (bitmasks) from the size of their span
int span_rank(const std::vector<unsigned>& vs) {
  std::set<unsigned> span{0};
  for (unsigned v : vs) {
    std::set<unsigned> next = span;
    for (unsigned s : span) next.insert(s ^ v);
    span = std::move(next);
  }
  int r = 0;
  while ((1u << r) < span.size()) ++r;
  return r;
}

int brute_rank(const Matroid& m, Subset s) {
  int best = 0;
  for (Subset t : m.independents())
    if (is_subset(t, s)) best = std::max(best, popcount(t));
  return best;
}

// Hilbert vector of Q/Ann f from dense catalecticant matrices
std::vector<int> naive_ann_hilbert(const SquareFreePoly& f, int n) {
  const int top = f.degree();
  std::vector<int> h;
  for (int d = 0; d <= top; ++d) {
    auto rows = k_subsets(n, d);
    auto cols = k_subsets(n, top - d);
    QMatrix c(int(rows.size()), int(cols.size()));
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j)
        if (!(rows[i] & cols[j])) c(i, j) = f.coefficient(rows[i] | cols[j]);
    h.push_back(rank(c));
  }
  return h;
}

int brute_max_antichain(const FlatLattice& l) {
  const int n = l.size();
  REQUIRE(n <= 20);
  auto lt = l.strict_order();
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int c = std::popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (s >> i & 1)
        for (int j = 0; j < n && ok; ++j)
          if ((s >> j & 1) && lt[i][j]) ok = false;
    if (ok) best = c;
  }
  return best;
}

IVec iv(std::initializer_list<long> xs) { return to_ivec(std::vector<long>(xs)); }

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("GF(2) rank against span size") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
      const int rows = 4, cols = 6;
      std::vector<std::vector<FiniteField::Element>> c(cols, std::vector<FiniteField::Element>(rows));
      std::vector<unsigned> masks(cols, 0);
      for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
          c[j][i] = rng() & 1;
          if (c[j][i]) masks[j] |= 1u << i;
        }
      auto m = GFMatrix::from_columns(FiniteField(2), c);
      for (Subset s = 0; s < 64; ++s) {
        std::vector<unsigned> sel;
        for (int e : elements(s)) sel.push_back(masks[e]);
        CHECK(gf_rank(m, s) == span_rank(sel));
      }
    }
  }

  TEST_CASE("closure against brute-force rank") {
    for (const char* name : {"fivevec", "m23", "m22"}) {
      auto m = builtin_matroid(name);
      for (Subset s = 0; s <= m.ground(); ++s) {
        const int r = brute_rank(m, s);
        CHECK(m.rank(s) == r);
        Subset cl = 0;
        for (int e = 0; e < m.size(); ++e)
          if (brute_rank(m, s | singleton(e)) == r) cl |= singleton(e);
        CHECK(m.closure(s) == cl);
      }
    }
  }

  TEST_CASE("Hilbert vectors from dense catalecticants") {
    auto five = builtin_matroid("fivevec");
    CHECK(naive_ann_hilbert(phi(five), 5) == std::vector<int>{1, 5, 5, 1});
    CHECK(ann_hilbert(phi(five), 5) == naive_ann_hilbert(phi(five), 5));
    auto fano = builtin_matroid("m23");
    CHECK(naive_ann_hilbert(phi(fano), 7) == std::vector<int>{1, 7, 7, 1});
    CHECK(naive_ann_hilbert(phi(builtin_matroid("m22")), 3) == std::vector<int>{1, 3, 1});
    auto u = uniform_matroid(3, 6);
    CHECK(ann_hilbert(phi(u), 6) == naive_ann_hilbert(phi(u), 6));
  }

  TEST_CASE("J_M Hilbert vectors") {
    CHECK(jm_hilbert(builtin_matroid("m22")) == std::vector<int>{1, 3, 1});
    CHECK(jm_hilbert(builtin_matroid("m23")) == std::vector<int>{1, 7, 7, 1});
    CHECK(jm_hilbert(builtin_matroid("fivevec")) == std::vector<int>{1, 5, 6, 1});
  }

  TEST_CASE("q-binomials by counting subspaces") {
    for (int q : {2, 3}) {
      const int n = 3;
      auto f = FiniteField::of_order(q);
      // all nonzero vectors of GF(q)^n
      std::vector<std::vector<FiniteField::Element>> vecs;
      for (int code = 1; code < q * q * q; ++code)
        vecs.push_back({FiniteField::Element(code % q), FiniteField::Element(code / q % q),
                        FiniteField::Element(code / q / q)});
      auto all = GFMatrix::from_columns(f, vecs);
      std::vector<long> counts{1};
      // subspaces of dimension k: independent ordered k-tuples / |GL_k|
      long gl = 1;
      for (int k = 1; k <= n; ++k) {
        long tuples = 0;
        std::vector<int> idx(k, 0);
        std::function<void(int)> rec = [&](int i) {
          if (i == k) {
            tuples += gf_rank(all, idx) == k;
            return;
          }
          for (int v = 0; v < int(vecs.size()); ++v) {
            idx[i] = v;
            rec(i + 1);
          }
        };
        rec(0);
        long qk = 1;
        for (int i = 0; i < k; ++i) qk *= q;
        long pw = 1;
        gl = 1;
        for (int i = 0; i < k; ++i) {
          gl *= qk - pw;
          pw *= q;
        }
        counts.push_back(tuples / gl);
      }
      CHECK(q_binomials(q, n) == counts);
    }
  }

  TEST_CASE("Sperner numbers by exhaustive antichains") {
    for (const char* name : {"fivevec", "m22", "fano"}) {
      auto l = build_lattice(builtin_matroid(name));
      CHECK(max_antichain(l).size == brute_max_antichain(l));
    }
    CHECK(brute_max_antichain(build_lattice(builtin_matroid("fano"))) == 7);
  }

  TEST_CASE("J_M fan of the five-vector matroid from all chambers") {
    auto m = builtin_matroid("fivevec");
    const int n = m.size();
    auto ec = equivalence_classes(m);
    std::vector<const EquivClass*> big;
    for (const auto& lv : ec.levels)
      for (const auto& c : lv)
        if (c.members.size() > 1) big.push_back(&c);
    REQUIRE(big.size() == 3);
    auto v = [n](Subset s) {
      IVec out(n, 0);
      for (int e : elements(s)) out[e] = 1;
      return out;
    };
    int selections = 0;
    std::set<RationalCone> chambers;
    std::vector<std::size_t> pick(big.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == big.size()) {
        ++selections;
        std::vector<IVec> ineq;
        for (std::size_t k = 0; k < big.size(); ++k) {
          Subset mn = big[k]->members[pick[k]];
          for (Subset f : big[k]->members) {
            if (f == mn) continue;
            IVec d = v(f);
            auto vm = v(mn);
            for (int e = 0; e < n; ++e) d[e] -= vm[e];
            ineq.push_back(d);
          }
        }
        RationalCone c(n, ineq, {h_equation(n)});
        if (c.dimension() == n - 1) chambers.insert(c);
        return;
      }
      for (pick[i] = 0; pick[i] < big[i]->members.size(); ++pick[i]) rec(i + 1);
    };
    rec(0);
    CHECK(selections == 72);
    CHECK(chambers.size() == 12);
    auto f = jm_fan(m);
    CHECK(std::vector<RationalCone>(chambers.begin(), chambers.end()) == f.cones);
    CHECK(f.rays == std::vector<IVec>{iv({-4, 1, 1, 1, 1}), iv({-2, -2, 3, -2, 3}), iv({-1, 4, -1, -1, -1}),
                                      iv({1, 1, -4, 1, 1}), iv({1, 1, 1, -4, 1}), iv({1, 1, 1, 1, -4}),
                                      iv({3, -2, -2, 3, -2})});
  }

  TEST_CASE("Ann fan of the five-vector matroid by Buchberger") {
    auto m = builtin_matroid("fivevec");
    auto gens = SquareFreeIdeal::ann(phi(m), 5).generators();
    auto slow = groebner_fan(gens, 5);
    auto fast = ann_fan(m);
    CHECK(slow.n_maximal() == 20);
    CHECK(slow.n_rays() == 9);
    CHECK(slow.cones == fast.cones);
    std::vector<IVec> extra = {iv({-3, 2, 2, -3, 2}), iv({2, 2, -3, 2, -3})};
    for (const auto& r : extra) CHECK(std::find(fast.rays.begin(), fast.rays.end(), r) != fast.rays.end());
  }

  TEST_CASE("Hessian of the five-vector matroid factors") {
    auto m = builtin_matroid("fivevec");
    auto q = GradedQuotient::ann(phi(m), 5);
    std::vector<DiffPoly> basis;
    for (Subset s : q.basis(1)) basis.push_back(Poly::term(Monomial::from_subset(s, 5)));
    Poly h = hessian_det_symbolic(basis, phi(m), 5);
    Poly expected = parse_poly("x1 + x4", 5) * parse_poly("x3 + x5", 5) * Poly::from_square_free(phi(m), 5) * Rational(8);
    CHECK(h == expected);
  }

  TEST_CASE("extra generator lies in Ann but not in J_M") {
    auto m = builtin_matroid("fivevec");
    auto g = parse_square_free("1 * x1*x3 - 1 * x1*x5 - 1 * x3*x4 + 1 * x4*x5");
    CHECK(apply_diff(Poly::from_square_free(g, 5), phi(m)).is_zero());
    auto o = MonomialOrder::grevlex(5);
    auto gb = buchberger(lambda_set(m).all(), o);
    CHECK_FALSE(normal_form(Poly::from_square_free(g, 5), gb, o).is_zero());
    // while the J_M binomials reduce to zero
    CHECK(normal_form(parse_poly("x1*x2 - x1*x4", 5), gb, o).is_zero());
  }

  TEST_CASE("Hessian value of the Fano plane") {
    auto r = slp_hessian_check(builtin_matroid("m23"), all_ones(7));
    // dense recomputation: Hessian matrix entries are the numbers of bases containing a pair
    auto m = builtin_matroid("m23");
    QMatrix h(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (Subset b : m.bases())
          if (i != j && contains(b, i) && contains(b, j)) h(i, j) += 1;
    CHECK(r.hessians[0].value == determinant(h));
  }
}
