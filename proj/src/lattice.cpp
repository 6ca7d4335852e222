#include "matgor/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "matgor/inverse_system.hpp"

namespace matgor {

std::vector<std::vector<int>> RankedPoset::levels() const {
  int top = rank.empty() ? -1 : *std::max_element(rank.begin(), rank.end());
  std::vector<std::vector<int>> out(top + 1);
  for (int i = 0; i < size(); ++i) out[rank[i]].push_back(i);
  return out;
}

std::vector<int> RankedPoset::level_sizes() const {
  std::vector<int> out;
  for (const auto& l : levels()) out.push_back(int(l.size()));
  return out;
}

std::vector<std::vector<bool>> RankedPoset::strict_order() const {
  const int n = size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j : up[i]) r[i][j] = true;
  // R <- R or R*R until stable; converges after about log2(height) rounds.
  for (bool changed = true; changed;) {
    changed = false;
    auto next = r;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (!r[i][k]) continue;
        for (int j = 0; j < n; ++j)
          if (r[k][j] && !next[i][j]) {
            next[i][j] = true;
            changed = true;
          }
      }
    r = std::move(next);
  }
  return r;
}

RankedPoset RankedPoset::chain(int length) {
  RankedPoset p;
  for (int i = 0; i <= length; ++i) {
    p.rank.push_back(i);
    p.up.push_back(i < length ? std::vector<int>{i + 1} : std::vector<int>{});
  }
  return p;
}

int FlatLattice::index_of(Subset flat) const {
  for (int i = 0; i < size(); ++i)
    if (flats[i] == flat) return i;
  return -1;
}

int FlatLattice::meet(int a, int b) const { return index_of(flats[a] & flats[b]); }

int FlatLattice::join(int a, int b) const { return index_of(matroid->closure(flats[a] | flats[b])); }

FlatLattice build_lattice(const Matroid& m) {
  FlatLattice l;
  l.matroid = std::make_shared<const Matroid>(m);
  std::set<Subset> fl;
  for (Subset s : m.independents()) fl.insert(m.closure(s));
  l.flats.assign(fl.begin(), fl.end());
  std::sort(l.flats.begin(), l.flats.end(), [&](Subset a, Subset b) {
    int ra = m.rank(a), rb = m.rank(b);
    if (ra != rb) return ra < rb;
    return lex_less(a, b);
  });
  check_guard(l.flats.size() <= 5000, "lattice of flats larger than 5000");
  const int n = int(l.flats.size());
  for (Subset f : l.flats) l.rank.push_back(m.rank(f));
  l.up.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || l.flats[i] == l.flats[j] || !is_subset(l.flats[i], l.flats[j])) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && l.flats[k] != l.flats[i] && l.flats[k] != l.flats[j] &&
            is_subset(l.flats[i], l.flats[k]) && is_subset(l.flats[k], l.flats[j]))
          cover = false;
      if (cover) l.up[i].push_back(j);
    }
  return l;
}

LatticePredicates lattice_predicates(const FlatLattice& l) {
  LatticePredicates p;
  const int n = l.size();
  p.graded = true;
  for (int i = 0; i < n; ++i)
    for (int j : l.up[i])
      if (l.rank[j] != l.rank[i] + 1) p.graded = false;
  std::vector<int> atoms;
  for (int i = 0; i < n; ++i) {
    if (l.rank[i] == 1) atoms.push_back(i);
    if (l.rank[i] == l.rank[l.top()] - 1) ++p.n_coatoms;
  }
  p.n_atoms = int(atoms.size());
  p.atomic = true;
  for (int i = 0; i < n; ++i) {
    Subset u = l.flats[l.bottom()];
    for (int a : atoms)
      if (is_subset(l.flats[a], l.flats[i])) u |= l.flats[a];
    if (l.matroid->closure(u) != l.flats[i]) p.atomic = false;
  }
  p.semimodular = true;
  p.modular = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int lhs = l.rank[i] + l.rank[j];
      int rhs = l.rank[l.meet(i, j)] + l.rank[l.join(i, j)];
      if (lhs < rhs) p.semimodular = false;
      if (lhs != rhs) {
        p.modular = false;
        if (!p.non_modular_pair) p.non_modular_pair = std::make_pair(l.flats[i], l.flats[j]);
      }
    }
  if (p.atomic && p.semimodular) p.greene_consistent = p.modular == (p.n_atoms == p.n_coatoms);
  return p;
}

namespace {

// Hopcroft-Karp on the bipartite graph left i -> right j for i < j.
struct Matching {
  std::vector<int> match_left, match_right;
  int size = 0;
};

Matching hopcroft_karp(const std::vector<std::vector<int>>& adj, int n) {
  Matching m;
  m.match_left.assign(n, -1);
  m.match_right.assign(n, -1);
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  auto bfs = [&]() {
    std::deque<int> q;
    bool found = false;
    for (int u = 0; u < n; ++u) {
      if (m.match_left[u] < 0) {
        dist[u] = 0;
        q.push_back(u);
      } else {
        dist[u] = inf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        int w = m.match_right[v];
        if (w < 0) found = true;
        else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[u]) {
      int w = m.match_right[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        m.match_left[u] = v;
        m.match_right[v] = u;
        return true;
      }
    }
    dist[u] = inf;
    return false;
  };
  while (bfs())
    for (int u = 0; u < n; ++u)
      if (m.match_left[u] < 0 && dfs(u)) ++m.size;
  return m;
}

}  // namespace

Antichain max_antichain(const RankedPoset& p) {
  const int n = p.size();
  check_guard(n <= 5000, "antichain search on more than 5000 elements");
  auto lt = p.strict_order();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt[i][j]) adj[i].push_back(j);
  Matching m = hopcroft_karp(adj, n);
  Antichain out;
  out.min_chain_cover = n - m.size;
  for (int i = 0; i < n; ++i) {
    if (m.match_right[i] >= 0) continue;  // not a chain start
    std::vector<int> chain{i};
    for (int u = i; m.match_left[u] >= 0;) {
      u = m.match_left[u];
      chain.push_back(u);
    }
    out.chains.push_back(std::move(chain));
  }
  // Koenig: Z = vertices reachable from unmatched left vertices by alternating paths.
  std::vector<bool> zl(n, false), zr(n, false);
  std::deque<int> q;
  for (int u = 0; u < n; ++u)
    if (m.match_left[u] < 0) {
      zl[u] = true;
      q.push_back(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = true;
      int w = m.match_right[v];
      if (w >= 0 && !zl[w]) {
        zl[w] = true;
        q.push_back(w);
      }
    }
  }
  // Minimum vertex cover (L \ Z) u (R n Z); its complement pairs give the antichain.
  for (int x = 0; x < n; ++x)
    if (zl[x] && !zr[x]) out.witness.push_back(x);
  out.size = int(out.witness.size());
  for (int a : out.witness)
    for (int b : out.witness)
      if (lt[a][b]) throw Error("antichain witness contains comparable elements");
  if (out.size != out.min_chain_cover) throw Error("Dilworth duality violated: antichain and chain cover differ");
  return out;
}

SpernerResult sperner_check(const RankedPoset& p) {
  SpernerResult r;
  for (int s : p.level_sizes()) r.max_level = std::max(r.max_level, s);
  r.max_antichain = max_antichain(p).size;
  r.sperner = r.max_antichain == r.max_level;
  return r;
}

RaisingMapsResult order_raising_maps(const Matroid& m, std::optional<std::vector<Rational>> coeffs, unsigned seed) {
  auto cmp = ann_equals_jm(m);
  if (!cmp.equal)
    throw DimensionMismatch("Ann Phi_M differs from J_M, so the quotient basis is not indexed by flats");
  const auto q = GradedQuotient::jm(m);
  const auto classes = equivalence_classes(m);
  const int n = m.size();
  auto attempt = [&](const std::vector<Rational>& a) {
    RaisingMapsResult res;
    res.coefficients = a;
    res.certificate = true;
    for (int d = 0; d < q.top_degree(); ++d) {
      RaisingMap rm{d, q.multiplication(a, d), 0, false, true};
      rm.rank = rank(rm.matrix);
      rm.full_rank = rm.rank == std::min(rm.matrix.rows(), rm.matrix.cols());
      for (int i = 0; i < rm.matrix.rows(); ++i)
        for (int j = 0; j < rm.matrix.cols(); ++j)
          if (sgn(rm.matrix(i, j)) != 0 &&
              !is_subset(classes.levels[d][j].flat, classes.levels[d + 1][i].flat))
            rm.support_ok = false;
      res.certificate = res.certificate && rm.full_rank && rm.support_ok;
      res.maps.push_back(std::move(rm));
    }
    return res;
  };
  if (coeffs) {
    if (int(coeffs->size()) != n) throw InputError("coefficient vector length differs from |E|");
    return attempt(*coeffs);
  }
  auto res = attempt(std::vector<Rational>(n, 1));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (int t = 0; t < 5 && !res.certificate; ++t) {
    std::vector<Rational> a(n);
    for (auto& x : a) x = dist(rng);
    int tries = res.attempts + 1;
    res = attempt(a);
    res.attempts = tries;
  }
  return res;
}

}  // namespace matgor
