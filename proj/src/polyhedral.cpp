#include "matgor/polyhedral.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "matgor/groebner.hpp"
#include "matgor/lp.hpp"

namespace matgor {

namespace {

IVec incidence(Subset s, int n) {
  IVec v(n, 0);
  for (int e : elements(s)) v[e] = 1;
  return v;
}

IVec difference(Subset a, Subset b, int n) {
  IVec v(n, 0);
  for (int e : elements(a)) v[e] += 1;
  for (int e : elements(b)) v[e] -= 1;
  return v;
}

QVec to_qvec(const IVec& v) { return QVec(v.begin(), v.end()); }

bool contained_in_some(const RationalCone& c, const std::vector<RationalCone>& pool) {
  for (const auto& d : pool)
    if (d.contains(c)) return true;
  return false;
}

// Inequality-tight test: every generator of `face` lies on the hyperplane a.x = 0.
bool on_hyperplane(const RationalCone& face, const IVec& a) {
  for (const auto& r : face.rays())
    if (sgn(dot(a, r)) != 0) return false;
  for (const auto& l : face.lineality())
    if (sgn(dot(a, l)) != 0) return false;
  return true;
}

}  // namespace

std::vector<IVec> MatroidPolytope::centered_base_vertices_times_n() const {
  std::vector<IVec> out;
  for (const auto& v : base_vertices) {
    IVec u(n);
    for (int e = 0; e < n; ++e) u[e] = n * v[e] - rank;
    out.push_back(std::move(u));
  }
  return out;
}

std::string MatroidPolytope::base_off() const {
  std::ostringstream os;
  os << "nOFF\n" << n << "\n" << base_vertices.size() << " 0 0\n";
  for (const auto& v : base_vertices) {
    for (int e = 0; e < n; ++e) os << (e ? " " : "") << v[e];
    os << "\n";
  }
  return os.str();
}

MatroidPolytope matroid_polytope(const Matroid& m) {
  MatroidPolytope p;
  p.n = m.size();
  p.rank = m.rank();
  for (Subset s : m.independents()) p.vertices.push_back(incidence(s, p.n));
  for (Subset b : m.bases()) p.base_vertices.push_back(incidence(b, p.n));
  return p;
}

EdmondsCheck edmonds_check(const Matroid& m) {
  const int n = m.size();
  check_guard(n <= 6, "Edmonds check on more than 6 elements");
  EdmondsCheck r;
  const Subset all = full_set(n);
  auto satisfies = [&](const IVec& x) {
    for (int e = 0; e < n; ++e)
      if (sgn(x[e]) < 0) return false;
    for (Subset a = 1; a <= all; ++a) {
      Integer s = 0;
      for (int e : elements(a)) s += x[e];
      if (s > m.rank(a)) return false;
    }
    return true;
  };
  const auto poly = matroid_polytope(m);
  r.vertices_satisfy = std::all_of(poly.vertices.begin(), poly.vertices.end(), satisfies);

  std::vector<QVec> pts;
  for (const auto& v : poly.vertices) pts.push_back(to_qvec(v));
  r.points_in_hull = true;
  for (Subset s = 0; s <= all; ++s) {
    IVec x = incidence(s, n);
    if (satisfies(x) && !in_convex_hull(pts, to_qvec(x))) r.points_in_hull = false;
  }

  // Homogenized system in (x, t): x >= 0, r(A) t - sum_A x >= 0.
  std::vector<IVec> ineq;
  for (int e = 0; e < n; ++e) {
    IVec a(n + 1, 0);
    a[e] = 1;
    ineq.push_back(a);
  }
  {
    IVec a(n + 1, 0);
    a[n] = 1;
    ineq.push_back(a);
  }
  for (Subset a = 1; a <= all; ++a) {
    IVec row(n + 1, 0);
    for (int e : elements(a)) row[e] = -1;
    row[n] = m.rank(a);
    ineq.push_back(row);
  }
  RationalCone cone(n + 1, ineq);
  std::set<IVec> expected;
  for (const auto& v : poly.vertices) {
    IVec w = v;
    w.push_back(1);
    expected.insert(w);
  }
  std::set<IVec> got(cone.rays().begin(), cone.rays().end());
  r.vertex_enumeration = cone.pointed() && got == expected;
  return r;
}

TropValue trop(const SquareFreePoly& f, const std::vector<Rational>& y) {
  if (f.is_zero()) throw InputError("trop of the zero polynomial");
  TropValue t;
  bool first = true;
  for (const auto& [s, c] : f.terms()) {
    Rational v = 0;
    for (int e : elements(s)) {
      if (e >= int(y.size())) throw InputError("point has too few coordinates");
      v += y[e];
    }
    if (first || v > t.value) {
      t.value = v;
      t.argmax = {s};
      first = false;
    } else if (v == t.value) {
      t.argmax.push_back(s);
    }
  }
  return t;
}

bool trop_nonsmooth(const SquareFreePoly& f, const std::vector<Rational>& y) { return trop(f, y).nonsmooth(); }

SupportFunctionCheck support_function_check(const Matroid& m, int trials, unsigned seed) {
  SupportFunctionCheck r;
  r.trials = trials;
  const int n = m.size();
  Rational shift(m.rank(), n);
  shift.canonicalize();
  std::vector<QVec> u;
  for (Subset b : m.bases()) {
    QVec v(n);
    for (int e = 0; e < n; ++e) v[e] = (contains(b, e) ? Rational(1) : Rational(0)) - shift;
    u.push_back(std::move(v));
  }
  const SquareFreePoly f = phi(m);
  auto inner = [&](const QVec& a, const QVec& b) {
    Rational s = 0;
    for (int e = 0; e < n; ++e) s += a[e] * b[e];
    return s;
  };
  auto max_inner = [&](const QVec& y) {
    Rational best = inner(u.front(), y);
    for (const auto& v : u) best = std::max(best, inner(v, y));
    return best;
  };
  r.centered = true;
  r.self_value = true;
  const Rational expected = Rational(m.rank()) - shift * m.rank();
  for (const auto& v : u) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    if (sgn(s) != 0) r.centered = false;
    if (inner(v, v) != expected || trop(f, v).value != expected) r.self_value = false;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (int t = 0; t < trials; ++t) {
    QVec y(n);
    Rational mean = 0;
    for (auto& x : y) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
      mean += x;
    }
    mean /= n;
    for (auto& x : y) x -= mean;
    if (max_inner(y) != trop(f, y).value) ++r.failures;
  }
  return r;
}

bool Wall::edge() const { return cone.dimension() == cone.ambient() - 2; }

std::vector<Wall> walls(const Matroid& m) {
  const int n = m.size();
  const auto classes = equivalence_classes(m);
  std::vector<Wall> out;
  for (const auto& level : classes.levels)
    for (const auto& cls : level) {
      const auto& mem = cls.members;
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
          std::vector<IVec> ineq;
          for (std::size_t k = 0; k < mem.size(); ++k)
            if (k != i && k != j) ineq.push_back(difference(mem[k], mem[i], n));
          Wall w;
          w.level = cls.level;
          w.flat = cls.flat;
          w.first = mem[i];
          w.second = mem[j];
          w.cone = RationalCone(n, ineq, {difference(mem[i], mem[j], n), h_equation(n)});
          for (int k = 0; k < int(out.size()); ++k)
            if (out[k].duplicate_of < 0 && out[k].cone == w.cone) {
              w.duplicate_of = k;
              break;
            }
          out.push_back(std::move(w));
        }
    }
  return out;
}

Fan jm_fan(const Matroid& m, const TraversalOptions& opts) {
  const int n = m.size();
  check_guard(n <= 7, "J_M fan on more than 7 elements");
  if (n > 5) std::cerr << "warning: J_M fan on " << n << " elements may take a long time\n";
  std::vector<std::vector<Subset>> classes;
  for (const auto& level : equivalence_classes(m).levels)
    for (const auto& cls : level)
      if (cls.members.size() >= 2) classes.push_back(cls.members);
  ConeOracle oracle = [classes, n](const IVec& w) -> std::optional<ConeCertificate> {
    ConeCertificate cert;
    for (const auto& mem : classes) {
      std::vector<Integer> val;
      for (Subset s : mem) {
        Integer v = 0;
        for (int e : elements(s)) v += w[e];
        val.push_back(v);
      }
      int best = 0;
      for (int k = 1; k < int(mem.size()); ++k)
        if (val[k] < val[best]) best = k;
      for (int k = 0; k < int(mem.size()); ++k) {
        if (k == best) continue;
        if (val[k] == val[best]) return std::nullopt;
        cert.inequalities.push_back(difference(mem[k], mem[best], n));
      }
      cert.key += std::to_string(mem[best]) + ",";
    }
    return cert;
  };
  return traverse_fan(n, oracle, opts);
}

Fan ann_fan(const Matroid& m, const TraversalOptions& opts) {
  check_guard(m.size() <= 7, "Ann fan on more than 7 elements");
  return traverse_fan(m.size(), square_free_oracle(SquareFreeIdeal::ann(phi(m), m.size())), opts);
}

Fan jm_groebner_fan(const Matroid& m, const TraversalOptions& opts) {
  check_guard(m.size() <= 7, "J_M fan on more than 7 elements");
  return traverse_fan(m.size(), square_free_oracle(SquareFreeIdeal::jm(m)), opts);
}

Fan principal_fan(const SquareFreePoly& f, int n, const TraversalOptions& opts) {
  if (f.is_zero() || !f.is_homogeneous()) throw InputError("principal fan needs a nonzero homogeneous polynomial");
  check_guard(n <= 10, "principal fan on more than 10 variables");
  return traverse_fan(n, principal_oracle(Poly::from_square_free(f, n)), opts);
}

Fan phi_fan(const Matroid& m, const TraversalOptions& opts) { return principal_fan(phi(m), m.size(), opts); }

std::vector<RationalCone> tropical_hypersurface(const SquareFreePoly& f, int n) {
  return principal_fan(f, n).codim_one();
}

bool covered_by(const RationalCone& c, const std::vector<RationalCone>& pieces) {
  std::vector<const RationalCone*> same;
  for (const auto& p : pieces)
    if (p.dimension() == c.dimension() && c.contains(p)) same.push_back(&p);
  if (same.empty()) return false;
  std::vector<IVec> boundary;
  for (const auto& f : c.facets()) boundary.push_back(f.normal);
  std::map<RationalCone, int> shared;
  for (const auto* p : same)
    for (const auto& f : p->facets()) {
      std::vector<IVec> gens;
      for (int i : f.rays) gens.push_back(p->rays()[i]);
      RationalCone face = RationalCone::from_generators(c.ambient(), gens, p->lineality());
      bool on_boundary = std::any_of(boundary.begin(), boundary.end(),
                                     [&](const IVec& a) { return on_hyperplane(face, a); });
      if (!on_boundary) ++shared[face];
    }
  for (const auto& [face, k] : shared)
    if (k != 2) return false;
  return true;
}

HypersurfIdentities hypersurf_identities(const Matroid& m, const TraversalOptions& opts) {
  const int n = m.size();
  HypersurfIdentities r;
  r.id1 = r.id2 = r.id3 = r.corollary = r.corollary_literal = true;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    r.failures.push_back(why);
  };
  const auto all_walls = walls(m);
  const auto classes = equivalence_classes(m);
  std::vector<RationalCone> vtrop_union;
  for (const auto& level : classes.levels)
    for (const auto& cls : level) {
      if (cls.members.size() < 2) continue;
      const std::string name = "class of " + m.describe(cls.flat);
      const auto c1 = tropical_hypersurface(f_tau(cls), n);
      std::set<RationalCone> neg_edges;
      std::vector<RationalCone> neg_all, ties;
      for (const auto& w : all_walls) {
        if (w.flat != cls.flat) continue;
        RationalCone neg = w.cone.negated();
        if (w.edge()) neg_edges.insert(neg);
        neg_all.push_back(neg);
        // Max-tie cone of the pair, straight from the definition of trop.
        std::vector<IVec> ineq;
        for (Subset other : cls.members)
          if (other != w.first && other != w.second) ineq.push_back(difference(w.first, other, n));
        RationalCone tie(n, ineq, {difference(w.first, w.second, n), h_equation(n)});
        if (!(tie == neg)) fail(r.id2, name + ": tie cone differs from -W");
        ties.push_back(tie);
      }
      if (std::set<RationalCone>(c1.begin(), c1.end()) != neg_edges)
        fail(r.id1, name + ": codimension-one cones differ from the walls -W");
      for (const auto& neg : neg_all)
        if (!contained_in_some(neg, c1)) fail(r.id1, name + ": a wall -W lies outside the codimension-one cones");
      for (const auto& c : c1)
        if (!contained_in_some(c, ties)) fail(r.id2, name + ": hypersurface cone outside the tie locus");
      for (const auto& t : ties)
        if (!contained_in_some(t, c1)) fail(r.id2, name + ": tie locus outside the hypersurface");
      vtrop_union.insert(vtrop_union.end(), c1.begin(), c1.end());
    }

  std::vector<RationalCone> neg_sigma;
  for (const auto& s : jm_fan(m, opts).codim_one()) neg_sigma.push_back(s.negated());
  auto pieces_in = [&](const RationalCone& c) {
    std::vector<RationalCone> out;
    for (const auto& s : neg_sigma)
      if (c.contains(s)) out.push_back(s);
    return out;
  };
  for (const auto& s : neg_sigma)
    if (!contained_in_some(s, vtrop_union)) fail(r.id3, "a cone -sigma lies outside the tropical hypersurfaces");
  for (const auto& c : vtrop_union)
    if (!covered_by(c, pieces_in(c))) fail(r.id3, "a tropical hypersurface cone is not covered by cones -sigma");

  const auto vphi = tropical_hypersurface(phi(m), n);
  for (const auto& c : vphi) {
    if (!covered_by(c, pieces_in(c))) fail(r.corollary, "a cone of V_trop(Phi) is not covered by cones -sigma");
    if (std::find(neg_sigma.begin(), neg_sigma.end(), c) == neg_sigma.end()) r.corollary_literal = false;
  }
  return r;
}

}  // namespace matgor
