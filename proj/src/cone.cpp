#include "matgor/cone.hpp"

#include <algorithm>
#include <set>

#include "matgor/linalg.hpp"

namespace matgor {

Integer dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const QVec& a, const IVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec to_ivec(const std::vector<long>& v) {
  IVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string format_ivec(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

namespace {

QMatrix rows_matrix(const std::vector<IVec>& vs, int n) {
  QMatrix m(int(vs.size()), n);
  for (int i = 0; i < int(vs.size()); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return m;
}

// Integer basis of {x : v.x = 0 for all v in vs}.
std::vector<IVec> orthogonal_complement(const std::vector<IVec>& vs, int n) {
  std::vector<IVec> out;
  if (vs.empty()) {
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  for (const auto& q : nullspace(rows_matrix(vs, n))) out.push_back(primitive(q));
  return out;
}

IVec combine(const Integer& a, const IVec& x, const Integer& b, const IVec& y) {
  IVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return primitive(r);
}

bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

struct DDRay {
  IVec v;
  std::vector<bool> tight;
};

}  // namespace

int rank_of(const std::vector<IVec>& vs) {
  if (vs.empty()) return 0;
  return rank(rows_matrix(vs, int(vs.front().size())));
}

std::vector<IVec> canonical_span(const std::vector<IVec>& vs) {
  if (vs.empty()) return {};
  QMatrix m = rows_matrix(vs, int(vs.front().size()));
  auto piv = rref(m);
  std::vector<IVec> out;
  for (int r = 0; r < int(piv.size()); ++r) {
    QVec row(m.cols());
    for (int c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    out.push_back(primitive(row));
  }
  return out;
}

RationalCone::RationalCone(int ambient, std::vector<IVec> inequalities, std::vector<IVec> equations)
    : n_(ambient), ineq_(std::move(inequalities)), eq_(std::move(equations)) {
  for (const auto& v : ineq_)
    if (int(v.size()) != n_) throw DimensionMismatch("inequality length differs from the ambient dimension");
  for (const auto& v : eq_)
    if (int(v.size()) != n_) throw DimensionMismatch("equation length differs from the ambient dimension");
  compute();
}

void RationalCone::compute() {
  const int m = int(ineq_.size());
  std::vector<IVec> lin = orthogonal_complement(eq_, n_);
  std::vector<DDRay> rays;
  for (int k = 0; k < m; ++k) {
    const IVec& a = ineq_[k];
    if (is_zero(a)) {
      for (auto& r : rays) r.tight[k] = true;
      continue;
    }
    int j = -1;
    for (int i = 0; i < int(lin.size()); ++i)
      if (sgn(dot(a, lin[i])) != 0) {
        j = i;
        break;
      }
    if (j >= 0) {
      IVec l = lin[j];
      Integer al = dot(a, l);
      if (al < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      lin.erase(lin.begin() + j);
      for (auto& li : lin) li = combine(al, li, -dot(a, li), l);
      for (auto& r : rays) {
        r.v = combine(al, r.v, -dot(a, r.v), l);
        r.tight[k] = true;
      }
      DDRay nr{l, std::vector<bool>(m, false)};
      for (int i = 0; i < k; ++i) nr.tight[i] = true;
      rays.push_back(std::move(nr));
      continue;
    }
    std::vector<DDRay> next;
    std::vector<int> pos, neg;
    std::vector<Integer> val(rays.size());
    for (int i = 0; i < int(rays.size()); ++i) {
      val[i] = dot(a, rays[i].v);
      if (sgn(val[i]) > 0) pos.push_back(i);
      else if (sgn(val[i]) < 0) neg.push_back(i);
    }
    for (int i = 0; i < int(rays.size()); ++i) {
      if (sgn(val[i]) < 0) continue;
      DDRay r = rays[i];
      if (sgn(val[i]) == 0) r.tight[k] = true;
      next.push_back(std::move(r));
    }
    for (int p : pos)
      for (int q : neg) {
        std::vector<bool> z(m, false);
        for (int i = 0; i < k; ++i) z[i] = rays[p].tight[i] && rays[q].tight[i];
        bool adjacent = true;
        for (int r = 0; r < int(rays.size()) && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool superset = true;
          for (int i = 0; i < k && superset; ++i)
            if (z[i] && !rays[r].tight[i]) superset = false;
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr{combine(val[p], rays[q].v, -val[q], rays[p].v), z};
        nr.tight[k] = true;
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
  lin_ = canonical_span(lin);
  // Project rays onto the orthogonal complement of the lineality space.
  std::vector<QVec> ortho;
  for (const auto& l : lin_) {
    QVec u(l.begin(), l.end());
    for (const auto& o : ortho) {
      Rational c = 0, oo = 0;
      for (int i = 0; i < n_; ++i) {
        c += u[i] * o[i];
        oo += o[i] * o[i];
      }
      c /= oo;
      for (int i = 0; i < n_; ++i) u[i] -= c * o[i];
    }
    ortho.push_back(std::move(u));
  }
  std::set<IVec> out;
  for (const auto& r : rays) {
    QVec v(r.v.begin(), r.v.end());
    for (const auto& o : ortho) {
      Rational c = 0, oo = 0;
      for (int i = 0; i < n_; ++i) {
        c += v[i] * o[i];
        oo += o[i] * o[i];
      }
      c /= oo;
      for (int i = 0; i < n_; ++i) v[i] -= c * o[i];
    }
    IVec p = primitive(v);
    if (!is_zero(p)) out.insert(std::move(p));
  }
  rays_.assign(out.begin(), out.end());
  dim_ = int(lin_.size()) + rank_of(rays_);
}

RationalCone RationalCone::from_generators(int ambient, const std::vector<IVec>& rays, const std::vector<IVec>& lineality) {
  // Dual cone {a : a.r >= 0, a.l = 0}: its rays and lineality are the
  // inequalities and equations of the primal cone.
  RationalCone dual(ambient, rays, lineality);
  std::vector<IVec> ineq = dual.rays();
  std::vector<IVec> eq = dual.lineality();
  return RationalCone(ambient, std::move(ineq), std::move(eq));
}

bool RationalCone::contains(const IVec& x) const {
  for (const auto& a : ineq_)
    if (sgn(dot(a, x)) < 0) return false;
  for (const auto& e : eq_)
    if (sgn(dot(e, x)) != 0) return false;
  return true;
}

bool RationalCone::contains(const QVec& x) const {
  for (const auto& a : ineq_)
    if (sgn(dot(x, a)) < 0) return false;
  for (const auto& e : eq_)
    if (sgn(dot(x, e)) != 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lin_) {
    if (!contains(l)) return false;
    IVec neg(l);
    for (auto& x : neg) x = -x;
    if (!contains(neg)) return false;
  }
  return true;
}

bool RationalCone::operator<(const RationalCone& o) const {
  if (rays_ != o.rays_) return rays_ < o.rays_;
  return lin_ < o.lin_;
}

IVec RationalCone::interior_point() const {
  IVec p(n_, 0);
  for (const auto& r : rays_)
    for (int i = 0; i < n_; ++i) p[i] += r[i];
  return p;
}

std::vector<RationalCone::Facet> RationalCone::facets() const {
  std::vector<Facet> out;
  std::set<std::vector<int>> seen;
  for (const auto& a : ineq_) {
    std::vector<int> tight;
    std::vector<IVec> gens = lin_;
    bool vanishes = true;
    for (int i = 0; i < int(rays_.size()); ++i) {
      if (sgn(dot(a, rays_[i])) == 0) {
        tight.push_back(i);
        gens.push_back(rays_[i]);
      } else {
        vanishes = false;
      }
    }
    if (vanishes) continue;
    if (rank_of(gens) != dim_ - 1) continue;
    if (!seen.insert(tight).second) continue;
    out.push_back(Facet{primitive(a), std::move(tight)});
  }
  return out;
}

RationalCone RationalCone::smallest_face_containing(const RationalCone& sub) const {
  std::vector<IVec> tight_ineq;
  for (const auto& a : ineq_) {
    bool all = true;
    for (const auto& r : sub.rays_)
      if (sgn(dot(a, r)) != 0) all = false;
    for (const auto& l : sub.lin_)
      if (sgn(dot(a, l)) != 0) all = false;
    if (all) tight_ineq.push_back(a);
  }
  std::vector<IVec> face_rays;
  for (const auto& r : rays_) {
    bool ok = true;
    for (const auto& a : tight_ineq)
      if (sgn(dot(a, r)) != 0) ok = false;
    if (ok) face_rays.push_back(r);
  }
  return from_generators(n_, face_rays, lin_);
}

RationalCone RationalCone::intersect(const RationalCone& o) const {
  auto ineq = ineq_;
  ineq.insert(ineq.end(), o.ineq_.begin(), o.ineq_.end());
  auto eq = eq_;
  eq.insert(eq.end(), o.eq_.begin(), o.eq_.end());
  return RationalCone(n_, std::move(ineq), std::move(eq));
}

RationalCone RationalCone::negated() const {
  auto ineq = ineq_;
  for (auto& a : ineq)
    for (auto& x : a) x = -x;
  return RationalCone(n_, std::move(ineq), eq_);
}

bool interiors_intersect(const RationalCone& a, const RationalCone& b) {
  const int n = a.ambient();
  LinearSystem sys;
  sys.n = n;
  for (const RationalCone* c : {&a, &b}) {
    for (const auto& f : c->facets()) sys.add_ge(QVec(f.normal.begin(), f.normal.end()), 1);
    std::vector<IVec> gens = c->rays();
    gens.insert(gens.end(), c->lineality().begin(), c->lineality().end());
    for (const auto& e : orthogonal_complement(gens, n)) {
      if (gens.empty()) break;
      sys.add_eq(QVec(e.begin(), e.end()), 0);
    }
    if (gens.empty()) {
      for (int i = 0; i < n; ++i) {
        QVec e(n);
        e[i] = 1;
        sys.add_eq(std::move(e), 0);
      }
    }
  }
  return find_feasible_point(sys).has_value();
}

}  // namespace matgor
