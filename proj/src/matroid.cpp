#include "matgor/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace matgor {

namespace {

constexpr std::size_t kMaxFamily = std::size_t{1} << 22;

bool size_lex_less(Subset a, Subset b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

std::vector<Subset> downward_closure(const std::vector<Subset>& tops) {
  std::unordered_set<Subset> seen;
  std::vector<Subset> stack(tops.begin(), tops.end());
  while (!stack.empty()) {
    Subset s = stack.back();
    stack.pop_back();
    if (!seen.insert(s).second) continue;
    check_guard(seen.size() <= kMaxFamily, "independent-set family larger than 2^22");
    for (Subset t = s; t; t &= t - 1) {
      Subset smaller = s & ~(t & -t);
      if (!seen.count(smaller)) stack.push_back(smaller);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Matroid::Matroid(std::vector<std::string> labels, std::vector<Subset> independents, bool validate)
    : labels_(std::move(labels)), independents_(std::move(independents)) {
  if (size() > kMaxGround) throw GuardExceeded("ground set larger than 40 elements");
  std::sort(independents_.begin(), independents_.end(), size_lex_less);
  independents_.erase(std::unique(independents_.begin(), independents_.end()), independents_.end());
  for (Subset s : independents_) {
    if (!is_subset(s, ground())) throw InputError("independent set outside the ground set");
    index_.insert(s);
  }
  rank_ = independents_.empty() ? 0 : popcount(independents_.back());
  if (validate) {
    if (auto v = axiom_violation()) throw AxiomViolation(*v);
  }
}

int Matroid::rank(Subset s) const {
  Subset indep = 0;
  for (Subset t = s; t; t &= t - 1) {
    Subset e = t & -t;
    if (is_independent(indep | e)) indep |= e;
  }
  return popcount(indep);
}

Subset Matroid::closure(Subset s) const {
  Subset indep = 0;
  for (Subset t = s; t; t &= t - 1) {
    Subset e = t & -t;
    if (is_independent(indep | e)) indep |= e;
  }
  Subset out = s;
  for (int y = 0; y < size(); ++y) {
    if (contains(s, y)) continue;
    if (!is_independent(indep | singleton(y))) out |= singleton(y);
  }
  return out;
}

std::vector<Subset> Matroid::level(int i) const {
  std::vector<Subset> out;
  for (Subset s : independents_)
    if (popcount(s) == i) out.push_back(s);
  return out;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (int e = 0; e < size(); ++e)
    if (!is_independent(singleton(e))) out |= singleton(e);
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  // Every circuit C is the fundamental circuit of C - e in C for any e in C.
  std::set<Subset> found;
  for (Subset indep : independents_) {
    for (int e = 0; e < size(); ++e) {
      if (contains(indep, e) || is_independent(indep | singleton(e))) continue;
      Subset c = singleton(e);
      for (Subset t = indep; t; t &= t - 1) {
        Subset x = t & -t;
        if (is_independent((indep & ~x) | singleton(e))) c |= x;
      }
      found.insert(c);
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::optional<std::string> Matroid::axiom_violation() const {
  if (!is_independent(0)) return std::string("(M1) the empty set is not independent");
  for (Subset s : independents_)
    for (Subset t = s; t; t &= t - 1) {
      Subset smaller = s & ~(t & -t);
      if (!is_independent(smaller))
        return "(M2) " + describe(s) + " is independent but its subset " + describe(smaller) + " is not";
    }
  // (M3) given (M2) it suffices to compare consecutive levels.
  std::vector<std::vector<Subset>> by_level(rank_ + 1);
  for (Subset s : independents_) by_level[popcount(s)].push_back(s);
  for (int i = 0; i < rank_; ++i)
    for (Subset y : by_level[i])
      for (Subset x : by_level[i + 1]) {
        bool ok = false;
        for (Subset t = x & ~y; t && !ok; t &= t - 1) ok = is_independent(y | (t & -t));
        if (!ok) return "(M3) no element of " + describe(x) + " extends " + describe(y);
      }
  return std::nullopt;
}

std::string Matroid::describe(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += e < size() ? labels_[e] : std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

Matroid from_bases(std::vector<std::string> labels, const std::vector<Subset>& bases) {
  if (bases.empty()) throw InputError("basis list is empty");
  if (int(labels.size()) > kMaxGround) throw GuardExceeded("ground set larger than 40 elements");
  const int r = popcount(bases.front());
  std::unordered_set<Subset> bset(bases.begin(), bases.end());
  for (Subset b : bases) {
    if (popcount(b) != r) throw InputError("bases have different cardinalities");
    if (!is_subset(b, full_set(int(labels.size())))) throw InputError("basis outside the ground set");
  }
  // Basis exchange: for B1, B2 and x in B1 \ B2 some y in B2 \ B1 has B1 - x + y a basis.
  for (Subset b1 : bset)
    for (Subset b2 : bset) {
      for (Subset t = b1 & ~b2; t; t &= t - 1) {
        Subset x = t & -t;
        bool ok = false;
        for (Subset u = b2 & ~b1; u && !ok; u &= u - 1) ok = bset.count((b1 & ~x) | (u & -u)) != 0;
        if (!ok) {
          Matroid tmp(labels, {}, false);
          throw BasisExchangeViolation(
              b1, b2,
              "basis exchange fails for " + tmp.describe(b1) + " and " + tmp.describe(b2) +
                  " removing " + tmp.describe(x));
        }
      }
    }
  return Matroid(std::move(labels), downward_closure(bases), true);
}

Matroid from_gf_matrix(const GFMatrix& matrix, std::vector<std::string> labels) {
  const int n = matrix.cols();
  if (labels.empty()) labels = numeric_labels(n);
  if (int(labels.size()) != n) throw InputError("label count does not match the number of columns");
  if (n > kMaxGround) throw GuardExceeded("ground set larger than 40 elements");
  // Grow independent sets by appending elements larger than the current maximum.
  std::vector<Subset> family{0};
  std::vector<Subset> frontier{0};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset s : frontier) {
      int start = s ? 64 - std::countl_zero(s) : 0;
      for (int e = start; e < n; ++e) {
        Subset t = s | singleton(e);
        if (gf_rank(matrix, t) == popcount(t)) next.push_back(t);
      }
    }
    family.insert(family.end(), next.begin(), next.end());
    check_guard(family.size() <= kMaxFamily, "independent-set family larger than 2^22");
    frontier = std::move(next);
  }
  // Linear independence satisfies (M1)-(M3); skip the quadratic check.
  return Matroid(std::move(labels), std::move(family), false);
}

Matroid projective_geometry(int q, int n) {
  FiniteField f = FiniteField::of_order(q);
  long count = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    count += power;
    power *= q;
    check_guard(count <= kMaxGround, "projective geometry with more than 40 points");
  }
  auto pts = projective_points(f, n);
  GFMatrix m = GFMatrix::from_columns(f, pts);
  return from_gf_matrix(m);
}

Matroid truncation(const Matroid& m, int i) {
  if (i < 1 || i > m.rank())
    throw InputError("truncation level " + std::to_string(i) + " outside 1.." + std::to_string(m.rank()));
  std::vector<Subset> fam;
  for (Subset s : m.independents())
    if (popcount(s) <= i) fam.push_back(s);
  return Matroid(m.labels(), std::move(fam), false);
}

Matroid boolean_matroid(int n) {
  if (n < 0 || n > 22) throw GuardExceeded("boolean matroid larger than 22 elements");
  std::vector<Subset> fam(std::size_t{1} << n);
  std::iota(fam.begin(), fam.end(), Subset{0});
  return Matroid(numeric_labels(n), std::move(fam), false);
}

Matroid uniform_matroid(int r, int n) {
  if (r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  std::vector<Subset> fam;
  for (int k = 0; k <= r; ++k)
    for (Subset s : k_subsets(n, k)) fam.push_back(s);
  return Matroid(numeric_labels(n), std::move(fam), false);
}

Matroid projective_plane(const std::vector<std::vector<int>>& lines) {
  std::set<int> pts;
  for (const auto& l : lines) pts.insert(l.begin(), l.end());
  std::vector<int> order(pts.begin(), pts.end());
  std::map<int, int> index;
  for (int i = 0; i < int(order.size()); ++i) index[order[i]] = i;
  const int np = int(order.size());
  if (np > kMaxGround) throw GuardExceeded("projective plane with more than 40 points");
  std::vector<Subset> ls;
  for (const auto& l : lines) {
    Subset s = 0;
    for (int p : l) s |= singleton(index[p]);
    if (popcount(s) != int(l.size())) throw AxiomViolation("a line lists a point twice");
    ls.push_back(s);
  }
  if (ls.size() < 3) throw AxiomViolation("order: a projective plane has at least 7 lines");
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) {
      int through = 0;
      for (Subset l : ls) through += contains(l, a) && contains(l, b);
      if (through != 1)
        throw AxiomViolation("two points: points " + std::to_string(order[a]) + " and " +
                             std::to_string(order[b]) + " lie on " + std::to_string(through) + " lines");
    }
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (popcount(ls[i] & ls[j]) != 1) throw AxiomViolation("two lines: a pair of lines does not meet in one point");
  const int line_size = popcount(ls.front());
  for (Subset l : ls)
    if (popcount(l) != line_size) throw AxiomViolation("order: lines have different sizes");
  const int nu = line_size - 1;
  if (nu < 2) throw AxiomViolation("order: lines need at least 3 points (order >= 2)");
  if (np != nu * nu + nu + 1 || int(ls.size()) != np)
    throw AxiomViolation("order: point or line count does not match order " + std::to_string(nu));

  std::vector<Subset> fam;
  for (int k = 0; k <= 2; ++k)
    for (Subset s : k_subsets(np, k)) fam.push_back(s);
  for (Subset s : k_subsets(np, 3)) {
    bool collinear = false;
    for (Subset l : ls) collinear = collinear || is_subset(s, l);
    if (!collinear) fam.push_back(s);
  }
  std::vector<std::string> labels;
  for (int p : order) labels.push_back(std::to_string(p));
  return Matroid(std::move(labels), std::move(fam), false);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int na = a.size();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) labels = numeric_labels(int(labels.size()));
  std::vector<Subset> fam;
  fam.reserve(a.independents().size() * b.independents().size());
  for (Subset s : a.independents())
    for (Subset t : b.independents()) fam.push_back(s | (t << na));
  check_guard(fam.size() <= kMaxFamily, "independent-set family larger than 2^22");
  return Matroid(std::move(labels), std::move(fam), false);
}

bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.independents().size() != b.independents().size()) return false;
  check_guard(a.size() <= 8, "isomorphism test above 8 elements");
  auto ba = a.bases();
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Subset s : ba) {
      Subset t = 0;
      for (int e : elements(s)) t |= singleton(perm[e]);
      if (!b.is_independent(t)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<int> EquivClasses::counts() const {
  std::vector<int> out;
  for (const auto& l : levels) out.push_back(int(l.size()));
  return out;
}

std::vector<Subset> EquivClasses::flats(int l) const {
  std::vector<Subset> out;
  for (const auto& c : levels.at(l)) out.push_back(c.flat);
  return out;
}

int EquivClasses::class_index(Subset s) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(s, -1));
  if (it == lookup_.end() || it->first != s) return -1;
  return it->second;
}

EquivClasses equivalence_classes(const Matroid& m) {
  EquivClasses out;
  out.levels.resize(m.rank() + 1);
  std::vector<std::map<Subset, std::vector<Subset>>> by_flat(m.rank() + 1);
  for (Subset s : m.independents()) by_flat[popcount(s)][m.closure(s)].push_back(s);
  for (int l = 0; l <= m.rank(); ++l) {
    for (auto& [flat, members] : by_flat[l]) {
      std::sort(members.begin(), members.end(), lex_less);
      out.levels[l].push_back(EquivClass{flat, l, members});
    }
    std::sort(out.levels[l].begin(), out.levels[l].end(),
              [](const EquivClass& x, const EquivClass& y) { return lex_less(x.representative(), y.representative()); });
    for (int i = 0; i < int(out.levels[l].size()); ++i)
      for (Subset s : out.levels[l][i].members) out.lookup_.emplace_back(s, i);
  }
  std::sort(out.lookup_.begin(), out.lookup_.end());
  return out;
}

std::optional<std::string> equivalence_lemma_violation(const Matroid& m) {
  const auto& fam = m.independents();
  const std::size_t nf = fam.size();
  check_guard(nf <= 4096, "equivalence lemma check on more than 4096 independent sets");
  // Signature of S: the characteristic vector of {U in F : U cap S = {}, U cup S in F}.
  std::map<std::vector<bool>, Subset> sig_to_closure;
  std::map<Subset, std::vector<bool>> closure_to_sig;
  for (Subset s : fam) {
    std::vector<bool> sig(nf);
    for (std::size_t i = 0; i < nf; ++i) sig[i] = (fam[i] & s) == 0 && m.is_independent(fam[i] | s);
    Subset cl = m.closure(s);
    auto [it, fresh] = sig_to_closure.emplace(sig, cl);
    if (!fresh && it->second != cl)
      return "sets with closures " + m.describe(it->second) + " and " + m.describe(cl) +
             " have the same compatible family";
    auto [jt, fresh2] = closure_to_sig.emplace(cl, sig);
    if (!fresh2 && jt->second != sig)
      return "two sets with closure " + m.describe(cl) + " have different compatible families";
  }
  return std::nullopt;
}

}  // namespace matgor
