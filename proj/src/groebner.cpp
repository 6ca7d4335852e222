#include "matgor/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "matgor/linalg.hpp"

namespace matgor {

// --- orders ---------------------------------------------------------------

MonomialOrder MonomialOrder::lex(int, std::vector<int> priority) {
  MonomialOrder o;
  o.tiebreak = TieBreak::Lex;
  o.priority = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grevlex(int, std::vector<int> priority) {
  MonomialOrder o;
  o.tiebreak = TieBreak::GRevLex;
  o.priority = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::weighted(IVec w, TieBreak t) {
  MonomialOrder o;
  o.weight = std::move(w);
  o.tiebreak = t;
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars();
  if (!weight.empty()) {
    if (int(weight.size()) != n) throw DimensionMismatch("weight vector length differs from the number of variables");
    Integer wa = 0, wb = 0;
    for (int i = 0; i < n; ++i) {
      if (a[i]) wa += weight[i] * a[i];
      if (b[i]) wb += weight[i] * b[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  auto var = [&](int i) { return priority.empty() ? i : priority[i]; };
  if (tiebreak != TieBreak::Lex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
  }
  if (tiebreak == TieBreak::GRevLex) {
    for (int i = n - 1; i >= 0; --i) {
      int v = var(i);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < n; ++i) {
    int v = var(i);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  std::string s = tiebreak == TieBreak::Lex ? "lex" : tiebreak == TieBreak::GrLex ? "grlex" : "grevlex";
  if (!priority.empty()) {
    s += " [";
    for (std::size_t i = 0; i < priority.size(); ++i) s += (i ? ">x" : "x") + std::to_string(priority[i] + 1);
    s += "]";
  }
  if (!weight.empty()) s += " weight " + format_ivec(weight);
  return s;
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& o) {
  if (f.is_zero()) throw Error("leading monomial of the zero polynomial");
  auto it = f.terms().begin();
  const Monomial* best = &it->first;
  for (++it; it != f.terms().end(); ++it)
    if (o.greater(it->first, *best)) best = &it->first;
  return *best;
}

Rational leading_coefficient(const Poly& f, const MonomialOrder& o) { return f.coefficient(leading_monomial(f, o)); }

// --- division -------------------------------------------------------------

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& o) {
  const int n = f.nvars();
  DivisionResult out;
  out.quotients.assign(divisors.size(), Poly(n));
  out.remainder = Poly(n);
  std::vector<Monomial> leads;
  std::vector<Rational> lcs;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw Error("division by the zero polynomial");
    leads.push_back(leading_monomial(g, o));
    lcs.push_back(g.coefficient(leads.back()));
  }
  Poly p = f;
  while (!p.is_zero()) {
    Monomial lm = leading_monomial(p, o);
    Rational lc = p.coefficient(lm);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].divides(lm)) continue;
      Monomial q = lm / leads[i];
      Rational c = lc / lcs[i];
      out.quotients[i].add_term(q, c);
      p -= divisors[i] * q * c;
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& o) {
  return divide(f, divisors, o).remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& o) {
  Monomial lf = leading_monomial(f, o), lg = leading_monomial(g, o);
  Monomial gamma = lf.lcm(lg);
  return f * (gamma / lf) * (Rational(1) / f.coefficient(lf)) - g * (gamma / lg) * (Rational(1) / g.coefficient(lg));
}

bool is_groebner(const std::vector<Poly>& gens, const MonomialOrder& o) {
  std::vector<Poly> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j], o), g, o).is_zero()) return false;
  return true;
}

namespace {

Poly monic(const Poly& f, const MonomialOrder& o) { return f * (Rational(1) / leading_coefficient(f, o)); }

void sort_basis(std::vector<Poly>& g, const MonomialOrder& o) {
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
    return o.greater(leading_monomial(a, o), leading_monomial(b, o));
  });
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& o) {
  std::vector<Poly> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(monic(p, o));
  if (g.empty()) return g;
  std::deque<std::pair<int, int>> pairs;
  for (int j = 0; j < int(g.size()); ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (leading_monomial(g[i], o).coprime(leading_monomial(g[j], o))) continue;
    Poly r = normal_form(s_polynomial(g[i], g[j], o), g, o);
    if (r.is_zero()) continue;
    g.push_back(monic(r, o));
    const int k = int(g.size()) - 1;
    for (int a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }
  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Poly> minimal;
  std::vector<Monomial> leads;
  for (const auto& p : g) leads.push_back(leading_monomial(p, o));
  for (int i = 0; i < int(g.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < int(g.size()) && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      if (leads[j] != leads[i] || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce tails.
  std::vector<Poly> reduced;
  for (int i = 0; i < int(minimal.size()); ++i) {
    std::vector<Poly> others;
    for (int j = 0; j < int(minimal.size()); ++j)
      if (j != i) others.push_back(minimal[j]);
    Monomial lm = leading_monomial(minimal[i], o);
    Poly tail = minimal[i];
    tail.add_term(lm, -tail.coefficient(lm));
    Poly r = normal_form(tail, others, o);
    r.add_term(lm, 1);
    reduced.push_back(std::move(r));
  }
  sort_basis(reduced, o);
  return reduced;
}

// --- Lambda_M -------------------------------------------------------------

std::vector<Poly> LambdaSet::all() const {
  std::vector<Poly> out = lambda1;
  out.insert(out.end(), lambda2.begin(), lambda2.end());
  out.insert(out.end(), lambda3.begin(), lambda3.end());
  return out;
}

LambdaSet lambda_set(const Matroid& m) {
  const int n = m.size();
  LambdaSet out;
  for (const auto& level : equivalence_classes(m).levels)
    for (const auto& c : level)
      for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j)
          out.lambda1.push_back(Poly::term(Monomial::from_subset(c.members[i], n)) -
                                Poly::term(Monomial::from_subset(c.members[j], n)));
  for (int e = 0; e < n; ++e) {
    Monomial sq(n);
    sq[e] = 2;
    out.lambda2.push_back(Poly::term(sq));
  }
  for (Subset c : m.circuits()) out.lambda3.push_back(Poly::term(Monomial::from_subset(c, n)));
  return out;
}

namespace {

// Uniform integer weight in [-1000, 1000]^n with no tie on a Lambda_1 binomial.
IVec weight_off_walls(const LambdaSet& lam, int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-1000, 1000);
  IVec w(n);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw Error("could not sample a weight off the walls");
    for (auto& x : w) x = dist(rng);
    bool tie = false;
    for (const auto& b : lam.lambda1) {
      auto it = b.terms().begin();
      const Monomial& a1 = it->first;
      const Monomial& a2 = (++it)->first;
      Integer d = 0;
      for (int i = 0; i < n; ++i) d += w[i] * (int(a1[i]) - int(a2[i]));
      if (d == 0) {
        tie = true;
        break;
      }
    }
    if (!tie) return w;
  }
}

}  // namespace

ProbeResult universal_gb_probe(const Matroid& m, int samples, unsigned seed) {
  const int n = m.size();
  const LambdaSet lam = lambda_set(m);
  const auto gens = lam.all();
  ProbeResult out;
  auto run = [&](const MonomialOrder& o) {
    ++out.orders_tested;
    if (!is_groebner(gens, o)) {
      out.passed = false;
      out.failures.push_back(o.describe());
    }
  };
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) run(MonomialOrder::weighted(weight_off_walls(lam, n, rng), TieBreak::GRevLex));
  for (int shift = 0; shift < n; ++shift) {
    std::vector<int> prio(n);
    for (int i = 0; i < n; ++i) prio[i] = (i + shift) % n;
    run(MonomialOrder::lex(n, prio));
    run(MonomialOrder::grevlex(n, prio));
  }
  return out;
}

ProbeResult initial_ideal_oracle_check(const Matroid& m, int samples, unsigned seed) {
  const int n = m.size();
  check_guard(n <= 5, "Macaulay-matrix oracle on more than 5 elements");
  const LambdaSet lam = lambda_set(m);
  const auto gens = lam.all();
  const int top = m.rank() + 1;
  ProbeResult out;
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const IVec w = weight_off_walls(lam, n, rng);
    const auto o = MonomialOrder::weighted(w, TieBreak::GRevLex);
    ++out.orders_tested;
    std::vector<Monomial> leads;
    for (const auto& g : initial_ideal_w(gens, w, true).generators) leads.push_back(leading_monomial(g, o));
    if (monomial_ideal_by_degree(leads, n, top) != macaulay_leading_monomials(gens, o, top)) {
      out.passed = false;
      out.failures.push_back(o.describe());
    }
  }
  return out;
}

// --- initial ideals -------------------------------------------------------

Poly initial_form(const Poly& f, const IVec& w) {
  Poly out(f.nvars());
  if (f.is_zero()) return out;
  std::optional<Integer> best;
  for (const auto& [m, c] : f.terms()) {
    Integer v = 0;
    for (int i = 0; i < m.nvars(); ++i) v += w[i] * m[i];
    if (!best || v > *best) {
      best = v;
      out = Poly(f.nvars());
    }
    if (v == *best) out.add_term(m, c);
  }
  return out;
}

InitialIdeal initial_ideal_w(const std::vector<Poly>& gens, const IVec& w, bool universal) {
  InitialIdeal out;
  std::vector<Poly> basis = universal ? gens : buchberger(gens, MonomialOrder::weighted(w, TieBreak::GRevLex));
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    Poly in = initial_form(g, w);
    if (in.terms().size() > 1) {
      if (!universal) throw TiedWeight("weight " + format_ivec(w) + " ties the initial form of a basis element");
      out.monomial = false;
    }
    if (std::find(out.generators.begin(), out.generators.end(), in) == out.generators.end())
      out.generators.push_back(std::move(in));
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(n);
  // Enumerate compositions of d into n parts.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = std::uint16_t(left);
      out.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m[i] = std::uint16_t(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Monomial>> macaulay_leading_monomials(const std::vector<Poly>& gens, const MonomialOrder& o,
                                                              int max_degree) {
  if (gens.empty()) return std::vector<std::vector<Monomial>>(max_degree + 1);
  const int n = gens.front().nvars();
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw InputError("Macaulay matrix needs homogeneous generators");
  std::vector<std::vector<Monomial>> out(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    auto cols = monomials_of_degree(n, d);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
    std::map<Monomial, int> index;
    for (int i = 0; i < int(cols.size()); ++i) index.emplace(cols[i], i);
    EchelonBasis eb;
    for (const auto& g : gens) {
      int k = d - g.degree();
      if (g.is_zero() || k < 0) continue;
      for (const auto& mult : monomials_of_degree(n, k)) {
        SparseVec v;
        for (const auto& [mono, c] : g.terms()) v.emplace_back(index.at(mono * mult), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        eb.add(v);
      }
    }
    for (int p : eb.pivot_columns()) out[d].push_back(cols[p]);
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

std::vector<std::vector<Monomial>> monomial_ideal_by_degree(const std::vector<Monomial>& gens, int n, int max_degree) {
  std::vector<std::vector<Monomial>> out(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(n, d))
      for (const auto& g : gens)
        if (g.divides(m)) {
          out[d].push_back(m);
          break;
        }
  return out;
}

std::vector<IVec> groebner_cone_inequalities(const std::vector<Poly>& reduced_gb, const MonomialOrder& o) {
  std::vector<IVec> out;
  std::set<IVec> seen;
  for (const auto& g : reduced_gb) {
    Monomial lm = leading_monomial(g, o);
    for (const auto& [m, c] : g.terms()) {
      if (m == lm) continue;
      IVec v(g.nvars());
      for (int i = 0; i < g.nvars(); ++i) v[i] = int(lm[i]) - int(m[i]);
      if (seen.insert(v).second) out.push_back(std::move(v));
    }
  }
  return out;
}

RationalCone groebner_cone(const std::vector<Poly>& reduced_gb, const MonomialOrder& o, bool in_h) {
  if (reduced_gb.empty()) throw Error("Groebner cone of an empty basis");
  const int n = reduced_gb.front().nvars();
  std::vector<IVec> eq;
  if (in_h) eq.push_back(h_equation(n));
  return RationalCone(n, groebner_cone_inequalities(reduced_gb, o), eq);
}

// --- square-free ideals ---------------------------------------------------

namespace {

QVec to_dense(const SquareFreePoly& f, const std::vector<Subset>& monos) {
  QVec v(monos.size());
  for (const auto& [s, c] : f.terms()) {
    auto it = std::lower_bound(monos.begin(), monos.end(), s, lex_less);
    if (it == monos.end() || *it != s) throw Error("monomial outside the graded piece");
    v[it - monos.begin()] = c;
  }
  return v;
}

}  // namespace

SquareFreeIdeal SquareFreeIdeal::ann(const SquareFreePoly& f, int nvars) {
  if (f.is_zero() || !f.is_homogeneous()) throw InputError("Ann needs a nonzero homogeneous polynomial");
  SquareFreeIdeal I;
  I.n_ = nvars;
  I.top_ = f.degree();
  I.monos_.resize(I.top_ + 1);
  I.span_.resize(I.top_ + 1);
  for (int d = 1; d <= I.top_; ++d) {
    I.monos_[d] = k_subsets(nvars, d);
    const auto targets = k_subsets(nvars, I.top_ - d);
    QMatrix cat(int(targets.size()), int(I.monos_[d].size()));
    for (int j = 0; j < cat.cols(); ++j) {
      QVec col = to_dense(apply_diff(I.monos_[d][j], f), targets);
      for (int i = 0; i < cat.rows(); ++i) cat(i, j) = col[i];
    }
    I.span_[d] = nullspace(cat);
  }
  return I;
}

SquareFreeIdeal SquareFreeIdeal::jm(const Matroid& m) {
  SquareFreeIdeal I;
  I.n_ = m.size();
  I.top_ = m.rank();
  I.monos_.resize(I.top_ + 1);
  I.span_.resize(I.top_ + 1);
  const auto classes = equivalence_classes(m);
  for (int d = 1; d <= I.top_; ++d) {
    I.monos_[d] = k_subsets(I.n_, d);
    const auto& monos = I.monos_[d];
    auto pos = [&](Subset s) { return int(std::lower_bound(monos.begin(), monos.end(), s, lex_less) - monos.begin()); };
    for (Subset s : monos)
      if (!m.is_independent(s)) {
        QVec v(monos.size());
        v[pos(s)] = 1;
        I.span_[d].push_back(std::move(v));
      }
    for (const auto& c : classes.levels[d])
      for (std::size_t i = 1; i < c.members.size(); ++i) {
        QVec v(monos.size());
        v[pos(c.members[i])] = 1;
        v[pos(c.members[0])] = -1;
        I.span_[d].push_back(std::move(v));
      }
  }
  return I;
}

std::vector<Poly> SquareFreeIdeal::generators() const {
  std::vector<Poly> out;
  for (int e = 0; e < n_; ++e) {
    Monomial sq(n_);
    sq[e] = 2;
    out.push_back(Poly::term(sq));
  }
  for (int d = 1; d <= top_; ++d)
    for (const auto& v : span_[d]) {
      Poly p(n_);
      for (std::size_t j = 0; j < v.size(); ++j) p.add_term(Monomial::from_subset(monos_[d][j], n_), v[j]);
      out.push_back(std::move(p));
    }
  for (Subset s : k_subsets(n_, top_ + 1)) out.push_back(Poly::term(Monomial::from_subset(s, n_)));
  return out;
}

std::vector<Poly> SquareFreeIdeal::reduced_gb(const MonomialOrder& o) const {
  std::vector<Poly> out;
  std::vector<Subset> leads;  // square-free leading monomials found so far
  auto divisible = [&](Subset s) {
    for (Subset l : leads)
      if (is_subset(l, s)) return true;
    return false;
  };
  for (int d = 1; d <= top_; ++d) {
    const auto& monos = monos_[d];
    if (span_[d].empty()) continue;
    std::vector<int> order(monos.size());
    for (int i = 0; i < int(order.size()); ++i) order[i] = i;
    std::vector<Monomial> mm;
    for (Subset s : monos) mm.push_back(Monomial::from_subset(s, n_));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return o.greater(mm[a], mm[b]); });
    QMatrix a(int(span_[d].size()), int(monos.size()));
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) a(r, c) = span_[d][r][order[c]];
    auto piv = rref(a);
    std::vector<Subset> new_leads;
    for (int r = 0; r < int(piv.size()); ++r) {
      Subset lead = monos[order[piv[r]]];
      if (divisible(lead)) continue;
      Poly p(n_);
      for (int c = 0; c < a.cols(); ++c) p.add_term(mm[order[c]], a(r, c));
      out.push_back(std::move(p));
      new_leads.push_back(lead);
    }
    leads.insert(leads.end(), new_leads.begin(), new_leads.end());
  }
  for (int e = 0; e < n_; ++e) {
    if (divisible(singleton(e))) continue;
    Monomial sq(n_);
    sq[e] = 2;
    out.push_back(Poly::term(sq));
  }
  for (Subset s : k_subsets(n_, top_ + 1))
    if (!divisible(s)) out.push_back(Poly::term(Monomial::from_subset(s, n_)));
  sort_basis(out, o);
  return out;
}

// --- oracles and fans -----------------------------------------------------

namespace {

std::optional<ConeCertificate> certificate(const std::vector<Poly>& gb, const MonomialOrder& o, const IVec& w) {
  ConeCertificate cert;
  cert.inequalities = groebner_cone_inequalities(gb, o);
  for (const auto& a : cert.inequalities)
    if (sgn(dot(a, w)) <= 0) return std::nullopt;
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(leading_monomial(g, o));
  std::sort(leads.begin(), leads.end());
  for (const auto& m : leads) {
    cert.key += "[";
    for (auto e : m.exponents()) cert.key += std::to_string(e) + ",";
    cert.key += "]";
  }
  return cert;
}

}  // namespace

ConeOracle square_free_oracle(const SquareFreeIdeal& ideal) {
  return [ideal](const IVec& w) {
    MonomialOrder o = MonomialOrder::weighted(w, TieBreak::GRevLex);
    return certificate(ideal.reduced_gb(o), o, w);
  };
}

ConeOracle buchberger_oracle(const std::vector<Poly>& gens, int) {
  return [gens](const IVec& w) {
    MonomialOrder o = MonomialOrder::weighted(w, TieBreak::GRevLex);
    return certificate(buchberger(gens, o), o, w);
  };
}

ConeOracle principal_oracle(const Poly& f) {
  return [f](const IVec& w) {
    MonomialOrder o = MonomialOrder::weighted(w, TieBreak::GRevLex);
    return certificate({f * (Rational(1) / leading_coefficient(f, o))}, o, w);
  };
}

Fan groebner_fan(const std::vector<Poly>& gens, int nvars, const TraversalOptions& opts) {
  check_guard(nvars <= 5, "Groebner fan traversal of a general ideal in more than 5 variables");
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw InputError("Groebner fan needs homogeneous generators");
  if (gens.size() == 1) return traverse_fan(nvars, principal_oracle(gens.front()), opts);
  return traverse_fan(nvars, buchberger_oracle(gens, nvars), opts);
}

}  // namespace matgor
