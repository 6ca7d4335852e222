#include "matgor/lefschetz.hpp"

#include <random>
#include <sstream>

#include "matgor/linalg.hpp"

namespace matgor {

std::vector<Rational> all_ones(int n) { return std::vector<Rational>(n, 1); }

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational r;
    if (item.empty() || r.set_str(item, 10) != 0) throw InputError("bad point coordinate '" + item + "'");
    if (sgn(r.get_den()) == 0) throw InputError("zero denominator in point coordinate");
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

LefschetzReport slp_rank_check(const Matroid& m, const std::vector<Rational>& a, IdealKind ideal) {
  if (int(a.size()) != m.size()) throw InputError("point has " + std::to_string(a.size()) + " coordinates, expected " +
                                                  std::to_string(m.size()));
  const auto q = ideal == IdealKind::Ann ? GradedQuotient::ann(phi(m), m.size()) : GradedQuotient::jm(m);
  LefschetzReport r;
  r.method = "rank";
  r.ideal = ideal;
  r.point = a;
  r.pass = true;
  const int top = q.top_degree();
  for (int i = 0; 2 * i <= top; ++i) {
    LefschetzStep s{i, q.dim(i), q.dim(top - i), 0, false};
    s.rank = rank(q.power_map(a, i, top - 2 * i));
    s.pass = s.rank == s.dim_low && s.rank == s.dim_high;
    r.pass = r.pass && s.pass;
    r.steps.push_back(s);
  }
  return r;
}

LefschetzReport slp_hessian_check(const Matroid& m, const std::vector<Rational>& a) {
  if (int(a.size()) != m.size()) throw InputError("point has " + std::to_string(a.size()) + " coordinates, expected " +
                                                  std::to_string(m.size()));
  const SquareFreePoly f = phi(m);
  const auto q = GradedQuotient::ann(f, m.size());
  LefschetzReport r;
  r.method = "hessian";
  r.ideal = IdealKind::Ann;
  r.point = a;
  r.phi_value = f.evaluate(a);
  r.pass = sgn(r.phi_value) != 0;
  for (int d = 1; 2 * d <= q.top_degree(); ++d) {
    std::vector<DiffPoly> basis;
    for (Subset s : q.basis(d)) basis.push_back(Poly::term(Monomial::from_subset(s, m.size())));
    HessianValue h{d, q.basis(d), hessian_det_at(basis, f, a)};
    r.pass = r.pass && sgn(h.value) != 0;
    r.hessians.push_back(std::move(h));
  }
  return r;
}

bool hessian_identically_zero(const Matroid& m, int d, unsigned seed) {
  const int n = m.size();
  const SquareFreePoly f = phi(m);
  const auto q = GradedQuotient::ann(f, n);
  if (d < 0 || d > q.top_degree()) throw InputError("Hessian degree out of range");
  std::vector<DiffPoly> basis;
  for (Subset s : q.basis(d)) basis.push_back(Poly::term(Monomial::from_subset(s, n)));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> a(n);
    for (auto& x : a) x = dist(rng);
    if (sgn(hessian_det_at(basis, f, a)) != 0) return false;
  }
  if (basis.size() <= 8) return hessian_det_symbolic(basis, f, n).is_zero();
  return true;
}

ConjectureProbe slp_probe_conjecture(const Matroid& m, int seeds, unsigned seed) {
  ConjectureProbe p;
  auto run = [&](const std::vector<Rational>& a) {
    bool ok = slp_rank_check(m, a, IdealKind::Ann).pass;
    p.trials.push_back({a, ok});
    p.evidence_pass = p.evidence_pass || ok;
  };
  run(all_ones(m.size()));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (int s = 0; s < seeds; ++s) {
    std::vector<Rational> a(m.size());
    for (auto& x : a) x = dist(rng);
    run(a);
  }
  p.note = p.evidence_pass ? "a strong Lefschetz element was found (evidence only, not a proof)"
                           : "no strong Lefschetz element among the tested points (inconclusive)";
  return p;
}

}  // namespace matgor
