#include "matgor/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "matgor/groebner.hpp"
#include "matgor/inverse_system.hpp"
#include "matgor/io.hpp"
#include "matgor/lattice.hpp"
#include "matgor/lefschetz.hpp"
#include "matgor/polyhedral.hpp"

namespace matgor {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

json ivec_json(const IVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

json rays_json(const std::vector<IVec>& rays) {
  std::vector<IVec> sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const auto& r : sorted) out.push_back(ivec_json(r));
  return out;
}

IVec ivec(std::initializer_list<long> xs) { return IVec(xs.begin(), xs.end()); }

std::vector<IVec> negate_all(std::vector<IVec> v) {
  for (auto& r : v)
    for (auto& x : r) x = -x;
  return v;
}

bool symmetric(const HilbertVector& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

long binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.get_si();
}

void guard_size(const Matroid& m, const RunOptions& o, const std::string& what) {
  check_guard(m.size() <= (o.big ? 7 : 5), what + " on " + std::to_string(m.size()) + " elements" +
                                              (o.big ? "" : " (use --big for up to 7)"));
}

const Matroid& fivevec() {
  static const Matroid m = builtin_matroid("fivevec");
  return m;
}

// Expected objects may name only some fields.
bool agrees(const json& got, const json& want) {
  if (!want.is_object() || !got.is_object()) return got == want;
  for (const auto& [k, v] : want.items())
    if (!got.contains(k) || !agrees(got.at(k), v)) return false;
  return true;
}

}  // namespace

// --- results ---------------------------------------------------------------

void CheckResult::expect(const std::string& key, const json& value) {
  expected[key] = value;
  bool match = data.contains(key) && agrees(data.at(key), value);
  comparisons.push_back({{"quantity", key}, {"verdict", match ? "match" : "mismatch"}});
  if (!match) failures.push_back(key + " differs from the expected value");
}

void CheckResult::cross_check(const std::string& name, bool holds) {
  cross_checks.push_back({{"name", name}, {"holds", holds}});
  if (!holds) failures.push_back(name);
}

json CheckResult::flat() const {
  json out = data;
  if (!expected.empty()) out["paper-expected"] = expected;
  if (!comparisons.empty()) out["comparisons"] = comparisons;
  if (!cross_checks.empty()) out["cross_checks"] = cross_checks;
  out["failures"] = failures;
  out["verdict"] = pass() ? "pass" : "fail";
  return out;
}

json CheckResult::tagged() const {
  json out = {{"computed", data}};
  if (!expected.empty()) out["paper-expected"] = expected;
  out["comparisons"] = comparisons;
  out["cross_checks"] = cross_checks;
  out["failures"] = failures;
  out["verdict"] = pass() ? "pass" : "fail";
  return out;
}

const json& Expectations::get(const std::string& check) const {
  static const json empty = json::object();
  return by_check.contains(check) ? by_check.at(check) : empty;
}

// --- expectations ----------------------------------------------------------

std::vector<long> q_binomials(int q, int n) {
  std::vector<long> out;
  for (int i = 0; i <= n; ++i) {
    Integer num = 1, den = 1;
    for (int j = 0; j < i; ++j) {
      Integer a, b;
      mpz_ui_pow_ui(a.get_mpz_t(), q, n - j);
      mpz_ui_pow_ui(b.get_mpz_t(), q, j + 1);
      num *= a - 1;
      den *= b - 1;
    }
    out.push_back(Integer(num / den).get_si());
  }
  return out;
}

Expectations expectations_for(const Matroid& m, const json& spec) {
  Expectations e;
  auto& x = e.by_check;
  // Statements valid for every matroid.
  x["algebra"]["gorenstein_ann"] = true;
  x["ugb"]["passed"] = true;
  x["tropical"]["support_function_pass"] = true;

  const std::string type = spec.is_object() && spec.contains("type") && spec["type"].is_string()
                               ? spec["type"].get<std::string>()
                               : "";
  auto modular_family = [&](const std::vector<long>& levels) {
    x["algebra"]["hilbert_ann"] = levels;
    x["algebra"]["hilbert_jm"] = levels;
    x["algebra"]["ann_equals_jm"] = true;
    x["algebra"]["gorenstein_jm"] = true;
    x["lattice"]["levels"] = levels;
    x["lattice"]["modular"] = true;
    x["lattice"]["n_atoms"] = levels.size() > 1 ? levels[1] : 0;
    x["lattice"]["n_coatoms"] = levels.size() > 1 ? levels[levels.size() - 2] : 0;
    x["sperner"]["sperner"] = true;
    x["sperner"]["max_level"] = *std::max_element(levels.begin(), levels.end());
    x["lefschetz"]["pass"] = true;
  };
  auto pg_fans = [&](int q, int n) {
    if (q == 2 && n == 2) {
      std::vector<IVec> r = {ivec({-2, 1, 1}), ivec({1, -2, 1}), ivec({1, 1, -2})};
      for (const char* k : {"fan_jm", "fan_ann"}) {
        x[k]["counts"] = {{"maximal", 3}, {"rays", 3}};
        x[k]["rays"] = rays_json(r);
      }
      x["fan_phi"]["counts"] = {{"maximal", 3}, {"rays", 3}};
      x["fan_phi"]["rays"] = rays_json(negate_all(r));
    }
    if (q == 2 && n == 3) {
      x["fan_jm"]["counts"] = {{"maximal", 420}, {"rays", 49}};
      x["fan_ann"]["counts"] = {{"maximal", 420}, {"rays", 49}};
      x["fan_phi"]["counts"] = {{"maximal", 28}, {"rays", 21}};
    }
  };

  if (type == "pg") {
    int q = spec["q"].get<int>(), n = spec["n"].get<int>();
    e.instance = "M(" + std::to_string(q) + "," + std::to_string(n) + ")";
    modular_family(q_binomials(q, n));
    pg_fans(q, n);
    return e;
  }
  const auto bases = m.bases();
  if (type == "boolean" || (bases.size() == 1 && bases.front() == m.ground())) {
    const int n = m.size();
    e.instance = "boolean(" + std::to_string(n) + ")";
    std::vector<long> levels;
    for (int i = 0; i <= n; ++i) levels.push_back(binomial(n, i));
    modular_family(levels);
    return e;
  }
  if (type == "plane") {
    const long p = m.size();
    e.instance = "projective plane on " + std::to_string(p) + " points";
    modular_family({1, p, p, 1});
    if (p == 7) pg_fans(2, 3);
    return e;
  }
  if (m.size() == 5 && m.rank() == 3 && bases.size() == 8 && isomorphic(m, fivevec())) {
    const bool same = m.bases() == fivevec().bases();
    e.instance = same ? "5-vector" : "5-vector (relabeled)";
    x["algebra"]["hilbert_ann"] = {1, 5, 5, 1};
    x["algebra"]["hilbert_jm"] = {1, 5, 6, 1};
    x["algebra"]["ann_equals_jm"] = false;
    x["algebra"]["gorenstein_jm"] = false;
    x["lattice"]["levels"] = {1, 5, 6, 1};
    x["lattice"]["n_atoms"] = 5;
    x["lattice"]["n_coatoms"] = 6;
    x["lattice"]["modular"] = false;
    x["lefschetz"]["pass"] = true;
    x["fan_jm"]["counts"] = {{"maximal", 12}, {"rays", 7}};
    x["fan_ann"]["counts"] = {{"maximal", 20}, {"rays", 9}};
    x["fan_phi"]["counts"]["maximal"] = 8;
    if (same) {
      x["algebra"]["extra_generators"] = {{"2", {"1 * x1*x3 - 1 * x1*x5 - 1 * x3*x4 + 1 * x4*x5"}}};
      x["lefschetz"]["hessian_values"] = {{"1", 256}};
      std::vector<IVec> j = {ivec({-4, 1, 1, 1, 1}),  ivec({-2, -2, 3, -2, 3}), ivec({-1, 4, -1, -1, -1}),
                             ivec({1, 1, -4, 1, 1}),  ivec({1, 1, 1, -4, 1}),   ivec({1, 1, 1, 1, -4}),
                             ivec({3, -2, -2, 3, -2})};
      std::vector<IVec> a = j;
      a.push_back(ivec({-3, 2, 2, -3, 2}));
      a.push_back(ivec({2, 2, -3, 2, -3}));
      x["fan_jm"]["rays"] = rays_json(j);
      x["fan_ann"]["rays"] = rays_json(a);
      x["fan_phi"]["rays"] = rays_json(negate_all(j));
    }
    return e;
  }
  if (m.size() <= 8) {
    for (auto [q, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
      Matroid pg = projective_geometry(q, n);
      if (pg.size() == m.size() && pg.rank() == m.rank() && isomorphic(m, pg)) {
        e.instance = "M(" + std::to_string(q) + "," + std::to_string(n) + ") (relabeled)";
        modular_family(q_binomials(q, n));
        if (q == 2 && n == 3) pg_fans(q, n);
        if (q == 2 && n == 2) {
          // Ray coordinates depend on the labeling; keep the counts only.
          for (const char* k : {"fan_jm", "fan_ann", "fan_phi"}) x[k]["counts"] = {{"maximal", 3}, {"rays", 3}};
        }
        return e;
      }
    }
  }
  return e;
}

// --- checks ----------------------------------------------------------------

CheckResult check_axioms(const Matroid& m) {
  CheckResult r;
  r.data["ground_size"] = m.size();
  r.data["rank"] = m.rank();
  r.data["independent_sets"] = m.independents().size();
  r.data["bases"] = m.bases().size();
  r.data["circuits"] = m.circuits().size();
  r.data["loops"] = subset_json(m, m.loops());
  r.data["class_counts"] = equivalence_classes(m).counts();
  if (m.independents().size() <= 4096) {
    auto v = m.axiom_violation();
    r.data["axioms"] = !v;
    if (v) r.failures.push_back("matroid axioms: " + *v);
  } else {
    r.data["axioms"] = nullptr;
  }
  if (m.size() <= 10) {
    auto v = equivalence_lemma_violation(m);
    r.data["equivalence_lemma"] = !v;
    if (v) r.failures.push_back("equivalence lemma: " + *v);
  } else {
    r.data["equivalence_lemma"] = nullptr;
  }
  return r;
}

CheckResult check_algebra(const Matroid& m, const Expectations& e) {
  CheckResult r;
  const auto cmp = ann_equals_jm(m);
  const bool gor_ann = is_gorenstein(GradedQuotient::ann(phi(m), m.size()));
  const bool gor_jm = is_gorenstein(GradedQuotient::jm(m));
  r.data["hilbert_ann"] = cmp.hilbert_ann;
  r.data["hilbert_jm"] = cmp.hilbert_jm;
  r.data["gorenstein_ann"] = gor_ann;
  r.data["gorenstein_jm"] = gor_jm;
  r.data["ann_equals_jm"] = cmp.equal;
  json extra = json::object();
  for (const auto& [d, gens] : cmp.extra_generators) {
    json list = json::array();
    for (const auto& g : gens) list.push_back(to_string(g));
    extra[std::to_string(d)] = list;
  }
  r.data["extra_generators"] = extra;
  r.cross_check("Ann Hilbert vector is symmetric", symmetric(cmp.hilbert_ann));
  r.cross_check("J_M Hilbert vector counts equivalence classes", cmp.hilbert_jm == equivalence_classes(m).counts());
  r.cross_check("Ann = J_M iff Q/J_M is Gorenstein", cmp.equal == gor_jm);
  for (const auto& [k, v] : e.get("algebra").items()) r.expect(k, v);
  return r;
}

CheckResult check_ugb(const Matroid& m, const RunOptions& o, const Expectations& e) {
  guard_size(m, o, "universal Groebner basis probe");
  CheckResult r;
  const auto probe = universal_gb_probe(m, o.samples, o.seed);
  r.data["passed"] = probe.passed;
  r.data["orders_tested"] = probe.orders_tested;
  r.data["random_orders"] = o.samples;
  r.data["failed_orders"] = probe.failures;
  if (m.size() <= 5) {
    const auto oracle = initial_ideal_oracle_check(m, 10, o.seed);
    r.data["oracle_orders"] = oracle.orders_tested;
    r.data["oracle_agreement"] = oracle.passed;
    r.cross_check("initial ideals agree with the Macaulay-matrix oracle", oracle.passed);
  }
  for (const auto& [k, v] : e.get("ugb").items()) r.expect(k, v);
  return r;
}

CheckResult check_lefschetz(const Matroid& m, const std::optional<std::string>& point, const std::string& method,
                            const std::string& ideal, const Expectations& e) {
  if (method != "rank" && method != "hessian" && method != "both")
    throw InputError("--method must be rank, hessian or both");
  if (ideal != "ann" && ideal != "jm") throw InputError("--ideal must be ann or jm");
  const std::vector<Rational> a = point ? parse_point(*point) : all_ones(m.size());
  const bool at_ones = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 1; });
  CheckResult r;
  json pj = json::array();
  for (const auto& x : a) pj.push_back(rational_json(x));
  r.data["point"] = pj;
  r.data["method"] = method;
  r.data["ideal"] = ideal;
  std::optional<bool> rank_pass, hess_pass;
  if (method != "hessian") {
    auto rep = slp_rank_check(m, a, ideal == "ann" ? IdealKind::Ann : IdealKind::JM);
    json steps = json::array();
    for (const auto& s : rep.steps)
      steps.push_back({{"i", s.degree}, {"dim_low", s.dim_low}, {"dim_high", s.dim_high}, {"rank", s.rank},
                       {"pass", s.pass}});
    r.data["rank"] = {{"pass", rep.pass}, {"steps", steps}};
    rank_pass = rep.pass;
  }
  if (method != "rank") {
    auto rep = slp_hessian_check(m, a);
    json values = json::object(), bases = json::object();
    std::vector<int> zero_degrees;
    for (const auto& h : rep.hessians) {
      values[std::to_string(h.degree)] = rational_json(h.value);
      json b = json::array();
      for (Subset s : h.basis) b.push_back(subset_json(m, s));
      bases[std::to_string(h.degree)] = b;
      if (sgn(h.value) == 0 && hessian_identically_zero(m, h.degree)) zero_degrees.push_back(h.degree);
    }
    r.data["hessian"] = {{"pass", rep.pass},
                         {"phi_value", rational_json(rep.phi_value)},
                         {"bases", bases},
                         {"identically_zero_degrees", zero_degrees}};
    r.data["hessian_values"] = values;
    hess_pass = rep.pass;
  }
  r.data["pass"] = rank_pass ? *rank_pass : *hess_pass;
  if (rank_pass && hess_pass && ideal == "ann") {
    r.data["agreement"] = *rank_pass == *hess_pass;
    r.cross_check("rank and Hessian criteria agree", *rank_pass == *hess_pass);
  }
  if (at_ones && ideal == "ann")
    for (const auto& [k, v] : e.get("lefschetz").items())
      if (r.data.contains(k)) r.expect(k, v);
  return r;
}

CheckResult check_sperner(const Matroid& m, const std::string& method, const RunOptions& o, const Expectations& e) {
  if (method != "dilworth" && method != "lefschetz" && method != "both")
    throw InputError("--method must be dilworth, lefschetz or both");
  CheckResult r;
  const auto l = build_lattice(m);
  r.data["method"] = method;
  r.data["levels"] = l.level_sizes();
  int max_level = 0;
  for (int s : l.level_sizes()) max_level = std::max(max_level, s);
  r.data["max_level"] = max_level;
  std::optional<bool> dilworth, certificate;
  if (method != "lefschetz") {
    const auto ac = max_antichain(l);
    r.data["max_antichain"] = ac.size;
    r.data["min_chain_cover"] = ac.min_chain_cover;
    json w = json::array();
    for (int i : ac.witness) w.push_back(subset_json(m, l.flats[i]));
    r.data["antichain_witness"] = w;
    dilworth = ac.size == max_level;
    r.cross_check("antichain witness size equals the chain cover size", ac.size == ac.min_chain_cover);
  }
  if (method != "dilworth") {
    json c;
    try {
      const auto res = order_raising_maps(m, std::nullopt, o.seed);
      json ranks = json::array();
      for (const auto& mp : res.maps)
        ranks.push_back({{"degree", mp.degree},
                         {"rows", mp.matrix.rows()},
                         {"cols", mp.matrix.cols()},
                         {"rank", mp.rank},
                         {"full_rank", mp.full_rank},
                         {"support_ok", mp.support_ok}});
      json coeffs = json::array();
      for (const auto& x : res.coefficients) coeffs.push_back(rational_json(x));
      c = {{"applicable", true},
           {"certificate", res.certificate},
           {"coefficients", coeffs},
           {"attempts", res.attempts},
           {"maps", ranks},
           {"convention", "injective below the middle rank, surjective above"}};
      certificate = res.certificate;
    } catch (const DimensionMismatch& ex) {
      c = {{"applicable", false}, {"reason", ex.what()}};
    }
    r.data["lefschetz_certificate"] = c;
  }
  if (dilworth) {
    r.data["sperner"] = *dilworth;
  } else if (certificate && *certificate) {
    r.data["sperner"] = true;
  } else {
    r.data["sperner"] = nullptr;
  }
  if (dilworth && certificate) {
    r.data["method_agreement"] = *dilworth == *certificate;
    r.cross_check("Dilworth and Lefschetz certificate agree", *dilworth == *certificate);
  } else {
    r.data["method_agreement"] = nullptr;
  }
  for (const auto& [k, v] : e.get("sperner").items())
    if (!r.data[k].is_null()) r.expect(k, v);
  return r;
}

CheckResult check_lattice(const Matroid& m, const Expectations& e) {
  CheckResult r;
  const auto l = build_lattice(m);
  const auto p = lattice_predicates(l);
  r.data["flats"] = l.size();
  r.data["levels"] = l.level_sizes();
  r.data["graded"] = p.graded;
  r.data["atomic"] = p.atomic;
  r.data["semimodular"] = p.semimodular;
  r.data["geometric"] = p.atomic && p.semimodular;
  r.data["modular"] = p.modular;
  r.data["n_atoms"] = p.n_atoms;
  r.data["n_coatoms"] = p.n_coatoms;
  r.data["greene_consistent"] = p.greene_consistent;
  if (p.non_modular_pair)
    r.data["non_modular_pair"] = {subset_json(m, p.non_modular_pair->first), subset_json(m, p.non_modular_pair->second)};
  else
    r.data["non_modular_pair"] = nullptr;
  r.cross_check("covers raise rank by one", p.graded);
  r.cross_check("lattice of flats is geometric", p.atomic && p.semimodular);
  r.cross_check("modular iff atoms and coatoms are equinumerous", p.greene_consistent);
  for (const auto& [k, v] : e.get("lattice").items()) r.expect(k, v);
  return r;
}

CheckResult check_fan(const Matroid& m, const std::string& ideal, const RunOptions& o, const Expectations& e) {
  if (ideal != "jm" && ideal != "ann" && ideal != "phi") throw InputError("--ideal must be jm, ann or phi");
  guard_size(m, o, "Groebner fan");
  TraversalOptions topts;
  topts.seed = o.seed;
  CheckResult r;
  Fan f = ideal == "jm" ? jm_fan(m, topts) : ideal == "ann" ? ann_fan(m, topts) : phi_fan(m, topts);
  r.data["ideal"] = ideal;
  r.data["counts"] = {{"maximal", f.n_maximal()}, {"rays", f.n_rays()}};
  r.data["rays"] = rays_json(f.rays);
  r.data["fan"] = f.to_json();
  bool rays_ok = true;
  for (const auto& ray : f.rays) {
    Integer s = 0, g = 0;
    for (const auto& x : ray) {
      s += x;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (s != 0 || g != 1) rays_ok = false;
  }
  r.cross_check("rays are primitive and lie in H", rays_ok);
  r.cross_check("every facet is shared by exactly two maximal cones", !fan_completeness_violation(f));
  if (m.size() <= 5) {
    r.cross_check("maximal cones meet in common faces", !fan_face_violation(f));
    if (ideal == "jm") {
      Fan g = jm_groebner_fan(m, topts);
      r.cross_check("chamber fan equals the fan of reduced Groebner bases", g.rays == f.rays && g.cones == f.cones);
    }
    if (ideal == "ann") {
      Fan j = jm_fan(m, topts);
      bool refined = refines(f, j);
      r.data["refines_jm"] = refined;
      r.cross_check("Ann fan refines the J_M fan", refined);
    }
  }
  for (const auto& [k, v] : e.get("fan_" + ideal).items()) r.expect(k, v);
  return r;
}

CheckResult check_tropical(const Matroid& m, const RunOptions& o, const Expectations& e) {
  CheckResult r;
  const auto sf = support_function_check(m, o.trials, o.seed);
  r.data["support_function"] = {{"trials", sf.trials},
                                {"failures", sf.failures},
                                {"centered", sf.centered},
                                {"self_value", sf.self_value}};
  r.data["support_function_pass"] = sf.pass();
  const auto poly = matroid_polytope(m);
  r.data["polytope"] = {{"vertices", poly.vertices.size()}, {"base_vertices", poly.base_vertices.size()}};
  if (m.size() <= 6) {
    const auto ed = edmonds_check(m);
    r.data["polytope"]["edmonds"] = {{"vertices_satisfy", ed.vertices_satisfy},
                                     {"points_in_hull", ed.points_in_hull},
                                     {"vertex_enumeration", ed.vertex_enumeration}};
    r.cross_check("rank inequalities describe the matroid polytope", ed.pass());
  }
  const auto ws = walls(m);
  int distinct = 0, edges = 0;
  for (const auto& w : ws) {
    if (w.duplicate_of < 0) ++distinct;
    if (w.edge()) ++edges;
  }
  r.data["walls"] = {{"pairs", ws.size()}, {"distinct", distinct}, {"codimension_one", edges}};
  if (m.size() <= (o.big ? 7 : 5)) {
    TraversalOptions topts;
    topts.seed = o.seed;
    const auto id = hypersurf_identities(m, topts);
    r.data["identities"] = {{"id1", id.id1},
                            {"id2", id.id2},
                            {"id3", id.id3},
                            {"corollary", id.corollary},
                            {"corollary_literal", id.corollary_literal},
                            {"failures", id.failures}};
    r.cross_check("hypersurface identity (1)", id.id1);
    r.cross_check("hypersurface identity (2)", id.id2);
    r.cross_check("hypersurface identity (3)", id.id3);
    r.cross_check("tropical hypersurface of Phi lies in -G(J_M)", id.corollary);
  } else {
    r.data["identities"] = {{"skipped", "more than 5 elements (use --big for up to 7)"}};
  }
  for (const auto& [k, v] : e.get("tropical").items()) r.expect(k, v);
  return r;
}

// --- full report -------------------------------------------------------------

json report_all(const Matroid& m, const json& spec, const RunOptions& o, bool& pass) {
  const Expectations e = expectations_for(m, spec);
  json report;
  report["schema"] = kReportSchema;
  report["tool_version"] = kToolVersion;
  report["seed"] = o.seed;
  report["input"] = matroid_to_json(m);
  report["instance"] = e.instance.empty() ? json(nullptr) : json(e.instance);
  json checks = json::object(), timings = json::object();
  std::vector<std::string> failed;
  std::map<std::string, CheckResult> results;
  const bool small = m.size() <= (o.big ? 7 : 5) || guards_overridden();

  auto run = [&](const std::string& name, const std::function<CheckResult()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = fn();
    auto t1 = std::chrono::steady_clock::now();
    timings[name] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (!r.pass()) failed.push_back(name);
    checks[name] = r.tagged();
    results.emplace(name, std::move(r));
  };
  auto skip = [&](const std::string& name) {
    checks[name] = {{"skipped", "more than " + std::to_string(o.big ? 7 : 5) + " elements" +
                                    (o.big ? "" : " (use --big for up to 7)")}};
  };

  run("axioms", [&] { return check_axioms(m); });
  run("algebra", [&] { return check_algebra(m, e); });
  run("lattice", [&] { return check_lattice(m, e); });
  run("sperner", [&] { return check_sperner(m, "both", o, e); });
  run("lefschetz", [&] { return check_lefschetz(m, std::nullopt, "both", "ann", e); });
  if (small) {
    run("ugb", [&] { return check_ugb(m, o, e); });
    for (const char* ideal : {"jm", "ann", "phi"})
      run(std::string("fan_") + ideal, [&] {
        CheckResult r = check_fan(m, ideal, o, e);
        r.data.erase("fan");
        return r;
      });
  } else {
    skip("ugb");
    for (const char* ideal : {"fan_jm", "fan_ann", "fan_phi"}) skip(ideal);
  }
  run("tropical", [&] { return check_tropical(m, o, e); });

  CheckResult global;
  const auto& alg = results.at("algebra").data;
  const auto& lat = results.at("lattice").data;
  global.cross_check("Q/J_M is Gorenstein iff L(M) is modular geometric",
                     alg["gorenstein_jm"].get<bool>() == (lat["modular"].get<bool>() && lat["geometric"].get<bool>()));
  global.cross_check("lattice level sizes equal the J_M Hilbert vector", lat["levels"] == alg["hilbert_jm"]);
  const auto& sp = results.at("sperner").data;
  global.cross_check("Lefschetz certificate applies exactly when Ann = J_M",
                     sp["lefschetz_certificate"]["applicable"].get<bool>() == alg["ann_equals_jm"].get<bool>());
  if (results.count("fan_jm") && results.count("fan_ann") && alg["ann_equals_jm"].get<bool>())
    global.cross_check("Ann = J_M gives equal fans", results.at("fan_jm").data["rays"] == results.at("fan_ann").data["rays"] &&
                                                         results.at("fan_jm").data["counts"] ==
                                                             results.at("fan_ann").data["counts"]);
  if (!global.pass()) failed.push_back("cross_checks");

  report["checks"] = checks;
  report["cross_checks"] = global.cross_checks;
  if (o.timings) report["timings_ms"] = timings;
  report["failed_checks"] = failed;
  pass = failed.empty();
  report["verdict"] = pass ? "pass" : "fail";
  return report;
}

}  // namespace matgor
