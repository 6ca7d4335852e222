#include "matgor/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace matgor {

IVec h_equation(int n) { return IVec(n, 1); }

IVec project_to_h(const IVec& v) {
  const long n = long(v.size());
  Integer s = 0;
  for (const auto& x : v) s += x;
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = n * v[i] - s;
  return out;
}

Fan make_fan(int n, std::vector<RationalCone> cones, std::vector<std::string> keys) {
  Fan f;
  f.ambient = n;
  if (keys.size() != cones.size()) keys.assign(cones.size(), "");
  std::vector<int> order(cones.size());
  for (int i = 0; i < int(order.size()); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return cones[a] < cones[b]; });
  std::set<IVec> rays;
  for (const auto& c : cones) rays.insert(c.rays().begin(), c.rays().end());
  f.rays.assign(rays.begin(), rays.end());
  for (int i : order) {
    std::vector<int> idx;
    for (const auto& r : cones[i].rays())
      idx.push_back(int(std::lower_bound(f.rays.begin(), f.rays.end(), r) - f.rays.begin()));
    f.cones.push_back(std::move(cones[i]));
    f.cone_rays.push_back(std::move(idx));
    f.keys.push_back(std::move(keys[i]));
  }
  return f;
}

std::vector<RationalCone> Fan::codim_one() const {
  std::set<RationalCone> out;
  for (const auto& c : cones)
    for (const auto& facet : c.facets()) {
      std::vector<IVec> gens;
      for (int i : facet.rays) gens.push_back(c.rays()[i]);
      out.insert(RationalCone::from_generators(ambient, gens, c.lineality()));
    }
  return {out.begin(), out.end()};
}

nlohmann::json Fan::to_json() const {
  nlohmann::json j;
  j["ambient"] = "H";
  auto rs = nlohmann::json::array();
  for (const auto& r : rays) {
    auto row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(x.get_si());
    rs.push_back(row);
  }
  j["rays"] = rs;
  j["maximal_cones"] = cone_rays;
  j["counts"] = {{"rays", n_rays()}, {"maximal", n_maximal()}};
  return j;
}

Fan traverse_fan(int n, const ConeOracle& oracle, const TraversalOptions& opts) {
  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::optional<IVec> start;
  for (int attempt = 0; attempt < 200 && !start; ++attempt) {
    IVec w(n);
    for (auto& x : w) x = dist(rng);
    w = project_to_h(w);
    if (oracle(w)) start = w;
  }
  if (!start) throw Error("fan traversal found no generic starting weight");

  const IVec h = h_equation(n);
  std::map<std::string, int> seen;
  std::vector<RationalCone> cones;
  std::vector<std::string> keys;
  std::deque<ConeCertificate> queue;
  auto enqueue = [&](ConeCertificate cert) {
    if (seen.count(cert.key)) return;
    check_guard(int(seen.size()) < opts.max_cones,
                "fan traversal exceeded " + std::to_string(opts.max_cones) + " maximal cones");
    seen.emplace(cert.key, int(seen.size()));
    queue.push_back(std::move(cert));
  };
  enqueue(*oracle(*start));
  while (!queue.empty()) {
    ConeCertificate cert = std::move(queue.front());
    queue.pop_front();
    RationalCone cone(n, cert.inequalities, {h});
    if (cone.dimension() != n - 1)
      throw Error("oracle cone for " + cert.key + " is not full-dimensional in H");
    for (const auto& facet : cone.facets()) {
      IVec p(n, 0);
      for (int i : facet.rays)
        for (int j = 0; j < n; ++j) p[j] += cone.rays()[i][j];
      IVec a = project_to_h(facet.normal);
      bool crossed = false;
      for (int k = 20; k <= 400 && !crossed; k += 4) {
        Integer scale = 1;
        scale <<= k;
        IVec w(n);
        for (int j = 0; j < n; ++j) w[j] = scale * p[j] - a[j];
        auto next = oracle(w);
        if (!next) continue;
        bool ok = true;
        for (const auto& q : next->inequalities)
          if (sgn(dot(q, p)) < 0) ok = false;
        if (!ok) continue;
        crossed = true;
        enqueue(std::move(*next));
      }
      if (!crossed) throw Error("could not cross a facet of cone " + cert.key);
    }
    cones.push_back(std::move(cone));
    keys.push_back(std::move(cert.key));
  }
  return make_fan(n, std::move(cones), std::move(keys));
}

std::optional<std::string> fan_completeness_violation(const Fan& f) {
  std::map<std::pair<std::vector<int>, std::vector<IVec>>, int> count;
  for (int c = 0; c < f.n_maximal(); ++c) {
    const auto& cone = f.cones[c];
    if (cone.dimension() != f.ambient - 1) return "cone " + std::to_string(c) + " is not full-dimensional in H";
    for (const auto& facet : cone.facets()) {
      std::vector<int> idx;
      for (int i : facet.rays) idx.push_back(f.cone_rays[c][i]);
      std::sort(idx.begin(), idx.end());
      ++count[{idx, cone.lineality()}];
    }
  }
  for (const auto& [facet, k] : count)
    if (k != 2) return "a facet is shared by " + std::to_string(k) + " maximal cones";
  return std::nullopt;
}

std::optional<std::string> fan_face_violation(const Fan& f) {
  for (int i = 0; i < f.n_maximal(); ++i)
    for (int j = i + 1; j < f.n_maximal(); ++j) {
      const auto& a = f.cones[i];
      const auto& b = f.cones[j];
      if (interiors_intersect(a, b))
        return "cones " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
      RationalCone meet = a.intersect(b);
      if (!(a.smallest_face_containing(meet) == meet) || !(b.smallest_face_containing(meet) == meet))
        return "cones " + std::to_string(i) + " and " + std::to_string(j) + " meet outside a common face";
    }
  return std::nullopt;
}

bool refines(const Fan& fine, const Fan& coarse) {
  for (const auto& c : fine.cones) {
    bool inside = false;
    for (const auto& d : coarse.cones)
      if (d.contains(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

}  // namespace matgor
