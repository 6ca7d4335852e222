#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matgor/cone.hpp"

namespace matgor {

/// Maximal cones of a complete fan restricted to H = {sum x = 0}, with a
/// shared ray list.
struct Fan {
  int ambient = 0;
  std::vector<IVec> rays;                    // sorted, primitive
  std::vector<RationalCone> cones;           // maximal cones, sorted
  std::vector<std::vector<int>> cone_rays;   // ray indices per cone
  std::vector<std::string> keys;             // oracle key per cone

  int n_rays() const { return int(rays.size()); }
  int n_maximal() const { return int(cones.size()); }
  /// Codimension-one cones (facets of maximal cones), deduplicated.
  std::vector<RationalCone> codim_one() const;
  nlohmann::json to_json() const;
};

/// What an oracle reports for a generic weight: a key naming the cone
/// (e.g. the initial ideal) and inequalities a.x >= 0 cutting it out.
struct ConeCertificate {
  std::string key;
  std::vector<IVec> inequalities;
};

/// Returns nullopt when w is not generic (lies on a wall).
using ConeOracle = std::function<std::optional<ConeCertificate>(const IVec& w)>;

struct TraversalOptions {
  int max_cones = 5000;
  unsigned seed = 1;
};

/// Facet-flipping traversal of the fan in H, starting from a random generic
/// weight. Every facet is crossed at an interior point p by the weight
/// 2^k p - a (a the facet normal) for the least k >= 20 giving a generic
/// weight whose cone contains p.
Fan traverse_fan(int n, const ConeOracle& oracle, const TraversalOptions& opts = {});

/// Assembles a fan from maximal cones (sorting cones and collecting rays).
Fan make_fan(int n, std::vector<RationalCone> cones, std::vector<std::string> keys = {});

/// Every facet of every maximal cone lies in exactly one other maximal cone.
std::optional<std::string> fan_completeness_violation(const Fan& f);
/// Pairwise: interiors are disjoint and intersections are common faces.
std::optional<std::string> fan_face_violation(const Fan& f);
/// Every maximal cone of `fine` lies inside some maximal cone of `coarse`.
bool refines(const Fan& fine, const Fan& coarse);

/// Hyperplane H = {sum x = 0} as an equation.
IVec h_equation(int n);
/// n*v - (sum v)*(1,...,1): projection of v to H up to the positive factor n.
IVec project_to_h(const IVec& v);

}  // namespace matgor
