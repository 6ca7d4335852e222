#pragma once

#include <string>
#include <vector>

#include "matgor/lp.hpp"
#include "matgor/types.hpp"

namespace matgor {

using IVec = std::vector<Integer>;

Integer dot(const IVec& a, const IVec& b);
Rational dot(const QVec& a, const IVec& b);
IVec to_ivec(const std::vector<long>& v);
std::string format_ivec(const IVec& v);  // "(1,-2,1)"

/// Polyhedral cone {x : a.x >= 0 for every inequality, e.x = 0 for every equation}
/// with its double description: extreme rays of the pointed part (orthogonal to
/// the lineality space) and a canonical lineality basis.
class RationalCone {
 public:
  RationalCone() = default;
  RationalCone(int ambient, std::vector<IVec> inequalities, std::vector<IVec> equations = {});
  /// Cone generated by rays and a lineality space.
  static RationalCone from_generators(int ambient, const std::vector<IVec>& rays, const std::vector<IVec>& lineality);

  int ambient() const { return n_; }
  int dimension() const { return dim_; }
  const std::vector<IVec>& inequalities() const { return ineq_; }
  const std::vector<IVec>& equations() const { return eq_; }
  /// Primitive extreme rays of the cone intersected with the orthogonal
  /// complement of its lineality space, sorted.
  const std::vector<IVec>& rays() const { return rays_; }
  /// Lineality space basis in reduced echelon form with primitive rows.
  const std::vector<IVec>& lineality() const { return lin_; }
  bool pointed() const { return lin_.empty(); }

  bool contains(const IVec& x) const;
  bool contains(const QVec& x) const;
  bool contains(const RationalCone& other) const;  // generators of other lie in this cone
  bool operator==(const RationalCone& o) const { return rays_ == o.rays_ && lin_ == o.lin_; }
  bool operator<(const RationalCone& o) const;

  /// Sum of the rays: a point in the relative interior.
  IVec interior_point() const;

  struct Facet {
    IVec normal;               // an inequality defining the facet, primitive
    std::vector<int> rays;     // indices into rays() lying on the facet
  };
  std::vector<Facet> facets() const;

  /// The face cut out by the inequalities tight on all of `sub` (a subset of the cone).
  RationalCone smallest_face_containing(const RationalCone& sub) const;
  RationalCone intersect(const RationalCone& o) const;
  RationalCone negated() const;

 private:
  void compute();
  int n_ = 0;
  int dim_ = 0;
  std::vector<IVec> ineq_;
  std::vector<IVec> eq_;
  std::vector<IVec> rays_;
  std::vector<IVec> lin_;
};

/// Canonical lineality basis (RREF, primitive integer rows) of a span.
std::vector<IVec> canonical_span(const std::vector<IVec>& vs);
int rank_of(const std::vector<IVec>& vs);

/// Whether the relative interiors of two full-dimensional cones (within the
/// subspace cut out by both equation sets) meet, decided by exact LP.
bool interiors_intersect(const RationalCone& a, const RationalCone& b);

}  // namespace matgor
