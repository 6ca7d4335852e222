#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgor/cone.hpp"
#include "matgor/fan.hpp"
#include "matgor/matroid.hpp"
#include "matgor/polynomial.hpp"

namespace matgor {

/// P_M = conv({0} u {v_F}) and its face Delta_M = conv{v_B}.
struct MatroidPolytope {
  int n = 0;
  int rank = 0;
  std::vector<IVec> vertices;        // 0/1 incidence vectors of independent sets (0 included)
  std::vector<IVec> base_vertices;   // bases, lexicographic
  /// Delta^0_M vertices u_B = v_B - r/n * (1,...,1), scaled by n.
  std::vector<IVec> centered_base_vertices_times_n() const;
  /// "nOFF" text listing the vertices of Delta_M (no face list).
  std::string base_off() const;
};

MatroidPolytope matroid_polytope(const Matroid& m);

struct EdmondsCheck {
  bool vertices_satisfy = false;   // every v_F meets all rank inequalities
  bool points_in_hull = false;     // every 0/1 point meeting them lies in P_M (exact LP)
  bool vertex_enumeration = false; // the inequality system has exactly the v_F as vertices
  bool pass() const { return vertices_satisfy && points_in_hull && vertex_enumeration; }
};

/// Rank-inequality description versus vertices (|E| <= 6).
EdmondsCheck edmonds_check(const Matroid& m);

struct TropValue {
  Rational value;
  std::vector<Subset> argmax;
  bool nonsmooth() const { return argmax.size() >= 2; }
};

TropValue trop(const SquareFreePoly& f, const std::vector<Rational>& y);
bool trop_nonsmooth(const SquareFreePoly& f, const std::vector<Rational>& y);

struct SupportFunctionCheck {
  int trials = 0;
  int failures = 0;
  bool centered = false;        // every u_B lies in H
  bool self_value = false;      // <u_B, u_B> = trop(u_B) = r - r^2/n
  bool pass() const { return failures == 0 && centered && self_value; }
};

/// max_B <u_B, y> = trop(Phi_M)(y) for random rational y in H.
SupportFunctionCheck support_function_check(const Matroid& m, int trials, unsigned seed);

struct Wall {
  int level = 0;
  Subset flat = 0;
  Subset first = 0, second = 0;
  RationalCone cone;        // W_{F,F'} inside H
  int duplicate_of = -1;    // earlier wall with the same cone
  bool edge() const;        // dimension #E - 2
};

/// W_{F,F'} for every unordered pair in every class, in class order.
std::vector<Wall> walls(const Matroid& m);

/// G(J_M) in H by flipping between selections of a unique minimal member per
/// class (|E| <= 7; warns on stderr above 5).
Fan jm_fan(const Matroid& m, const TraversalOptions& opts = {});
/// G(Ann Phi_M) in H (|E| <= 7).
Fan ann_fan(const Matroid& m, const TraversalOptions& opts = {});
/// G(J_M) from reduced Groebner bases of the graded pieces; cross-check for jm_fan.
Fan jm_groebner_fan(const Matroid& m, const TraversalOptions& opts = {});
/// G((f)) in H: the normal fan of the Newton polytope.
Fan principal_fan(const SquareFreePoly& f, int n, const TraversalOptions& opts = {});
Fan phi_fan(const Matroid& m, const TraversalOptions& opts = {});

/// Codimension-one cones of the normal fan of f inside H.
std::vector<RationalCone> tropical_hypersurface(const SquareFreePoly& f, int n);

struct HypersurfIdentities {
  bool id1 = false;
  bool id2 = false;
  bool id3 = false;
  bool corollary = false;          // V_trop(Phi) is covered by the cones -sigma
  bool corollary_literal = false;  // each cone of V_trop(Phi) is itself some -sigma
  std::vector<std::string> failures;
  bool pass() const { return id1 && id2 && id3 && corollary; }
};

HypersurfIdentities hypersurf_identities(const Matroid& m, const TraversalOptions& opts = {});

/// Whether the cones `pieces` (all of the same dimension as `c` and contained
/// in it, forming part of a fan) cover `c`.
bool covered_by(const RationalCone& c, const std::vector<RationalCone>& pieces);

}  // namespace matgor
