#pragma once

#include <optional>
#include <vector>

#include "matgor/types.hpp"

namespace matgor {

using QVec = std::vector<Rational>;

/// Constraint system over Q^n: rows a.x >= b and a.x = b; variables flagged
/// in `nonnegative` are additionally >= 0, the others are free.
struct LinearSystem {
  int n = 0;
  std::vector<QVec> ge_rows;
  QVec ge_rhs;
  std::vector<QVec> eq_rows;
  QVec eq_rhs;
  std::vector<bool> nonnegative;  // empty means all free

  void add_ge(QVec a, Rational b);
  void add_eq(QVec a, Rational b);
};

/// A feasible point found by an exact two-phase simplex (Bland's rule), or
/// nullopt if the system is infeasible.
std::optional<QVec> find_feasible_point(const LinearSystem& sys);

/// Feasibility of {x >= 0 : A x = b}; returns a basic feasible solution.
std::optional<QVec> feasible_standard_form(const std::vector<QVec>& a, const QVec& b, int nvars);

/// Whether p is a convex combination of the given points.
bool in_convex_hull(const std::vector<QVec>& points, const QVec& p);

}  // namespace matgor
