#pragma once

#include <string>
#include <vector>

#include "matgor/inverse_system.hpp"
#include "matgor/matroid.hpp"

namespace matgor {

struct LefschetzStep {
  int degree;     // i
  int dim_low;    // dim A_i
  int dim_high;   // dim A_{D-i}
  int rank;       // rank of xL^{D-2i}
  bool pass;
};

struct HessianValue {
  int degree;                      // d
  std::vector<Subset> basis;       // monomial basis of A_d used
  Rational value;                  // Hess^(d)(a)
};

struct LefschetzReport {
  std::string method;              // "rank" or "hessian"
  IdealKind ideal = IdealKind::Ann;
  std::vector<Rational> point;
  std::vector<LefschetzStep> steps;
  Rational phi_value;              // hessian method: Phi(a)
  std::vector<HessianValue> hessians;
  bool pass = false;
};

/// xL^{D-2i}: A_i -> A_{D-i} for i <= D/2 with L = sum a_e X_e.
LefschetzReport slp_rank_check(const Matroid& m, const std::vector<Rational>& a, IdealKind ideal = IdealKind::Ann);
/// Phi(a) and Hess^(d)(a), d = 1..D/2, on the quotient bases of Q/Ann Phi.
LefschetzReport slp_hessian_check(const Matroid& m, const std::vector<Rational>& a);

/// Whether Hess^(d) of Phi_M vanishes identically: probed at 20 random points,
/// then confirmed symbolically when the basis has at most 8 elements. A zero
/// Hessian rules out every Lefschetz element.
bool hessian_identically_zero(const Matroid& m, int d, unsigned seed = 1);

struct ConjectureTrial {
  std::vector<Rational> point;
  bool pass;
};

struct ConjectureProbe {
  std::vector<ConjectureTrial> trials;
  bool evidence_pass = false;  // some tested point passed
  std::string note;
};

/// Experimental: rank check at all-ones, then at `seeds` random points with
/// integer coordinates in [-99, 99]. Evidence only.
ConjectureProbe slp_probe_conjecture(const Matroid& m, int seeds, unsigned seed = 1);

std::vector<Rational> all_ones(int n);
/// Parses "1,2,-3/4".
std::vector<Rational> parse_point(const std::string& text);

}  // namespace matgor
