#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgor/cone.hpp"
#include "matgor/fan.hpp"
#include "matgor/matroid.hpp"
#include "matgor/polynomial.hpp"

namespace matgor {

enum class TieBreak { Lex, GrLex, GRevLex };

/// Compare by the integer weight first (larger weight is larger), then by
/// the tiebreak order on the variable priority (priority[0] is the largest
/// variable; empty means x1 > x2 > ... > xn).
struct MonomialOrder {
  IVec weight;
  TieBreak tiebreak = TieBreak::GRevLex;
  std::vector<int> priority;

  static MonomialOrder lex(int n, std::vector<int> priority = {});
  static MonomialOrder grevlex(int n, std::vector<int> priority = {});
  static MonomialOrder weighted(IVec w, TieBreak t = TieBreak::GRevLex);

  int compare(const Monomial& a, const Monomial& b) const;  // sign of a - b
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::string describe() const;
};

Monomial leading_monomial(const Poly& f, const MonomialOrder& o);
Rational leading_coefficient(const Poly& f, const MonomialOrder& o);

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division; the first divisor whose leading monomial divides
/// the current leading term is used.
DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& o);
Poly normal_form(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& o);
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& o);

/// Buchberger's criterion: every S-polynomial of a pair reduces to zero.
bool is_groebner(const std::vector<Poly>& gens, const MonomialOrder& o);
/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial (descending).
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& o);

/// The generating set of J_M: intra-class binomials, squares, circuit monomials.
struct LambdaSet {
  std::vector<Poly> lambda1;
  std::vector<Poly> lambda2;
  std::vector<Poly> lambda3;
  std::vector<Poly> all() const;
};
LambdaSet lambda_set(const Matroid& m);

struct ProbeResult {
  bool passed = true;
  int orders_tested = 0;
  std::vector<std::string> failures;
};
/// is_groebner(Lambda_M) for random weights in [-1000,1000]^E (resampled on
/// ties along Lambda_1) and lex/grevlex under every cyclic variable rotation.
ProbeResult universal_gb_probe(const Matroid& m, int samples, unsigned seed);
/// For sampled generic weights: the monomial ideal of the leading terms of
/// Lambda_M equals the leading-term ideal of J_M found by row-reducing the
/// Macaulay matrix in every degree up to r(E)+1 (|E| <= 5).
ProbeResult initial_ideal_oracle_check(const Matroid& m, int samples, unsigned seed);

/// Sum of the terms of maximal w-weight.
Poly initial_form(const Poly& f, const IVec& w);

struct InitialIdeal {
  std::vector<Poly> generators;
  bool monomial = true;
};
/// With `universal` the generators are assumed to be a universal Groebner
/// basis and their initial forms are returned directly (ties are flagged by
/// monomial = false). Otherwise the reduced basis under (w, grevlex) is
/// computed and TiedWeight is thrown when w is not generic.
InitialIdeal initial_ideal_w(const std::vector<Poly>& gens, const IVec& w, bool universal);

/// All monomials of degree d in n variables, in ascending exponent order.
std::vector<Monomial> monomials_of_degree(int n, int d);
/// Leading monomials of I_d for d = 0..max_degree, from the row-reduced
/// Macaulay matrix (homogeneous generators).
std::vector<std::vector<Monomial>> macaulay_leading_monomials(const std::vector<Poly>& gens, const MonomialOrder& o,
                                                              int max_degree);
/// Degree-d monomials divisible by some given monomial, for d = 0..max_degree.
std::vector<std::vector<Monomial>> monomial_ideal_by_degree(const std::vector<Monomial>& gens, int n, int max_degree);

/// Cone {lambda : <lambda, lead - other> >= 0} of a marked reduced basis,
/// within H when `in_h`.
RationalCone groebner_cone(const std::vector<Poly>& reduced_gb, const MonomialOrder& o, bool in_h = true);
std::vector<IVec> groebner_cone_inequalities(const std::vector<Poly>& reduced_gb, const MonomialOrder& o);

/// Homogeneous ideal containing every x_e^2, given by its square-free part in
/// each degree up to `top`; all monomials of degree top+1 lie in it.
class SquareFreeIdeal {
 public:
  static SquareFreeIdeal ann(const SquareFreePoly& f, int nvars);
  static SquareFreeIdeal jm(const Matroid& m);

  int nvars() const { return n_; }
  int top() const { return top_; }
  std::vector<Poly> generators() const;
  /// Reduced Groebner basis by row reduction of each graded piece.
  std::vector<Poly> reduced_gb(const MonomialOrder& o) const;

 private:
  int n_ = 0;
  int top_ = 0;
  std::vector<std::vector<Subset>> monos_;        // degree -> square-free monomials (lex)
  std::vector<std::vector<QVec>> span_;            // degree -> spanning vectors over monos_
};

/// Oracles for the fan traversal (weights compared with a grevlex tiebreak).
ConeOracle square_free_oracle(const SquareFreeIdeal& ideal);
ConeOracle buchberger_oracle(const std::vector<Poly>& gens, int nvars);
ConeOracle principal_oracle(const Poly& f);

/// Groebner fan of a homogeneous ideal by traversal (at most 5 variables
/// unless guards are overridden).
Fan groebner_fan(const std::vector<Poly>& gens, int nvars, const TraversalOptions& opts = {});

}  // namespace matgor
