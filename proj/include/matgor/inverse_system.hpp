#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "matgor/linalg.hpp"
#include "matgor/matroid.hpp"
#include "matgor/polynomial.hpp"

namespace matgor {

enum class IdealKind { Ann, JM };

const char* to_string(IdealKind k);

using HilbertVector = std::vector<int>;

/// Graded quotient Q/I for I = Ann F (F multilinear, homogeneous) or I = J_M.
///
/// Every degree carries a basis of square-free monomials x_S. For Ann F the
/// basis is chosen greedily in lexicographic order among monomials whose
/// images d^S F are independent; for J_M it is the class representatives.
class GradedQuotient {
 public:
  static GradedQuotient ann(const SquareFreePoly& f, int nvars);
  static GradedQuotient jm(const Matroid& m);

  IdealKind kind() const { return kind_; }
  int nvars() const { return nvars_; }
  int top_degree() const { return top_; }
  HilbertVector hilbert() const;
  int dim(int d) const;
  const std::vector<Subset>& basis(int d) const { return basis_.at(d); }

  /// Coordinates of the class of x_S in the degree-|S| basis (zero if x_S lies in I).
  std::vector<Rational> coords(Subset s) const;
  /// Matrix of multiplication by L = sum a_e X_e from degree d to d+1.
  QMatrix multiplication(const std::vector<Rational>& a, int d) const;
  /// Multiplication by L^k from degree d to d+k.
  QMatrix power_map(const std::vector<Rational>& a, int d, int k) const;
  /// Pairing matrix A_d x A_{D-d} -> A_D (requires dim_D = 1).
  QMatrix pairing(int d) const;

 private:
  GradedQuotient() = default;
  IdealKind kind_ = IdealKind::Ann;
  int nvars_ = 0;
  int top_ = 0;
  std::vector<std::vector<Subset>> basis_;
  // Ann: F and per-degree echelon data of the images d^S F.
  SquareFreePoly f_;
  std::vector<std::map<Subset, int>> image_index_;  // degree -> monomial -> column
  std::vector<std::shared_ptr<EchelonBasis>> echelon_;
  // JM
  std::shared_ptr<const Matroid> matroid_;
  std::shared_ptr<const EquivClasses> classes_;
};

/// h_d = rank of the catalecticant Q_d -> P_{D-d}.
HilbertVector ann_hilbert(const SquareFreePoly& f, int nvars);
HilbertVector jm_hilbert(const Matroid& m);

struct AnnVsJm {
  bool equal = false;
  HilbertVector hilbert_ann;
  HilbertVector hilbert_jm;
  /// degree -> basis of (Ann Phi)_d modulo (J_M)_d, as square-free polynomials
  /// in the grevlex normal form modulo J_M, in reduced echelon form.
  std::map<int, std::vector<SquareFreePoly>> extra_generators;
};

/// Throws Error if some element of Lambda_M fails to annihilate Phi_M.
AnnVsJm ann_equals_jm(const Matroid& m);

struct PairingRank {
  int degree;
  int rank;
  int dim_low;
  int dim_high;
};

std::vector<PairingRank> poincare_pairing_ranks(const GradedQuotient& q);
bool is_gorenstein(const GradedQuotient& q);

/// The polynomials d^F Phi^(2l), one F per class of level l, have rank m_l.
bool catalecticant_rank_lemma(const Matroid& m, int l);

/// Representative of each level-l class that is least in grevlex order.
Subset grevlex_min(const std::vector<Subset>& members);

}  // namespace matgor
