#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "matgor/finite_field.hpp"
#include "matgor/types.hpp"

namespace matgor {

/// A matroid on an ordered ground set with its independent sets stored explicitly.
///
/// Element i of the ground set is bit i of a Subset. The family of independent
/// sets is kept sorted by cardinality and then lexicographically, which fixes
/// every enumeration order downstream (class representatives, quotient bases,
/// report output).
class Matroid {
 public:
  /// Takes ownership of an independent-set family. With `validate` the axioms
  /// (M1)-(M3) are checked exhaustively and AxiomViolation is thrown on failure.
  Matroid(std::vector<std::string> labels, std::vector<Subset> independents, bool validate = true);

  int size() const { return int(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset ground() const { return full_set(size()); }
  int rank() const { return rank_; }

  bool is_independent(Subset s) const { return index_.count(s) != 0; }
  int rank(Subset s) const;
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }

  const std::vector<Subset>& independents() const { return independents_; }
  /// F_i: independent sets with i elements.
  std::vector<Subset> level(int i) const;
  std::vector<Subset> bases() const { return level(rank_); }
  /// Minimal dependent sets, sorted by size then lexicographically.
  std::vector<Subset> circuits() const;
  Subset loops() const;

  /// First violated axiom among (M1)-(M3), if any.
  std::optional<std::string> axiom_violation() const;

  std::string describe(Subset s) const;  // "{1,2,4}" using labels

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> independents_;
  std::unordered_set<Subset> index_;
  int rank_ = 0;
};

std::vector<std::string> numeric_labels(int n);

/// F = all subsets of the given bases. Throws BasisExchangeViolation when the
/// bases fail the exchange axiom.
Matroid from_bases(std::vector<std::string> labels, const std::vector<Subset>& bases);
Matroid from_gf_matrix(const GFMatrix& matrix, std::vector<std::string> labels = {});
/// M(q,n): the points of P^{n-1}(GF(q)) with linear independence.
Matroid projective_geometry(int q, int n);
/// M^{(i)}: the independent sets of size at most i.
Matroid truncation(const Matroid& m, int i);
Matroid boolean_matroid(int n);
Matroid uniform_matroid(int r, int n);
/// Rank-3 matroid of a finite projective plane given by its lines (point
/// labels are integers). Throws AxiomViolation when the incidence structure
/// is not a projective plane of order >= 2.
Matroid projective_plane(const std::vector<std::vector<int>>& lines);
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Brute-force isomorphism test by relabeling (at most 8 elements).
bool isomorphic(const Matroid& a, const Matroid& b);

/// One class of independent sets under S ~ T <=> closure(S) = closure(T).
struct EquivClass {
  Subset flat = 0;                 // common closure
  int level = 0;                   // cardinality of the members = rank of the flat
  std::vector<Subset> members;     // sorted lexicographically
  Subset representative() const { return members.front(); }
};

struct EquivClasses {
  /// levels[l] lists the classes of F_l ordered by representative.
  std::vector<std::vector<EquivClass>> levels;

  std::vector<int> counts() const;           // (m_0, ..., m_r)
  std::vector<Subset> flats(int l) const;    // Omega(l), ordered like levels[l]
  /// Index of the class containing an independent set within its level, or -1.
  int class_index(Subset independent_set) const;

 private:
  friend EquivClasses equivalence_classes(const Matroid& m);
  std::vector<std::pair<Subset, int>> lookup_;  // sorted (member, class index)
};

EquivClasses equivalence_classes(const Matroid& m);

/// For every pair S,T of independent sets: closure(S) = closure(T) iff
/// {U in F : U cap S = {}, U cup S in F} = {U in F : U cap T = {}, U cup T in F}.
/// Returns a description of the first counterexample, if any.
std::optional<std::string> equivalence_lemma_violation(const Matroid& m);

}  // namespace matgor
