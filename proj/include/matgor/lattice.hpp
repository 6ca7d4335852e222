#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matgor/linalg.hpp"
#include "matgor/matroid.hpp"

namespace matgor {

/// Finite ranked poset given by its cover relation.
struct RankedPoset {
  std::vector<int> rank;
  std::vector<std::vector<int>> up;  // up[i]: elements covering i

  int size() const { return int(rank.size()); }
  std::vector<std::vector<int>> levels() const;
  std::vector<int> level_sizes() const;
  /// reach[i][j] iff i < j, by repeated boolean squaring.
  std::vector<std::vector<bool>> strict_order() const;

  static RankedPoset chain(int length);  // length+1 elements
};

/// L(M): flats ordered by inclusion.
struct FlatLattice : RankedPoset {
  std::vector<Subset> flats;  // sorted by rank, then lexicographically
  std::shared_ptr<const Matroid> matroid;

  int index_of(Subset flat) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
};

FlatLattice build_lattice(const Matroid& m);

struct LatticePredicates {
  bool graded = false;
  bool atomic = false;
  bool semimodular = false;
  bool modular = false;
  int n_atoms = 0;
  int n_coatoms = 0;
  /// For geometric lattices: modular iff n_atoms == n_coatoms.
  bool greene_consistent = true;
  std::optional<std::pair<Subset, Subset>> non_modular_pair;
};

LatticePredicates lattice_predicates(const FlatLattice& l);

struct Antichain {
  int size = 0;
  std::vector<int> witness;           // element indices
  int min_chain_cover = 0;
  std::vector<std::vector<int>> chains;
};

/// Maximum antichain by Dilworth duality (Hopcroft-Karp on the strict order).
Antichain max_antichain(const RankedPoset& p);

struct SpernerResult {
  bool sperner = false;
  int max_level = 0;
  int max_antichain = 0;
};
SpernerResult sperner_check(const RankedPoset& p);

struct RaisingMap {
  int degree;            // A_degree -> A_{degree+1}
  QMatrix matrix;
  int rank;
  bool full_rank;        // rank = min(rows, cols)
  bool support_ok;       // nonzero entries only at comparable flats
};

struct RaisingMapsResult {
  std::vector<Rational> coefficients;
  std::vector<RaisingMap> maps;
  bool certificate = false;  // all full rank with correct support
  int attempts = 1;
};

/// Multiplication by L = sum a_e X_e between consecutive degrees of Q/J_M in
/// the flat-indexed class basis. Requires Ann Phi_M = J_M (DimensionMismatch
/// otherwise). Without explicit coefficients the all-ones vector is tried
/// first, then up to 5 seeded random vectors.
RaisingMapsResult order_raising_maps(const Matroid& m, std::optional<std::vector<Rational>> coeffs = std::nullopt,
                                     unsigned seed = 1);

}  // namespace matgor
