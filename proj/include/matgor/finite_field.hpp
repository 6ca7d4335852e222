#pragma once

#include <cstdint>
#include <vector>

#include "matgor/types.hpp"

namespace matgor {

/// GF(p^k). Elements are integers in [0, p^k) holding the base-p digits of
/// the representing polynomial (digit i is the coefficient of t^i).
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Prime field GF(p).
  explicit FiniteField(int p);
  /// GF(p^k) modulo `modulus` (k+1 coefficients, lowest degree first, monic).
  FiniteField(int p, int k, std::vector<int> modulus);

  /// GF(q) with a built-in modulus for q in {p, 4, 8, 9, 16, 25, 27}.
  static FiniteField of_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  int p_ = 2;
  int k_ = 1;
  int q_ = 2;
  std::vector<int> modulus_;
};

bool is_prime(int n);
/// Irreducibility of a monic polynomial over GF(p) by trial division with
/// every monic polynomial of degree <= deg/2.
bool is_irreducible(int p, const std::vector<int>& poly);

/// Row-major matrix over a finite field.
class GFMatrix {
 public:
  GFMatrix(FiniteField field, int rows, int cols);
  /// Builds a matrix from column vectors.
  static GFMatrix from_columns(FiniteField field, const std::vector<std::vector<FiniteField::Element>>& cols);

  const FiniteField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FiniteField::Element at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  void set(int r, int c, FiniteField::Element v);
  std::vector<FiniteField::Element> column(int c) const;

 private:
  FiniteField field_;
  int rows_;
  int cols_;
  std::vector<FiniteField::Element> data_;
};

/// Rank of the selected columns by Gaussian elimination over the field.
int gf_rank(const GFMatrix& m, const std::vector<int>& cols);
int gf_rank(const GFMatrix& m, Subset cols);

/// Representatives of the points of P^{n-1}(GF(q)): nonzero vectors with
/// first nonzero coordinate 1, in lexicographic order of their coordinates.
std::vector<std::vector<FiniteField::Element>> projective_points(const FiniteField& field, int n);

}  // namespace matgor
