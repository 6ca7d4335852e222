#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matgor/types.hpp"

namespace matgor {

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;

  static QMatrix identity(int n);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
int rank(const QMatrix& m);

/// Determinant of a square matrix by Bareiss elimination over the integers.
Rational determinant(const QMatrix& m);

/// Reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMatrix& m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// normalized so the free coordinate is 1 (RREF basis).
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// Sparse vector: (index, value) pairs with strictly increasing indices and nonzero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Incremental echelon basis of sparse vectors. Vectors are added in order;
/// add() reports whether a vector was independent of the previous ones, and
/// express() writes a vector in terms of the accepted ones.
class EchelonBasis {
 public:
  bool add(const SparseVec& v);
  std::optional<std::vector<Rational>> express(const SparseVec& v) const;
  int size() const { return int(rows_.size()); }
  bool is_dependent(const SparseVec& v) const;
  /// Pivot column of each accepted vector, in insertion order.
  std::vector<int> pivot_columns() const;

 private:
  struct Row {
    SparseVec vec;                 // leading index is the pivot
    SparseVec combo;               // combination of accepted vectors giving vec
  };
  // Reduces v in place; combo accumulates the subtracted combination.
  void reduce(SparseVec& v, SparseVec* combo) const;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;     // indexed by column, -1 if absent (grown on demand)
};

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y);  // x + a*y

Integer gcd_of(const std::vector<Integer>& v);
/// Scales a rational vector to a primitive integer vector with the same direction.
std::vector<Integer> primitive(const std::vector<Rational>& v);
std::vector<Integer> primitive(const std::vector<Integer>& v);

}  // namespace matgor
