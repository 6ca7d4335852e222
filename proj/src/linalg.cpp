#include "matgor/linalg.hpp"

#include <algorithm>

namespace matgor {

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
  QMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) p(i, j) += a * o(k, j);
    }
  return p;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// Integer rows obtained by clearing the denominators of each row; scale[r]
// is the factor row r was multiplied by.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m, std::vector<Integer>* scale) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) scale->assign(m.rows(), 1);
  for (int r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (int c = 0; c < m.cols(); ++c) {
      const Integer& d = m(r, c).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      a[r][c] = x.get_num() * (l / x.get_den());
    }
    if (scale) (*scale)[r] = l;
  }
  return a;
}

// Fraction-free elimination to row echelon form; returns the rank and, via
// `last_pivot` and `swaps`, what the determinant needs.
int bareiss(std::vector<std::vector<Integer>>& a, int cols, Integer* last_pivot, int* swaps) {
  const int rows = int(a.size());
  Integer prev = 1;
  int r = 0;
  int nswaps = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++nswaps;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  if (swaps) *swaps = nswaps;
  return r;
}

}  // namespace

int rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  const QMatrix& src = m;
  auto a = m.rows() <= m.cols() ? integer_rows(src, nullptr) : integer_rows(src.transpose(), nullptr);
  int cols = m.rows() <= m.cols() ? m.cols() : m.rows();
  return bareiss(a, cols, nullptr, nullptr);
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> scale;
  auto a = integer_rows(m, &scale);
  Integer last;
  int swaps = 0;
  int r = bareiss(a, n, &last, &swaps);
  if (r < n) return 0;
  Rational det(last);
  if (swaps % 2) det = -det;
  Integer denom = 1;
  for (const auto& s : scale) denom *= s;
  det /= Rational(denom);
  det.canonicalize();
  return det;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  QMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(int(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVec axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void EchelonBasis::reduce(SparseVec& v, SparseVec* combo) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    int col = v[pos].first;
    int row = col < int(pivot_row_.size()) ? pivot_row_[col] : -1;
    if (row < 0) {
      ++pos;
      continue;
    }
    const Row& pr = rows_[row];
    Rational f = -v[pos].second / pr.vec.front().second;
    // Entries before pos are unaffected: pivot rows start at their pivot.
    SparseVec tail(v.begin() + pos, v.end());
    tail = axpy(tail, f, pr.vec);
    v.resize(pos);
    v.insert(v.end(), tail.begin(), tail.end());
    if (combo) *combo = axpy(*combo, f, pr.combo);
  }
}

bool EchelonBasis::add(const SparseVec& v) {
  SparseVec w = v;
  SparseVec combo{{size(), Rational(1)}};
  reduce(w, &combo);
  if (w.empty()) return false;
  // After reduce(), no entry of w sits in a pivot column.
  int col = w.front().first;
  if (col >= int(pivot_row_.size())) pivot_row_.resize(col + 1, -1);
  pivot_row_[col] = int(rows_.size());
  rows_.push_back(Row{std::move(w), std::move(combo)});
  return true;
}

std::vector<int> EchelonBasis::pivot_columns() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.push_back(r.vec.front().first);
  return out;
}

bool EchelonBasis::is_dependent(const SparseVec& v) const {
  SparseVec w = v;
  reduce(w, nullptr);
  return w.empty();
}

std::optional<std::vector<Rational>> EchelonBasis::express(const SparseVec& v) const {
  SparseVec w = v;
  SparseVec combo;
  reduce(w, &combo);
  if (!w.empty()) return std::nullopt;
  // v - sum(combo_i * accepted_i) = 0 with combo accumulated as negated factors.
  std::vector<Rational> out(size());
  for (auto& [i, c] : combo) out[i] = -c;
  return out;
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::vector<Integer> primitive(const std::vector<Integer>& v) {
  Integer g = gcd_of(v);
  std::vector<Integer> out(v);
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return primitive(out);
}

}  // namespace matgor
