#include "matgor/lp.hpp"

namespace matgor {

void LinearSystem::add_ge(QVec a, Rational b) {
  ge_rows.push_back(std::move(a));
  ge_rhs.push_back(std::move(b));
}

void LinearSystem::add_eq(QVec a, Rational b) {
  eq_rows.push_back(std::move(a));
  eq_rhs.push_back(std::move(b));
}

std::optional<QVec> feasible_standard_form(const std::vector<QVec>& a, const QVec& b, int nvars) {
  const int m = int(a.size());
  const int width = nvars + m + 1;  // structural, artificial, right-hand side
  const int rhs = width - 1;
  std::vector<QVec> t(m + 1, QVec(width));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (int j = 0; j < nvars; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    t[i][nvars + i] = 1;
    basis[i] = nvars + i;
  }
  // Cost row: reduced costs of the phase-one objective (sum of artificials).
  QVec& cost = t[m];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < nvars + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[rhs]) != 0) return std::nullopt;
  QVec x(nvars);
  for (int i = 0; i < m; ++i)
    if (basis[i] < nvars) x[basis[i]] = t[i][rhs];
  return x;
}

std::optional<QVec> find_feasible_point(const LinearSystem& sys) {
  const int n = sys.n;
  auto nonneg = [&](int j) { return !sys.nonnegative.empty() && sys.nonnegative[j]; };
  // Column layout: for each variable one column (nonnegative) or two (x+ - x-),
  // then one surplus column per >= row.
  std::vector<int> pos(n), neg(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    pos[j] = cols++;
    if (!nonneg(j)) neg[j] = cols++;
  }
  const int first_surplus = cols;
  cols += int(sys.ge_rows.size());
  std::vector<QVec> a;
  QVec b;
  auto expand = [&](const QVec& row) {
    QVec r(cols);
    for (int j = 0; j < n; ++j) {
      r[pos[j]] = row[j];
      if (neg[j] >= 0) r[neg[j]] = -row[j];
    }
    return r;
  };
  for (std::size_t i = 0; i < sys.ge_rows.size(); ++i) {
    QVec r = expand(sys.ge_rows[i]);
    r[first_surplus + i] = -1;
    a.push_back(std::move(r));
    b.push_back(sys.ge_rhs[i]);
  }
  for (std::size_t i = 0; i < sys.eq_rows.size(); ++i) {
    a.push_back(expand(sys.eq_rows[i]));
    b.push_back(sys.eq_rhs[i]);
  }
  auto y = feasible_standard_form(a, b, cols);
  if (!y) return std::nullopt;
  QVec x(n);
  for (int j = 0; j < n; ++j) {
    x[j] = (*y)[pos[j]];
    if (neg[j] >= 0) x[j] -= (*y)[neg[j]];
  }
  return x;
}

bool in_convex_hull(const std::vector<QVec>& points, const QVec& p) {
  if (points.empty()) return false;
  const int k = int(points.size());
  const int d = int(p.size());
  std::vector<QVec> a(d + 1, QVec(k));
  QVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = points[j][i];
    b[i] = p[i];
  }
  for (int j = 0; j < k; ++j) a[d][j] = 1;
  b[d] = 1;
  return feasible_standard_form(a, b, k).has_value();
}

}  // namespace matgor
