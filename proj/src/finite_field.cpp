#include "matgor/finite_field.hpp"

#include <algorithm>
#include <string>

namespace matgor {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db && !a.empty()) {
    int shift = int(a.size()) - 1 - db;
    int f = a.back();
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int deg = int(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Enumerate monic divisors of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly g(d + 1);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = int(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p) : p_(p), k_(1), q_(p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("field extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1L << 20)) throw InputError("field order exceeds 2^20");
  }
  q_ = int(q);
  if (k == 1) {
    modulus_.clear();
    return;
  }
  for (auto& c : modulus_) c = ((c % p) + p) % p;
  if (int(modulus_.size()) != k + 1 || modulus_.back() != 1)
    throw InputError("modulus must be monic of degree " + std::to_string(k));
  if (!is_irreducible(p, modulus_)) throw InputError("modulus is not irreducible over GF(" + std::to_string(p) + ")");
}

FiniteField FiniteField::of_order(int q) {
  if (is_prime(q)) return FiniteField(q);
  switch (q) {
    case 4: return FiniteField(2, 2, {1, 1, 1});
    case 8: return FiniteField(2, 3, {1, 1, 0, 1});
    case 9: return FiniteField(3, 2, {1, 0, 1});
    case 16: return FiniteField(2, 4, {1, 1, 0, 0, 1});
    case 25: return FiniteField(5, 2, {2, 0, 1});
    case 27: return FiniteField(3, 3, {1, 2, 0, 1});
    default: throw InputError("no built-in field of order " + std::to_string(q));
  }
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (k_ == 1) return (a + b) % p_;
  Element out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (k_ == 1) return (p_ - a % p_) % p_;
  Element out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (k_ == 1) return Element((std::uint64_t(a) * b) % p_);
  Poly x(k_), y(k_);
  for (int i = 0; i < k_; ++i) {
    x[i] = int(a % p_);
    y[i] = int(b % p_);
    a /= p_;
    b /= p_;
  }
  Poly prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  Element out = 0, scale = 1;
  for (int i = 0; i < int(r.size()); ++i) {
    out += Element(r[i]) * scale;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error("inverse of zero in a finite field");
  // a^(q-2)
  Element result = 1, base = a;
  long e = q_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GFMatrix::GFMatrix(FiniteField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

GFMatrix GFMatrix::from_columns(FiniteField field, const std::vector<std::vector<FiniteField::Element>>& cols) {
  const int nrows = cols.empty() ? 0 : int(cols.front().size());
  GFMatrix m(std::move(field), nrows, int(cols.size()));
  for (int c = 0; c < int(cols.size()); ++c) {
    if (int(cols[c].size()) != nrows) throw InputError("matrix columns have different lengths");
    for (int r = 0; r < nrows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

void GFMatrix::set(int r, int c, FiniteField::Element v) {
  if (v >= FiniteField::Element(field_.order()))
    throw InputError("matrix entry " + std::to_string(v) + " is not an element of GF(" +
                     std::to_string(field_.order()) + ")");
  data_[std::size_t(r) * cols_ + c] = v;
}

std::vector<FiniteField::Element> GFMatrix::column(int c) const {
  std::vector<FiniteField::Element> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

int gf_rank(const GFMatrix& m, const std::vector<int>& cols) {
  for (int c : cols)
    if (c < 0 || c >= m.cols()) throw InputError("column index " + std::to_string(c) + " out of range");
  const FiniteField& f = m.field();
  // Work on the selected columns as rows (rank is transpose-invariant).
  std::vector<std::vector<FiniteField::Element>> a;
  a.reserve(cols.size());
  for (int c : cols) a.push_back(m.column(c));
  int rank = 0;
  const int width = m.rows();
  for (int col = 0; col < width && rank < int(a.size()); ++col) {
    int p = rank;
    while (p < int(a.size()) && a[p][col] == 0) ++p;
    if (p == int(a.size())) continue;
    std::swap(a[p], a[rank]);
    auto inv = f.inv(a[rank][col]);
    for (int i = rank + 1; i < int(a.size()); ++i) {
      if (a[i][col] == 0) continue;
      auto factor = f.mul(a[i][col], inv);
      for (int j = col; j < width; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

int gf_rank(const GFMatrix& m, Subset cols) { return gf_rank(m, elements(cols)); }

std::vector<std::vector<FiniteField::Element>> projective_points(const FiniteField& field, int n) {
  if (n < 1) throw InputError("projective space needs n >= 1");
  const int q = field.order();
  std::vector<std::vector<FiniteField::Element>> pts;
  // Leading 1 at position `lead`, zeros before it, anything after it.
  for (int lead = 0; lead < n; ++lead) {
    long tail = 1;
    for (int j = lead + 1; j < n; ++j) tail *= q;
    for (long code = 0; code < tail; ++code) {
      std::vector<FiniteField::Element> v(n, 0);
      v[lead] = 1;
      long c = code;
      for (int j = n - 1; j > lead; --j) {
        v[j] = FiniteField::Element(c % q);
        c /= q;
      }
      pts.push_back(std::move(v));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace matgor
