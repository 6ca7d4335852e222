#include "matgor/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "matgor/linalg.hpp"

namespace matgor {

// --- Monomial -------------------------------------------------------------

Monomial Monomial::from_subset(Subset s, int nvars) {
  Monomial m(nvars);
  for (int e : elements(s)) {
    if (e >= nvars) throw Error("monomial variable outside the ring");
    m.e_[e] = 1;
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::is_square_free() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x <= 1; });
}

Subset Monomial::support() const {
  Subset s = 0;
  for (int i = 0; i < nvars(); ++i)
    if (e_[i]) s |= singleton(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m(*this);
  for (int i = 0; i < nvars(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m(*this);
  for (int i = 0; i < nvars(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m(*this);
  for (int i = 0; i < nvars(); ++i) m.e_[i] = std::max(e_[i], o.e_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

// --- SquareFreePoly -------------------------------------------------------

SquareFreePoly SquareFreePoly::monomial(Subset s, Rational c) {
  SquareFreePoly f;
  f.add_term(s, c);
  return f;
}

Rational SquareFreePoly::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SquareFreePoly::degree() const {
  int d = -1;
  for (const auto& [s, c] : terms_) d = std::max(d, popcount(s));
  return d;
}

bool SquareFreePoly::is_homogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return popcount(t.first) == d; });
}

Subset SquareFreePoly::support() const {
  Subset s = 0;
  for (const auto& [m, c] : terms_) s |= m;
  return s;
}

void SquareFreePoly::add_term(Subset s, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, fresh] = terms_.emplace(s, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SquareFreePoly SquareFreePoly::operator+(const SquareFreePoly& o) const {
  SquareFreePoly r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

SquareFreePoly SquareFreePoly::operator-(const SquareFreePoly& o) const {
  SquareFreePoly r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

SquareFreePoly SquareFreePoly::operator*(const Rational& c) const {
  SquareFreePoly r;
  for (const auto& [s, x] : terms_) r.add_term(s, x * c);
  return r;
}

SquareFreePoly SquareFreePoly::mul_disjoint(const SquareFreePoly& o) const {
  if (support() & o.support()) throw Error("mul_disjoint: polynomials share a variable");
  SquareFreePoly r;
  for (const auto& [s, a] : terms_)
    for (const auto& [t, b] : o.terms_) r.add_term(s | t, a * b);
  return r;
}

SquareFreePoly SquareFreePoly::shifted(int offset) const {
  SquareFreePoly r;
  for (const auto& [s, c] : terms_) {
    if (offset + (s ? 64 - std::countl_zero(s) : 0) > 64) throw Error("shifted: variable index overflow");
    r.add_term(s << offset, c);
  }
  return r;
}

Rational SquareFreePoly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [s, c] : terms_) {
    Rational t = c;
    for (int e : elements(s)) {
      if (e >= int(point.size())) throw InputError("evaluation point has too few coordinates");
      t *= point[e];
    }
    total += t;
  }
  return total;
}

// --- Poly -----------------------------------------------------------------

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Monomial m(nvars);
  m[i] = 1;
  return term(m);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::from_square_free(const SquareFreePoly& f, int nvars) {
  Poly p(nvars);
  for (const auto& [s, c] : f.terms()) p.add_term(Monomial::from_subset(s, nvars), c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.nvars() != nvars_) throw Error("monomial has the wrong number of variables");
  Rational v = c;
  v.canonicalize();
  auto [it, fresh] = terms_.emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  return r += o;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  return r -= o;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) r.add_term(a * b, x * y);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Poly Poly::operator*(const Monomial& mono) const {
  Poly r(nvars_);
  for (const auto& [m, x] : terms_) r.terms_.emplace(m * mono, x);
  return r;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw Error("division by the zero polynomial");
  // Lex order with x1 > x2 > ...: the map's last entry leads.
  const auto& [dm, dc] = *d.terms_.rbegin();
  Poly rem(*this);
  Poly quo(nvars_);
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms_.rbegin();
    if (!dm.divides(rm)) throw Error("exact_div: divisor does not divide");
    Monomial qm = rm / dm;
    Rational qc = rc / dc;
    quo.add_term(qm, qc);
    rem -= d * qm * qc;
  }
  return quo;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (int(point.size()) < nvars_) throw InputError("evaluation point has too few coordinates");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

// --- text form ------------------------------------------------------------

namespace {

std::vector<int> index_sequence(const Monomial& m) {
  std::vector<int> seq;
  for (int i = 0; i < m.nvars(); ++i)
    for (int k = 0; k < m[i]; ++k) seq.push_back(i);
  return seq;
}

std::string format_terms(std::vector<std::pair<std::vector<int>, Rational>> terms) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [seq, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += mag.get_str();
    if (!seq.empty()) {
      out += " * ";
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += "*";
        out += "x" + std::to_string(seq[i] + 1);
      }
    }
    first = false;
  }
  return out;
}

// Parses into (variable index sequence, coefficient) terms.
class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  std::vector<std::pair<std::vector<int>, Rational>> parse() {
    std::vector<std::pair<std::vector<int>, Rational>> out;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto t = parse_term();
      t.second *= sign;
      out.push_back(std::move(t));
      first = false;
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  std::pair<std::vector<int>, Rational> parse_term() {
    Rational coeff = 1;
    std::vector<int> vars;
    while (true) {
      skip();
      if (peek() == 'x') {
        ++pos_;
        int idx = std::stoi(digits());
        if (idx < 1) fail("variable indices start at 1");
        int power = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          power = std::stoi(digits());
        }
        for (int k = 0; k < power; ++k) vars.push_back(idx - 1);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer num(digits());
        Integer den = 1;
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          den = Integer(digits());
          if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        coeff *= r;
      } else {
        fail("expected a coefficient or a variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    std::sort(vars.begin(), vars.end());
    return {vars, coeff};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const SquareFreePoly& f) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [s, c] : f.terms()) terms.emplace_back(elements(s), c);
  return format_terms(std::move(terms));
}

std::string to_string(const Poly& f) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(index_sequence(m), c);
  return format_terms(std::move(terms));
}

SquareFreePoly parse_square_free(const std::string& text) {
  SquareFreePoly f;
  if (text == "0") return f;
  for (const auto& [vars, c] : PolyParser(text).parse()) {
    Subset s = 0;
    for (int v : vars) {
      if (v >= 64) throw InputError("variable index too large");
      if (contains(s, v)) throw InputError("term is not square-free");
      s |= singleton(v);
    }
    f.add_term(s, c);
  }
  return f;
}

Poly parse_poly(const std::string& text, int nvars) {
  Poly p(nvars);
  if (text == "0") return p;
  for (const auto& [vars, c] : PolyParser(text).parse()) {
    Monomial m(nvars);
    for (int v : vars) {
      if (v >= nvars) throw InputError("variable x" + std::to_string(v + 1) + " outside the ring");
      ++m[v];
    }
    p.add_term(m, c);
  }
  return p;
}

// --- matroid polynomials --------------------------------------------------

SquareFreePoly phi(const Matroid& m) { return phi_level(m, m.rank()); }

SquareFreePoly phi_level(const Matroid& m, int i) {
  SquareFreePoly f;
  for (Subset s : m.level(i)) f.add_term(s, 1);
  return f;
}

SquareFreePoly f_tau(const EquivClass& cls) {
  SquareFreePoly f;
  for (Subset s : cls.members) f.add_term(s, 1);
  return f;
}

SquareFreePoly apply_diff(Subset s, const SquareFreePoly& f) {
  SquareFreePoly r;
  for (const auto& [b, c] : f.terms())
    if (is_subset(s, b)) r.add_term(b & ~s, c);
  return r;
}

SquareFreePoly apply_diff(const DiffPoly& op, const SquareFreePoly& f) {
  SquareFreePoly r;
  for (const auto& [m, c] : op.terms()) {
    if (!m.is_square_free()) continue;
    r = r + apply_diff(m.support(), f) * c;
  }
  return r;
}

std::vector<std::vector<SquareFreePoly>> hessian_matrix(const std::vector<DiffPoly>& basis,
                                                        const SquareFreePoly& g) {
  int d = -1;
  for (const auto& a : basis) {
    if (a.is_zero() || !a.is_homogeneous()) throw InputError("Hessian basis elements must be nonzero and homogeneous");
    if (d < 0) d = a.degree();
    if (a.degree() != d) throw InputError("Hessian basis mixes degrees");
  }
  if (!basis.empty() && d < 1) throw InputError("Hessian basis degree must be at least 1");
  const int n = int(basis.size());
  std::vector<std::vector<SquareFreePoly>> h(n, std::vector<SquareFreePoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      h[i][j] = apply_diff(basis[i] * basis[j], g);
      h[j][i] = h[i][j];
    }
  return h;
}

Rational hessian_det_at(const std::vector<DiffPoly>& basis, const SquareFreePoly& g,
                        const std::vector<Rational>& point) {
  auto h = hessian_matrix(basis, g);
  const int n = int(h.size());
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = h[i][j].evaluate(point);
  return determinant(m);
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> a, int nvars) {
  const int n = int(a.size());
  if (n == 0) return Poly::constant(nvars, 1);
  Poly prev = Poly::constant(nvars, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly(nvars);
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
      a[i][k] = Poly(nvars);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Poly hessian_det_symbolic(const std::vector<DiffPoly>& basis, const SquareFreePoly& g, int nvars) {
  check_guard(basis.size() <= 8, "symbolic Hessian larger than 8x8");
  auto h = hessian_matrix(basis, g);
  std::vector<std::vector<Poly>> m;
  for (const auto& row : h) {
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(Poly::from_square_free(e, nvars));
    m.push_back(std::move(r));
  }
  return bareiss_determinant(std::move(m), nvars);
}

}  // namespace matgor
