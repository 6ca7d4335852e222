#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matgor/matroid.hpp"
#include "matgor/types.hpp"

namespace matgor {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}
  static Monomial from_subset(Subset s, int nvars);

  int nvars() const { return int(e_.size()); }
  int degree() const;
  std::uint16_t operator[](int i) const { return e_[i]; }
  std::uint16_t& operator[](int i) { return e_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }

  bool divides(const Monomial& o) const;
  bool is_square_free() const;
  Subset support() const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides()
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint16_t> e_;
};

/// Multilinear polynomial: coefficient per square-free monomial x_S.
class SquareFreePoly {
 public:
  using Terms = std::map<Subset, Rational>;

  SquareFreePoly() = default;
  static SquareFreePoly monomial(Subset s, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Subset s) const;
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Subset support() const;

  void add_term(Subset s, const Rational& c);
  SquareFreePoly operator+(const SquareFreePoly& o) const;
  SquareFreePoly operator-(const SquareFreePoly& o) const;
  SquareFreePoly operator*(const Rational& c) const;
  /// Product of polynomials in disjoint sets of variables.
  SquareFreePoly mul_disjoint(const SquareFreePoly& o) const;
  /// Shifts every variable index up by `offset` (used for direct sums).
  SquareFreePoly shifted(int offset) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const SquareFreePoly& o) const = default;

 private:
  Terms terms_;
};

/// Sparse polynomial with arbitrary exponents. On the differential side
/// (DiffPoly) variable i stands for the operator d/dx_i.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);
  static Poly term(const Monomial& m, const Rational& c = 1);
  static Poly from_square_free(const SquareFreePoly& f, int nvars);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator*(const Monomial& m) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  /// Exact quotient; throws Error if `d` does not divide this polynomial.
  Poly exact_div(const Poly& d) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

 private:
  int nvars_;
  Terms terms_;
};

using DiffPoly = Poly;

inline constexpr int kDefaultDegreeCap = 12;

/// Polynomial text form: signed terms `c * x<i>*x<j>*...` with rational `c`
/// and 1-based variable indices; powers print as repeated factors.
std::string to_string(const SquareFreePoly& f);
std::string to_string(const Poly& f);
SquareFreePoly parse_square_free(const std::string& text);
Poly parse_poly(const std::string& text, int nvars);

SquareFreePoly phi(const Matroid& m);
SquareFreePoly phi_level(const Matroid& m, int i);
SquareFreePoly f_tau(const EquivClass& cls);

/// d^S f: x_B -> x_{B \ S} when S is contained in B, else 0.
SquareFreePoly apply_diff(Subset s, const SquareFreePoly& f);
/// op(d) f; any operator term with an exponent >= 2 kills square-free input.
SquareFreePoly apply_diff(const DiffPoly& op, const SquareFreePoly& f);

/// Entries alpha_i(d) alpha_j(d) g for a homogeneous basis of one degree.
std::vector<std::vector<SquareFreePoly>> hessian_matrix(const std::vector<DiffPoly>& basis,
                                                        const SquareFreePoly& g);
Rational hessian_det_at(const std::vector<DiffPoly>& basis, const SquareFreePoly& g,
                        const std::vector<Rational>& point);
/// Symbolic determinant by fraction-free elimination over Q[x] (size <= 8).
Poly hessian_det_symbolic(const std::vector<DiffPoly>& basis, const SquareFreePoly& g, int nvars);

/// Fraction-free (Bareiss) determinant of a square matrix over Q[x].
Poly bareiss_determinant(std::vector<std::vector<Poly>> m, int nvars);

}  // namespace matgor
