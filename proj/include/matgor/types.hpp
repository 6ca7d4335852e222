#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace matgor {

using Integer = mpz_class;
using Rational = mpq_class;

/// A subset of an ordered ground set, one bit per element (at most 64 elements).
using Subset = std::uint64_t;

inline constexpr int kMaxGround = 40;

inline int popcount(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int e) { return (s >> e) & 1u; }
inline Subset singleton(int e) { return Subset{1} << e; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset full_set(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// Element indices of a subset in increasing order.
std::vector<int> elements(Subset s);
Subset from_elements(const std::vector<int>& idx);

/// Lexicographic order on increasing index sequences ({1,2} < {1,2,3} < {1,3}).
bool lex_less(Subset a, Subset b);

/// All subsets of {0..n-1} with exactly k elements, in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded (CLI exit code 3).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class BasisExchangeViolation : public InputError {
 public:
  BasisExchangeViolation(Subset a, Subset b, const std::string& msg)
      : InputError(msg), first(a), second(b) {}
  Subset first;
  Subset second;
};

class AxiomViolation : public InputError {
 public:
  using InputError::InputError;
};

class TiedWeight : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Throws GuardExceeded unless MATGOR_GUARD_OVERRIDE is set in the environment.
void check_guard(bool ok, const std::string& what);
bool guards_overridden();

}  // namespace matgor
