// ratfun.hpp
// Exact univariate polynomial and rational-function arithmetic over Q in the
// symbol p, plus linear-system solving over the rational-function field.
// All coefficients are arbitrary-precision rationals (GMP); nothing in this
// module ever rounds.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locsol {

using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial over Q, lowest degree first, no trailing zero coefficient.
// The zero polynomial is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  static QPoly monomial(const Rat& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;
  Rat coeff(int i) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rat& s) const;

  // Exact division; throws if the remainder is nonzero.
  QPoly divide_exact(const QPoly& divisor) const;

  Rat eval(const Rat& x) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // human form, highest degree first

 private:
  void trim();
  std::vector<Rat> c_;
};

// Polynomial gcd over Q[p], computed on primitive integer parts via the
// subresultant remainder sequence; result is primitive with positive leading
// coefficient (or zero).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// Reduced rational function num/den in the symbol p.  Canonical form:
// gcd(num, den) = 1 and den has integer coefficients with content 1 and
// positive leading coefficient.  Structural equality is therefore
// mathematical equality.
class RatFun {
 public:
  RatFun() : num_(), den_(QPoly::constant(1)) {}  // zero
  RatFun(QPoly num, QPoly den);                   // canonicalizes
  static RatFun constant(const Rat& c);
  static RatFun symbol_p();
  static RatFun from_int(long v) { return constant(Rat(v)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;  // throws on division by zero
  RatFun pow(int e) const;                  // e >= 0, or e < 0 on nonzero

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Exact evaluation; throws at a pole.
  Rat eval(const Rat& x) const;

  std::string to_string() const;  // "num / den", expanded polynomials

 private:
  QPoly num_, den_;
};

inline RatFun operator+(long a, const RatFun& b) {
  return RatFun::from_int(a) + b;
}
inline RatFun operator-(long a, const RatFun& b) {
  return RatFun::from_int(a) - b;
}
inline RatFun operator*(long a, const RatFun& b) {
  return RatFun::from_int(a) * b;
}
inline RatFun operator/(long a, const RatFun& b) {
  return RatFun::from_int(a) / b;
}

// Parses an expression in +, -, *, /, ^ over integers and the symbol p, with
// parentheses; used to load closed-form fixtures and to accept CLI input.
RatFun parse_ratfun(const std::string& text);

// Exact fraction from "a/b" or "a" decimal-digit strings.
Rat parse_rat(const std::string& text);

// Solves A x = b over the rational-function field by fraction-free (Bareiss)
// elimination after clearing row denominators.  Throws std::domain_error
// naming the vanishing pivot if the system is singular.
std::vector<RatFun> solve_linear(std::vector<std::vector<RatFun>> a,
                                 std::vector<RatFun> b);

// For f -> 0 as p -> infinity, returns (c, k) with f ~ c * p^{-k}.
// Returns nullopt for the zero function; throws if f does not decay.
std::optional<std::pair<Rat, int>> leading_asymptotic(const RatFun& f);

// Exact rational -> decimal string with the given number of fractional
// digits (truncated), e.g. to_decimal(1/3, 5) == "0.33333".
std::string to_decimal(const Rat& value, int digits);

}  // namespace locsol
