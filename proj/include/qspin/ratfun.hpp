#pragma once

// Reduced fractions of integer polynomials.
//
// Normal form: gcd(num, den) = 1 over Z (so the integer contents are coprime
// too) and the leading coefficient of den is positive. Two values are equal
// iff their normal forms are identical.

#include <gmpxx.h>

#include <string>

#include "qspin/poly.hpp"

namespace qspin {

class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFun(Poly p) : num_(std::move(p)), den_(1) {}
  explicit RatFun(const mpq_class& c);

  // Reduces; throws Error(DivisionByZero) if den is zero.
  static RatFun fraction(Poly num, Poly den);
  static RatFun variable(Var v, int exponent = 1);  // exponent may be negative

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;  // requires is_constant()
  unsigned var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

  RatFun inverse() const;
  RatFun pow(int k) const;

  // v -> v^-1 for every variable in `mask` (bit i for Var i).
  RatFun invert_variables(unsigned mask) const;
  // v -> replacement (a monomial, possibly with negative exponents given as
  // a ratio of two monomials).
  RatFun substitute(Var v, const Monomial& up, const Monomial& down = Monomial()) const;
  // v -> value.
  RatFun evaluate(Var v, const mpq_class& value) const;
  // Limit as v -> 1. Throws Error(DivisionByZero) at a pole.
  RatFun limit_at_one(Var v) const;

  std::string to_string() const;

 private:
  RatFun(Poly num, Poly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void fix_sign();
  Poly num_;
  Poly den_;
};

// Prints a Laurent monomial c * m / d in canonical form (no leading sign).
std::string format_laurent_term(const mpz_class& abs_coeff, const Monomial& up,
                                const Monomial& down);

}  // namespace qspin
