#pragma once

// Sparse multivariate polynomials over the integers.
//
// Exponent vectors are packed into a single 128-bit word, 16 bits per
// variable, with variable 0 in the most significant field. Comparing the
// packed words therefore gives lexicographic order with q > z > D > u > v > d,
// which is the fixed monomial order used for normal forms and printing.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qspin {

// Generators of the coefficient field. `delta` only occurs in images of the
// classical specialization; inside the generic field δ is the rational
// function (z - 1/z)/(q - 1/q).
enum class Var : int { q = 0, z = 1, Delta = 2, u = 3, v = 4, delta = 5 };

inline constexpr int kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::q, Var::z, Var::Delta, Var::u, Var::v, Var::delta};

const char* var_name(Var v);

class Monomial {
 public:
  using Bits = unsigned __int128;

  constexpr Monomial() = default;

  static Monomial of(Var v, int exponent = 1);

  int exponent(Var v) const {
    return static_cast<int>((bits_ >> shift(v)) & 0xFFFF);
  }
  int total_degree() const;
  bool is_one() const { return bits_ == 0; }
  bool divides(const Monomial& other) const;

  // Throws std::overflow_error if an exponent would exceed 32767.
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) to hold for `other` dividing *this.
  Monomial operator/(const Monomial& other) const;

  Monomial with_exponent(Var v, int exponent) const;
  Monomial without(Var v) const { return with_exponent(v, 0); }
  Monomial pow(int k) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  Bits bits() const { return bits_; }
  static constexpr Monomial from_bits(Bits b) { return Monomial(b); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  static constexpr int shift(Var v) { return (7 - static_cast<int>(v)) * 16; }
  explicit constexpr Monomial(Bits b) : bits_(b) {}
  Bits bits_ = 0;
};

class Poly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): integers embed
  explicit Poly(const mpz_class& c);

  static Poly variable(Var v, int exponent = 1);
  static Poly monomial(const Monomial& m, const mpz_class& c = 1);
  // Terms need not be sorted or combined.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return is_constant() && !terms_.empty() && terms_[0].coeff == 1;
  }

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Leading term in lex order. Requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  mpz_class constant_value() const;

  int degree(Var v) const;
  int min_degree(Var v) const;
  // Bit i set iff variable i occurs.
  unsigned var_mask() const;

  mpz_class content() const;  // positive gcd of coefficients; 0 for zero
  Monomial monomial_content() const;
  mpz_class max_norm() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly scaled(const mpz_class& c) const;
  Poly shifted(const Monomial& m) const;  // multiply by a monomial
  Poly pow(unsigned k) const;

  // Quotient when `divisor` divides *this exactly over Z, otherwise empty.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  Poly divexact(const mpz_class& c) const;
  Poly divexact(const Monomial& m) const;

  Poly evaluate(Var v, const mpz_class& value) const;
  // Sum of c * num^e * den^(total - e) over terms c*v^e; the homogenised
  // evaluation at v = num/den. `total` must be >= degree(v).
  Poly evaluate_homogeneous(Var v, const mpz_class& num, const mpz_class& den,
                            int total) const;
  // Replace v^e by replacement^e.
  Poly substitute(Var v, const Monomial& replacement) const;
  // Replace every v^e by v^(top - e); `top` must be >= degree(v).
  Poly reflect(Var v, int top) const;

  // Coefficients with respect to v; entry e is the coefficient of v^e.
  std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

  std::string to_string() const;

 private:
  void normalize();  // sort descending and combine like terms
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coeffs
};

// Greatest common divisor over Z[q, z, D, u, v, d], normalised to have a
// positive leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Reference algorithm (recursive primitive PRS). Used as the fallback when the
// heuristic route gives up, and exposed for equivalence tests.
Poly gcd_prs(const Poly& a, const Poly& b);
// Heuristic GCD by integer evaluation and interpolation; empty on failure.
std::optional<Poly> gcd_heuristic(const Poly& a, const Poly& b);

}  // namespace qspin
