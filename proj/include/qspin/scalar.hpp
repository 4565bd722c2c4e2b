#pragma once

// Elements of the coefficient field Q(q, z, Δ) (plus the spectral generators
// u, v used by the matrix code).
//
// A ScalarK carries two views of the same value:
//   * a reduced rational function in q, z, D(=Δ), u, v, with δ rewritten as
//     (z^2 - 1) q / ((q^2 - 1) z); this decides equality;
//   * the expression DAG it was built from, kept so that the classical map
//     q, z -> 1 can be applied generator by generator with δ kept symbolic.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qspin/ratfun.hpp"

namespace qspin {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

enum class Generator { q, z, delta, Delta, u, v };

class ScalarK {
 public:
  ScalarK();  // zero
  ScalarK(long c);  // NOLINT(google-explicit-constructor)
  explicit ScalarK(const mpq_class& c);

  static ScalarK generator(Generator g);
  static ScalarK q() { return generator(Generator::q); }
  static ScalarK z() { return generator(Generator::z); }
  static ScalarK delta() { return generator(Generator::delta); }
  static ScalarK Delta() { return generator(Generator::Delta); }
  static ScalarK u() { return generator(Generator::u); }
  static ScalarK v() { return generator(Generator::v); }

  // Extended q-integer [b n + a] and brace symbols, as DAG leaves so the
  // classical map sends them to b δ + a and 2.
  static ScalarK qint(int b, int a);
  static ScalarK brace(int k);          // z q^-k + z^-1 q^k
  static ScalarK brace_shifted(int k);  // q^k + q^-k, the symbol {n - k}

  // A value known only through its normal form. Its classical image is the
  // value at q = z = 1 when that exists.
  static ScalarK from_normal(RatFun value);

  const RatFun& normal() const { return *normal_; }
  const ExprPtr& expr() const { return expr_; }

  bool is_zero() const { return normal_->is_zero(); }
  bool is_one() const { return normal_->is_one(); }
  bool depends_on(Generator g) const;

  ScalarK operator-() const;
  friend ScalarK operator+(const ScalarK& a, const ScalarK& b);
  friend ScalarK operator-(const ScalarK& a, const ScalarK& b);
  friend ScalarK operator*(const ScalarK& a, const ScalarK& b);
  // Throws Error(DivisionByZero) when b normalizes to zero.
  friend ScalarK operator/(const ScalarK& a, const ScalarK& b);
  ScalarK& operator+=(const ScalarK& o) { return *this = *this + o; }
  ScalarK& operator-=(const ScalarK& o) { return *this = *this - o; }
  ScalarK& operator*=(const ScalarK& o) { return *this = *this * o; }
  ScalarK& operator/=(const ScalarK& o) { return *this = *this / o; }
  ScalarK inverse() const;
  ScalarK pow(int k) const;

  // The involution q -> q^-1, z -> z^-1 (δ, Δ, u, v fixed).
  ScalarK bar() const;

  std::string to_string() const { return normal_->to_string(); }

 private:
  ScalarK(ExprPtr e, std::shared_ptr<const RatFun> n) : expr_(std::move(e)), normal_(std::move(n)) {}
  static ScalarK make(ExprNode node, RatFun normal);
  ExprPtr expr_;
  std::shared_ptr<const RatFun> normal_;
};

bool equal(const ScalarK& a, const ScalarK& b);
inline bool operator==(const ScalarK& a, const ScalarK& b) { return equal(a, b); }

// Re-normalizing an existing normal form; used by the idempotence property.
ScalarK renormalize(const ScalarK& x);

// ---------------------------------------------------------------- targets

struct IntegerLevel {
  int n;
};
// q, z -> 1 generator by generator; δ stays symbolic unless `delta` is set,
// in which case it is sent to that number.
struct Classical {
  std::optional<mpq_class> delta;
};
struct NumericProbe {
  mpq_class q0;
  int n;
  mpq_class Delta0;
};
// IntegerLevel(n) followed by the limit q -> 1.
struct ClassicalLimit {
  int n;
};
using SpecializationTarget = std::variant<IntegerLevel, Classical, NumericProbe, ClassicalLimit>;

// Results are rational functions in the surviving variables:
//   IntegerLevel:   q, D, u, v
//   Classical:      d (the symbol δ), D, u, v
//   NumericProbe:   a constant
//   ClassicalLimit: D, u, v
// Errors: DivisionByZero (genuine pole), ClassicalSingular (the classical map
// meets a divisor whose image is zero), ArgumentOutOfRange (bad target).
RatFun specialize(const ScalarK& x, const SpecializationTarget& target);

std::string target_to_string(const SpecializationTarget& target);

// ------------------------------------------------------------------ text

// Parses scalar expressions: integers, q, z, D/Delta/Δ, d/delta/δ, u, v,
// + - * / ^ (integer exponents), parentheses, implicit multiplication,
// [b n + a], {k}, {n - k}, qint(b, a), brace(k), brace_shifted(k).
// Canonical text produced by to_string() parses back to the same value.
// Throws Error(ParseError).
ScalarK parse_scalar(std::string_view text);

}  // namespace qspin
