#pragma once

// Braid, cup and spectral R-matrices on explicit representations, the
// idempotent towers they generate, and quantum traces at z = q^n.
//
// Entries are stored as reduced rational functions (normal forms). The
// spectral parameters are the generators u and v.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qspin/ratfun.hpp"
#include "qspin/scalar.hpp"

namespace qspin {

// Square matrix over the coefficient field with sparse row storage.
class SquareMatrixK {
 public:
  using Row = std::vector<std::pair<std::uint32_t, RatFun>>;  // sorted by column

  explicit SquareMatrixK(std::size_t dim = 0) : rows_(dim) {}
  static SquareMatrixK identity(std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  std::size_t nonzeros() const;
  const Row& row(std::size_t i) const { return rows_[i]; }

  RatFun entry(std::size_t i, std::size_t j) const;
  ScalarK at(std::size_t i, std::size_t j) const { return ScalarK::from_normal(entry(i, j)); }
  void set(std::size_t i, std::size_t j, const RatFun& value);
  void add_to(std::size_t i, std::size_t j, const RatFun& value);

  bool is_zero() const;
  RatFun trace() const;

  SquareMatrixK operator-() const;
  friend SquareMatrixK operator+(const SquareMatrixK& a, const SquareMatrixK& b);
  friend SquareMatrixK operator-(const SquareMatrixK& a, const SquareMatrixK& b);
  friend SquareMatrixK operator*(const SquareMatrixK& a, const SquareMatrixK& b);
  friend SquareMatrixK operator*(const RatFun& c, const SquareMatrixK& a);
  friend bool operator==(const SquareMatrixK& a, const SquareMatrixK& b);

  // Entrywise maps.
  SquareMatrixK evaluate(Var v, const mpq_class& value) const;
  SquareMatrixK substitute(Var v, const Monomial& up, const Monomial& down) const;

 private:
  std::vector<Row> rows_;
};

SquareMatrixK kron(const SquareMatrixK& a, const SquareMatrixK& b);

// Operators on some space for a fixed number of strands: sigma_i, its inverse
// and (for BMW representations) the cup-cap u_i, for i = 1 .. strands - 1.
struct BraidRep {
  std::string name;
  int strands = 0;
  RatFun z;  // the value of z in this representation
  std::vector<SquareMatrixK> sigma, sigma_inv, cup;  // index i - 1; cup empty for Hecke reps

  std::size_t dim() const { return sigma.empty() ? 0 : sigma.front().dim(); }
  bool has_cup() const { return !cup.empty(); }
};

// The two-dimensional representation of the three-strand Hecke algebra.
BraidRep hecke_rep2();
// The three-dimensional representation of the three-strand BMW algebra;
// z stays formal. The (2,1) entry of σ_1^{±1} is -z^{∓1}(z q^-2 + z^-1 q^2)
// (and symmetrically for σ_2); the other entries are as displayed.
BraidRep bmw_rep3();
// The displayed matrices with -z^{±1} in that entry. σ^{+1} and σ^{-1} are
// not inverse to each other and σ_1, σ_2 do not braid.
BraidRep bmw_rep3_printed();

// Vector representation of the orthogonal quantum group at z = q^n.
// Basis e_i, i in {-n..-1, 1..n}, stored in that order.
struct BraidData {
  int n = 0;
  SquareMatrixK sigma, sigma_inv, u_mat;  // on V ⊗ V
  SquareMatrixK mu;                       // diagonal trace weight on V
  // Term-level differences between the true inverse and the displayed sum
  // for σ^{-1}; empty when they agree.
  std::vector<std::string> warnings;

  std::size_t dim_v() const { return static_cast<std::size_t>(2 * n); }
};

// n in {1, 2, 3}, else UnsupportedSize. Throws CalibrationFailed when the
// trace weight cannot be derived from the cup/cap factorization of u.
BraidData build_braid_data(int n);
// σ^{-1} exactly as displayed (for comparison only).
SquareMatrixK printed_sigma_inverse(int n);

struct BraidInvariants {
  bool skein = false;         // σ - σ^{-1} = (q - q^{-1})(1 - u)
  bool inverse = false;       // σ σ^{-1} = 1
  bool curl = false;          // σu = z^-2 q u, σ^{-1}u = z^2 q^-1 u
  bool loop = false;          // u^2 = {1}δ u
  bool braid = false;         // on V^{⊗3}
  bool all() const { return skein && inverse && curl && loop && braid; }
};
BraidInvariants check_braid_invariants(const BraidData& b);

// The representation of the BMW algebra on V^{⊗strands}.
BraidRep tensor_rep(const BraidData& b, int strands);

enum class RKind { HeckeF, HeckeE, BMW_D, BMW_A };
std::string to_string(RKind k);

// R(x) = (sigma * σ + sigma_inv * σ^{-1} + cup * u) / denom.
struct RCoefficients {
  RatFun sigma, sigma_inv, cup, denom;
};
RCoefficients spectral_coefficients(RKind kind, const RatFun& x, const RatFun& z);

// The numerator matrix on generator i (1-based).
SquareMatrixK spectral_numerator(RKind kind, const BraidRep& rep, int i, const RatFun& x);
// Throws DivisorVanishes when the denominator is zero at x.
SquareMatrixK spectral_R(RKind kind, const BraidRep& rep, int i, const RatFun& x);

// Checks with formal u, v on generators 1 and 2.
bool check_ybe(RKind kind, const BraidRep& rep);
bool check_unitarity(RKind kind, const BraidRep& rep);
bool check_r_at_one(RKind kind, const BraidRep& rep);
// Dropping the cup term of BMW_D (BMW_A) leaves HeckeF (HeckeE).
bool check_hecke_quotient(RKind bmw_kind);

struct CrossingReport {
  bool exact = false;    // rotated numerator of R(u) equals the numerator at the crossed argument
  bool printed = false;  // the displayed prefactor relation holds
};
// Scalar identity in the basis {1, σ, u}: the quarter turn swaps 1 <-> u and
// σ <-> σ^{-1}. BMW_D crosses to u^-1 z^-1 q, BMW_A to i z u^-1 (the i cancels).
CrossingReport check_crossing(RKind bmw_kind);

enum class TowerKind { E, F };

// E(1) = F(1) = 1 on V, then X(p+1) = (X(p) ⊗ 1) R_p(q^p) (X(p) ⊗ 1) on
// V^{⊗(p+1)}, with BMW_A for E and BMW_D for F. Element p - 1 is X(p).
// p_max <= 4 for n <= 2 and p_max <= 3 for n = 3, else UnsupportedSize.
std::vector<SquareMatrixK> idempotent_tower(TowerKind kind, const BraidData& b, int p_max);
// The same recursion inside a fixed representation with generators
// 1 .. strands-1, using HeckeE/HeckeF when the rep has no cup.
std::vector<SquareMatrixK> idempotent_tower(TowerKind kind, const BraidRep& rep, int p_max);

struct TowerReport {
  bool idempotent = false;
  bool eigen = false;      // σ_i X = λ X = X σ_i, and u_i X = 0 = X u_i for BMW
  bool absorbs = false;    // R_i(u) X = X = X R_i(u) with formal u
  bool all() const { return idempotent && eigen && absorbs; }
};
// p is the tower index; rep must act on exactly the space of x.
TowerReport check_tower_element(TowerKind kind, const BraidRep& rep, const SquareMatrixK& x, int p);

// tr(x μ^{⊗p}) for x on V^{⊗p}.
ScalarK quantum_trace(const SquareMatrixK& x, const BraidData& b);
// Quantum dimension of the F(p) image: {1}δ ∏_{k=1}^{p-1} [2n+k-2][n+k]/([n+k-1][k+1]).
ScalarK dimq_symmetric(int p);
// [n+p-1]/[n-1] (2n+p-3 choose p), the Weyl-formula form of the same value.
ScalarK dimq_symmetric_weyl(int p);

}  // namespace qspin
