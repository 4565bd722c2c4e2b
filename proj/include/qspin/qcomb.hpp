#pragma once

// Extended q-integers, brace symbols, factorials and binomials.

#include <string>
#include <vector>

#include "qspin/scalar.hpp"

namespace qspin {

// The formal symbol b n + a; its value is [b n + a].
struct ExtSymbol {
  int b = 0;
  int a = 0;

  ScalarK value() const { return ScalarK::qint(b, a); }
  friend ExtSymbol operator+(ExtSymbol x, ExtSymbol y) { return {x.b + y.b, x.a + y.a}; }
  friend ExtSymbol operator-(ExtSymbol x, ExtSymbol y) { return {x.b - y.b, x.a - y.a}; }
  friend bool operator==(ExtSymbol, ExtSymbol) = default;
  std::string to_string() const;
};

inline ScalarK qint(int b, int a) { return ScalarK::qint(b, a); }
inline ScalarK brace(int k) { return ScalarK::brace(k); }
inline ScalarK brace_shifted(int k) { return ScalarK::brace_shifted(k); }

// [1][2]...[a]. Throws ArgumentOutOfRange for a < 0.
ScalarK qfact(int a);
// [a]! / ([m]! [a-m]!) with 0 <= m <= a.
ScalarK qbinom(int a, int m);
// Falling product [b n + a][b n + a - 1]...[b n + a - m + 1]; m >= 0.
ScalarK ffact_ext(int b, int a, int m);
// ffact_ext(b, a, m) / [m]!, the binomial (b n + a choose m).
ScalarK qbinom_ext(int b, int a, int m);

// [A+B][C] = [A][B+C] + [B][C-A].
bool check_addition(ExtSymbol A, ExtSymbol B, ExtSymbol C);
// The same identity with [A-C] in the last factor. This sign is wrong in
// general (A=2, B=C=1 gives [3] = [2]^2 + 1); it holds only when [B][A-C] = 0
// or the two sides happen to agree.
bool check_addition_printed(ExtSymbol A, ExtSymbol B, ExtSymbol C);

struct BinomialSignCheck {
  int n0 = 0;
  bool plus_holds = false;   // with z^{+1}
  bool minus_holds = false;  // with z^{-1}
};

struct CacReport {
  int a = 0;
  bool upper_trace = false;  // [a] + z^-1 [n-a] = z^-1 q^a [n] in K
  std::vector<BinomialSignCheck> binomial;  // n0 = 3, 4, 5
};

// Runs both trace identities of the q-deformed anticommutation relations.
// The binomial identity is only checked for 1 <= a <= n0 - 1, where both
// sides are ordinary q-binomials; other levels are omitted from the report.
CacReport cac_report(int a);
// The upper trace identity alone; the K-level statement.
bool check_cac_identities(int a);

// Two printed forms of [2n + a]: z[a] + q^-a (z + z^-1) δ as printed, and the
// corrected z^2 [a] + q^-a (z + z^-1) δ.
ScalarK qint_2n_printed(int a);
ScalarK qint_2n_corrected(int a);

}  // namespace qspin
