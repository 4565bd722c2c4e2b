#pragma once

// Closed-form values of the spinor and vector networks: loops, projector
// closures, vertex collapses, 3j symbols and the Fierz coefficients.
//
// Every "[2n]!/[2n-a]!" ratio is the falling product ffact_ext(2, 0, a); full
// extended factorials are never formed.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qspin/scalar.hpp"

namespace qspin {

// Edge labels (a, b, c) at a vertex, with internal strand counts
// a = r + t, b = r + s, c = s + t.
struct AdmissibleTriple {
  int a = 0, b = 0, c = 0;
  int r = 0, s = 0, t = 0;

  // Throws InadmissibleTriple unless a+b+c is even and the triangle
  // inequalities hold.
  static AdmissibleTriple from_labels(int a, int b, int c);
  // Throws ArgumentOutOfRange for a negative count.
  static AdmissibleTriple from_internal(int r, int s, int t);
  static bool admissible(int a, int b, int c);
};

// Products of brace symbols {k} for k in [lo, hi]; 1 when hi < lo.
ScalarK brace_product(int lo, int hi);

// Loop value of the labelled-a vector projector:
// ({a}/{0}) (2n choose a). Equals 1 at a = 0.
ScalarK dimq_vector(int a);
// The closed form with the fixed prefactor ({1}/{0}); agrees with
// dimq_vector only at a = 1.
ScalarK dimq_vector_printed(int a);

ScalarK curl(int a);                // z^{2a} q^{-a^2}
ScalarK twist(int r, int s, int t);  // (-1)^{st+rs+rt} z^{-2s} q^{(s+t)(s+r)-2rt}
ScalarK tadpole_chain(int a);        // Δ ∏_{k=1}^{a} [k]/{k}
ScalarK projector_loop(int a);       // (∏_{k=1}^{a} 1/{k}) [a]! dimq_vector(a)
ScalarK vertex_collapse(const AdmissibleTriple& t);

ScalarK gamma_cross_coeff(int p);  // [p+1]/{p+1}
ScalarK leg_hop(int r);            // ({r}/{r+1}) ([r+1]/[r+2])
ScalarK leg_hop_iter(int a, int r);  // ({a}/{a+r+1}) ([a+1]/[a+r+2])
// ∏_{k=0}^{m-1} {k}/({a+k}{b+k}) [2n-a-b-k]
ScalarK bubble(int a, int b, int m);
// [2n-b-m]{a+m} - [a]{b} == [2n-a-b-m]{m}
bool check_bubble_identity(int a, int b, int m);

// Δ (∏_{k=0}^{a-1} 1/{k}) [2n]!/[2n-a]!, i.e. Δ projector_loop(a).
ScalarK theta_spinor(int a);
// Δ (∏_{k=1}^{a} 1/{k}) ({1}/{0}) [2n]!/[2n-a]!; equal to theta_spinor at
// a = 1 only.
ScalarK theta_spinor_printed(int a);

ScalarK x_coeff(int r, int s, int t);
ScalarK threej_spinor(int r, int s, int t);
ScalarK theta_vector(int r, int s, int t);
ScalarK threej_double(int r, int s, int t);

// Throws ArgumentOutOfRange unless 0 <= m <= min(a, b).
ScalarK completeness_C(int a, int b, int m);

// The completeness-sum value; the normative definition.
ScalarK fierz(int a, int b);
// ∏_{k=0}^{a-1} 1/{n-k}, the printed closed form for F(a, 0). It disagrees
// with fierz(a, 0) already at a = 1 (1/2 against δ).
ScalarK fierz_a0(int a);
// (-1)^a (∏_{k=0}^{a} 1/{k}) [2n-2a] [2n]!/[2n-a]!; a >= 1.
ScalarK fierz_a1(int a);

// F(a+2,b) - ([2n-b]/{b}) F(a+1,b) + ([a+1][2n-a]/({a+1}{a})) F(a,b)
ScalarK fierz_recurrence_residual(int a, int b);
bool fierz_recurrence_check(int a, int b);
// Δ (∏_{k=0}^{c-1} {k}/[2n-k]) F(a,c) F(b,c)
ScalarK fierz_column_product(int a, int b, int c);

// Coefficient of the expansion sum for even p:
// q^{-p/2} / (z q^{-p/2-1} + z^{-1} q^{p/2+1}). Throws ArgumentOutOfRange for
// odd or negative p; odd leg counts have zero trace.
ScalarK exp_coeff(int p);
// z / (z^2 q^-1 - (-q)^{p+1}), valid for every p >= 0.
ScalarK exp_coeff_general(int p);

class FierzTable {
 public:
  static constexpr int kVersion = 1;

  // Fills 0 <= a <= max_a, 0 <= b <= max_b; cells are computed once per
  // unordered pair and in parallel.
  static FierzTable generate(int max_a, int max_b);

  int max_a() const { return max_a_; }
  int max_b() const { return max_b_; }
  // Throws ArgumentOutOfRange outside the stored range.
  const ScalarK& entry(int a, int b) const;
  bool symmetric() const;

  // {"version":1, "generator":"...", "max_a":..,"max_b":..,
  //  "entries":[{"a":..,"b":..,"value":"<canonical text>"}, ...]}
  std::string to_json() const;
  // Throws SchemaError on a malformed document, ParseError on bad values.
  static FierzTable from_json(const std::string& text);

 private:
  int max_a_ = -1;
  int max_b_ = -1;
  std::map<std::pair<int, int>, ScalarK> entries_;
};

}  // namespace qspin
