#include "qspin/qcomb.hpp"

#include "qspin/error.hpp"

namespace qspin {

std::string ExtSymbol::to_string() const {
  std::string s = "[";
  if (b != 0) {
    if (b == -1) s += "-";
    else if (b != 1) s += std::to_string(b);
    s += "n";
    if (a > 0) s += "+" + std::to_string(a);
    else if (a < 0) s += std::to_string(a);
  } else {
    s += std::to_string(a);
  }
  return s + "]";
}

ScalarK qfact(int a) {
  if (a < 0) fail(ErrorKind::ArgumentOutOfRange, "qfact needs a >= 0");
  ScalarK r(1);
  for (int k = 2; k <= a; ++k) r *= qint(0, k);
  return r;
}

ScalarK qbinom(int a, int m) {
  if (a < 0 || m < 0 || m > a) fail(ErrorKind::ArgumentOutOfRange, "qbinom needs 0 <= m <= a");
  int lo = std::min(m, a - m);
  // Product of lo ratios keeps the intermediate values small.
  return ffact_ext(0, a, lo) / qfact(lo);
}

ScalarK ffact_ext(int b, int a, int m) {
  if (m < 0) fail(ErrorKind::ArgumentOutOfRange, "falling product needs m >= 0");
  ScalarK r(1);
  for (int k = 0; k < m; ++k) r *= qint(b, a - k);
  return r;
}

ScalarK qbinom_ext(int b, int a, int m) {
  if (m < 0) fail(ErrorKind::ArgumentOutOfRange, "binomial needs m >= 0");
  return ffact_ext(b, a, m) / qfact(m);
}

bool check_addition(ExtSymbol A, ExtSymbol B, ExtSymbol C) {
  ScalarK lhs = (A + B).value() * C.value();
  ScalarK rhs = A.value() * (B + C).value() + B.value() * (C - A).value();
  return lhs == rhs;
}

bool check_addition_printed(ExtSymbol A, ExtSymbol B, ExtSymbol C) {
  ScalarK lhs = (A + B).value() * C.value();
  ScalarK rhs = A.value() * (B + C).value() + B.value() * (A - C).value();
  return lhs == rhs;
}

bool check_cac_identities(int a) {
  ScalarK zi = ScalarK::z().pow(-1);
  ScalarK lhs = qint(0, a) + zi * qint(1, -a);
  ScalarK rhs = zi * ScalarK::q().pow(a) * qint(1, 0);
  return lhs == rhs;
}

namespace {

// Ordinary q-binomial with the convention (a choose m) = 0 outside 0 <= m <= a.
RatFun binom_at(int a, int m, int n0) {
  if (m < 0 || m > a) return RatFun();
  return specialize(qbinom(a, m), IntegerLevel{n0});
}

}  // namespace

CacReport cac_report(int a) {
  CacReport report;
  report.a = a;
  report.upper_trace = check_cac_identities(a);
  for (int n0 = 3; n0 <= 5; ++n0) {
    if (a < 1 || a > n0 - 1) continue;
    RatFun q = RatFun::variable(Var::q);
    RatFun first = binom_at(n0 - 1, a - 1, n0);
    RatFun second = binom_at(n0 - 1, a, n0);
    RatFun rhs = q.pow(a - n0) * binom_at(n0, a, n0);
    BinomialSignCheck check;
    check.n0 = n0;
    check.plus_holds = first + q.pow(n0) * second == rhs;
    check.minus_holds = first + q.pow(-n0) * second == rhs;
    report.binomial.push_back(check);
  }
  return report;
}

ScalarK qint_2n_printed(int a) {
  ScalarK z = ScalarK::z();
  return z * qint(0, a) + ScalarK::q().pow(-a) * (z + z.pow(-1)) * ScalarK::delta();
}

ScalarK qint_2n_corrected(int a) {
  ScalarK z = ScalarK::z();
  return z.pow(2) * qint(0, a) + ScalarK::q().pow(-a) * (z + z.pow(-1)) * ScalarK::delta();
}

}  // namespace qspin
