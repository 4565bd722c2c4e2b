#include "qspin/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qspin {

namespace {

using Bits = Monomial::Bits;

// Bit 15 of every 16-bit field.
constexpr Bits high_mask() {
  Bits m = 0;
  for (int i = 0; i < 8; ++i) m |= Bits{0x8000} << (16 * i);
  return m;
}
constexpr Bits kHigh = high_mask();

struct BitsHash {
  std::size_t operator()(Bits b) const noexcept {
    auto lo = static_cast<std::uint64_t>(b);
    auto hi = static_cast<std::uint64_t>(b >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x7F4A7C159E3779B9ULL + (lo << 6));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

bool var_in(unsigned mask, Var v) { return (mask >> static_cast<int>(v)) & 1U; }

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::z: return "z";
    case Var::Delta: return "D";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::delta: return "d";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, int exponent) {
  if (exponent < 0 || exponent > 0x7FFF)
    throw std::overflow_error("monomial exponent out of range");
  return Monomial(Bits(static_cast<unsigned>(exponent)) << shift(v));
}

int Monomial::total_degree() const {
  int d = 0;
  for (Var v : kAllVars) d += exponent(v);
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  // Field-wise other >= *this, detected as "no borrow" into the high bits.
  return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Bits s = bits_ + other.bits_;
  if (s & kHigh) throw std::overflow_error("monomial exponent overflow");
  return Monomial(s);
}

Monomial Monomial::operator/(const Monomial& other) const {
  return Monomial(bits_ - other.bits_);
}

Monomial Monomial::with_exponent(Var v, int exponent) const {
  if (exponent < 0 || exponent > 0x7FFF)
    throw std::overflow_error("monomial exponent out of range");
  Bits cleared = bits_ & ~(Bits{0xFFFF} << shift(v));
  return Monomial(cleared | (Bits(static_cast<unsigned>(exponent)) << shift(v)));
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (Var v : kAllVars) {
    long e = static_cast<long>(exponent(v)) * k;
    if (e > 0x7FFF) throw std::overflow_error("monomial exponent overflow");
    r = r.with_exponent(v, static_cast<int>(e));
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (Var v : kAllVars) r = r.with_exponent(v, std::min(a.exponent(v), b.exponent(v)));
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (Var v : kAllVars) r = r.with_exponent(v, std::max(a.exponent(v), b.exponent(v)));
  return r;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Monomial(), mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::variable(Var v, int exponent) {
  return monomial(Monomial::of(v, exponent));
}

Poly Poly::monomial(const Monomial& m, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

mpz_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_.back().mono.is_one()) return 0;
  return terms_.back().coeff;
}

int Poly::degree(Var v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int Poly::min_degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0x7FFF;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

unsigned Poly::var_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (Var v : kAllVars)
      if (t.mono.exponent(v) > 0) mask |= 1U << static_cast<int>(v);
  return mask;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    m = Monomial::gcd(m, t.mono);
    if (m.is_one()) break;
  }
  return m;
}

mpz_class Poly::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_)
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists, b scaled by sign (+1 or -1).
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      mpz_class c;
      if (sign > 0) c = a[i].coeff + b[j].coeff;
      else c = a[i].coeff - b[j].coeff;
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  Poly r;
  if (small.size() == 1) {
    const auto& t = small.terms_[0];
    r.terms_.reserve(large.size());
    for (const auto& s : large.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return r;
  }
  std::unordered_map<Bits, mpz_class, BitsHash> acc;
  acc.reserve(std::min<std::size_t>(small.size() * large.size(), 1U << 20));
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      mpz_class& slot = acc[(s.mono * l.mono).bits()];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), l.coeff.get_mpz_t());
    }
  }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (c == 0) continue;
    terms.push_back({Monomial::from_bits(bits), std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return x.mono > y.mono; });
  r.terms_ = std::move(terms);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpz_class& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::divexact(const mpz_class& c) const {
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

Poly Poly::divexact(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

namespace {

// Value at the point (3, 5, 7, 11, 13, 17); used to reject non-divisors cheaply.
mpz_class probe_value(const Poly& p) {
  static constexpr std::array<long, kNumVars> kPoint = {3, 5, 7, 11, 13, 17};
  mpz_class total = 0;
  mpz_class term, power;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (Var v : kAllVars) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(kPoint[static_cast<int>(v)]),
                    static_cast<unsigned long>(e));
      term *= power;
    }
    total += term;
  }
  return total;
}

}  // namespace

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return Poly();
  if (divisor.is_monomial()) {
    const auto& d = divisor.terms_[0];
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t()))
        return std::nullopt;
      r.terms_.push_back({t.mono / d.mono, mpz_class(t.coeff / d.coeff)});
    }
    return r;
  }
  for (Var v : kAllVars)
    if (divisor.degree(v) > degree(v) || divisor.min_degree(v) > min_degree(v))
      return std::nullopt;
  {
    mpz_class pv = probe_value(*this), dv = probe_value(divisor);
    if (dv != 0 && !mpz_divisible_p(pv.get_mpz_t(), dv.get_mpz_t())) return std::nullopt;
  }

  std::map<Bits, mpz_class, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono.bits(), t.coeff);
  const Term& lead = divisor.terms_.front();
  std::vector<Term> quotient;
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial rm = Monomial::from_bits(it->first);
    if (!lead.mono.divides(rm) ||
        !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      return std::nullopt;
    Monomial qm = rm / lead.mono;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto& d = divisor.terms_[k];
      auto key = (d.mono * qm).bits();
      auto [slot, inserted] = rem.try_emplace(key, 0);
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), d.coeff.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.push_back({qm, qc});
  }
  Poly q;
  q.terms_ = std::move(quotient);  // produced in decreasing order
  return q;
}

Poly Poly::evaluate(Var v, const mpz_class& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  mpz_class power;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e));
    out.push_back({t.mono.without(v), t.coeff * power});
  }
  return from_terms(std::move(out));
}

Poly Poly::evaluate_homogeneous(Var v, const mpz_class& num, const mpz_class& den,
                                int total) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  mpz_class a, b;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    mpz_pow_ui(a.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(b.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(total - e));
    out.push_back({t.mono.without(v), t.coeff * a * b});
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(Var v, const Monomial& replacement) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    out.push_back({t.mono.without(v) * replacement.pow(e), t.coeff});
  }
  return from_terms(std::move(out));
}

Poly Poly::reflect(Var v, int top) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.with_exponent(v, top - t.mono.exponent(v)), t.coeff});
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(degree(v), 0) + 1));
  for (const auto& t : terms_)
    buckets[static_cast<std::size_t>(t.mono.exponent(v))].push_back({t.mono.without(v), t.coeff});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Poly p;
    p.terms_ = std::move(b);  // relative order is preserved within a bucket
    out.push_back(std::move(p));
  }
  return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms_)
      out.push_back({t.mono * Monomial::of(v, static_cast<int>(e)), t.coeff});
  return from_terms(std::move(out));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (Var v : kAllVars) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << var_name(v);
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

// --------------------------------------------------------------------- GCD

namespace {

Poly positive_lead(Poly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

using GcdFn = Poly (*)(const Poly&, const Poly&);

// gcd of the coefficients of p viewed as a polynomial in v.
Poly content_in(const Poly& p, Var v, GcdFn g) {
  Poly c;
  for (const auto& coeff : p.coefficients_in(v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? positive_lead(coeff) : g(c, coeff);
    if (c.is_constant()) {
      mpz_class k = c.constant_value(), all = p.content();
      mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), all.get_mpz_t());
      return Poly(k);
    }
  }
  return c;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division inside gcd");
  return *q;
}

// Shared prologue: strip monomial and integer contents, call `core` on the
// primitive monomial-free parts and restore the common contents.
template <typename Core>
Poly gcd_with(const Poly& a, const Poly& b, Core core) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly common = Poly::monomial(Monomial::gcd(ma, mb), cg);
  Poly pa = a.divexact(ma).divexact(ca);
  Poly pb = b.divexact(mb).divexact(cb);
  if (pa.is_constant() || pb.is_constant()) return common;
  pa = positive_lead(std::move(pa));
  pb = positive_lead(std::move(pb));
  if (pa == pb) return pa * common;
  return core(pa, pb) * common;
}

// ---- reference: recursive primitive PRS

Poly prem(const Poly& a, const Poly& b, Var x) {
  auto ca = a.coefficients_in(x);
  auto cb = b.coefficients_in(x);
  int da = static_cast<int>(ca.size()) - 1, db = static_cast<int>(cb.size()) - 1;
  const Poly lc = cb.back();
  for (int e = da; e >= db; --e) {
    Poly top = ca[static_cast<std::size_t>(e)];
    for (auto& c : ca) c = c * lc;
    if (top.is_zero()) continue;
    for (int k = 0; k <= db; ++k)
      ca[static_cast<std::size_t>(e - db + k)] -= top * cb[static_cast<std::size_t>(k)];
  }
  ca.resize(static_cast<std::size_t>(std::max(db, 0)));
  return Poly::from_coefficients(x, ca);
}

Poly prs_core(const Poly& a, const Poly& b);

Poly prs_entry(const Poly& a, const Poly& b) { return gcd_with(a, b, prs_core); }

Poly prs_core(const Poly& a, const Poly& b) {
  unsigned ma = a.var_mask(), mb = b.var_mask();
  for (Var v : kAllVars) {
    if (var_in(ma, v) && !var_in(mb, v)) return prs_entry(content_in(a, v, prs_entry), b);
    if (var_in(mb, v) && !var_in(ma, v)) return prs_entry(a, content_in(b, v, prs_entry));
  }
  Var x = Var::q;
  for (Var v : kAllVars)
    if (var_in(ma, v)) {
      x = v;
      break;
    }
  Poly cA = content_in(a, x, prs_entry), cB = content_in(b, x, prs_entry);
  Poly c = prs_entry(cA, cB);
  Poly pa = exact(a, cA), pb = exact(b, cB);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  // Subresultant remainder sequence.
  Poly g(1), h(1);
  while (true) {
    int d = pa.degree(x) - pb.degree(x);
    Poly r = prem(pa, pb, x);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) return c;
    pa = std::move(pb);
    pb = exact(r, g * h.pow(static_cast<unsigned>(d)));
    g = pa.coefficients_in(x).back();
    if (d == 0) continue;
    h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
  }
  pb = exact(pb, content_in(pb, x, prs_entry));
  return positive_lead(pb * c);
}

// ---- heuristic: evaluate, take integer gcd, interpolate back

// Symmetric residue of c modulo x, in (-x/2, x/2].
mpz_class symmetric_mod(const mpz_class& c, const mpz_class& x) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (2 * r > x) r -= x;
  return r;
}

Poly interpolate(const Poly& h, const mpz_class& x, Var v) {
  std::vector<Poly::Term> out;
  for (const auto& t : h.terms()) {
    mpz_class c = t.coeff;
    int e = 0;
    while (c != 0) {
      mpz_class d = symmetric_mod(c, x);
      if (d != 0) out.push_back({t.mono * Monomial::of(v, e), d});
      c -= d;
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      ++e;
    }
  }
  return positive_lead(Poly::from_terms(std::move(out)));
}

struct HeuResult {
  Poly h, cf, cg;
};

std::optional<HeuResult> heu(const Poly& f, const Poly& g, std::vector<Var> vars) {
  if (vars.empty()) {
    mpz_class a = f.constant_value(), b = g.constant_value();
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return HeuResult{Poly(h), Poly(mpz_class(a / h)), Poly(mpz_class(b / h))};
  }
  mpz_class cf = f.content(), cg = g.content();
  mpz_class common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  Poly F = f.divexact(common), G = g.divexact(common);

  Var v = vars.back();
  vars.pop_back();

  mpz_class fn = F.max_norm(), gn = G.max_norm();
  mpz_class B = 2 * std::min(fn, gn) + 29;
  mpz_class root = sqrt(B);
  mpz_class x = std::min(B, mpz_class(99 * root));
  mpz_class lf = abs(F.leading().coeff), lg = abs(G.leading().coeff);
  mpz_class alt = 2 * std::min(mpz_class(fn / lf), mpz_class(gn / lg)) + 2;
  if (alt > x) x = alt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = F.evaluate(v, x), gg = G.evaluate(v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto sub = heu(ff, gg, vars);
      if (sub) {
        Poly h = interpolate(sub->h, x, v);
        h = h.divexact(h.content());
        if (auto qf = F.divide_exact(h)) {
          if (auto qg = G.divide_exact(h))
            return HeuResult{h.scaled(common), *qf, *qg};
        }
        Poly cff = interpolate(sub->cf, x, v);
        if (!cff.is_zero()) {
          if (auto hh = F.divide_exact(cff)) {
            if (auto qg = G.divide_exact(*hh))
              return HeuResult{hh->scaled(common), cff, *qg};
          }
        }
        Poly cfg = interpolate(sub->cg, x, v);
        if (!cfg.is_zero()) {
          if (auto hh = G.divide_exact(cfg)) {
            if (auto qf = F.divide_exact(*hh))
              return HeuResult{hh->scaled(common), *qf, cfg};
          }
        }
      }
    }
    mpz_class r4 = sqrt(sqrt(x));
    x = 73794 * x * r4 / 27011;
  }
  return std::nullopt;
}

Poly fast_core(const Poly& a, const Poly& b);

Poly fast_entry(const Poly& a, const Poly& b) { return gcd_with(a, b, fast_core); }

Poly fast_core(const Poly& a, const Poly& b) {
  unsigned ma = a.var_mask(), mb = b.var_mask();
  for (Var v : kAllVars) {
    if (var_in(ma, v) && !var_in(mb, v)) return fast_entry(content_in(a, v, fast_entry), b);
    if (var_in(mb, v) && !var_in(ma, v)) return fast_entry(a, content_in(b, v, fast_entry));
  }
  std::vector<Var> vars;
  for (Var v : kAllVars)
    if (var_in(ma, v)) vars.push_back(v);
  if (auto r = heu(a, b, vars)) return positive_lead(r->h);
  return prs_core(a, b);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return fast_entry(a, b); }

Poly gcd_prs(const Poly& a, const Poly& b) { return prs_entry(a, b); }

std::optional<Poly> gcd_heuristic(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return gcd(a, b);
  std::vector<Var> vars;
  unsigned mask = a.var_mask() | b.var_mask();
  for (Var v : kAllVars)
    if (var_in(mask, v)) vars.push_back(v);
  auto r = heu(a, b, vars);
  if (!r) return std::nullopt;
  return positive_lead(r->h);
}

}  // namespace qspin
