#include "qspin/ratfun.hpp"

#include <sstream>

#include "qspin/error.hpp"

namespace qspin {

namespace {

// Replace v^e by up^e * down^(top - e) in every term.
Poly substitute_homogeneous(const Poly& p, Var v, const Monomial& up, const Monomial& down,
                            int top) {
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    out.push_back({t.mono.without(v) * up.pow(e) * down.pow(top - e), t.coeff});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

RatFun::RatFun(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RatFun RatFun::fraction(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (num.is_zero()) return RatFun();
  if (!den.is_one()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  RatFun r(std::move(num), std::move(den), true);
  r.fix_sign();
  return r;
}

RatFun RatFun::variable(Var v, int exponent) {
  if (exponent >= 0) return RatFun(Poly::variable(v, exponent));
  return RatFun(Poly(1), Poly::variable(v, -exponent), true);
}

void RatFun::fix_sign() {
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class RatFun::constant_value() const {
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun::fraction(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) return RatFun(a.num_ * b.den_ + b.num_, b.den_, true);
  if (b.den_.is_one()) return RatFun(a.num_ + b.num_ * a.den_, a.den_, true);
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFun();
    RatFun r(std::move(num), a.den_ * b.den_, true);
    r.fix_sign();
    return r;
  }
  Poly ad = *a.den_.divide_exact(g);
  Poly bd = *b.den_.divide_exact(g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFun();
  Poly h = gcd(num, g);
  Poly den = ad * bd;
  if (h.is_one()) {
    den *= g;
  } else {
    num = *num.divide_exact(h);
    den *= *g.divide_exact(h);
  }
  RatFun r(std::move(num), std::move(den), true);
  r.fix_sign();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : *a.num_.divide_exact(g1);
  Poly bd = g1.is_one() ? b.den_ : *b.den_.divide_exact(g1);
  Poly bn = g2.is_one() ? b.num_ : *b.num_.divide_exact(g2);
  Poly ad = g2.is_one() ? a.den_ : *a.den_.divide_exact(g2);
  RatFun r(an * bn, ad * bd, true);
  r.fix_sign();
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  RatFun r(den_, num_, true);
  r.fix_sign();
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), true);
}

RatFun RatFun::invert_variables(unsigned mask) const {
  Poly n = num_, d = den_;
  for (Var v : kAllVars) {
    if (!((mask >> static_cast<int>(v)) & 1U)) continue;
    int top = std::max(n.degree(v), d.degree(v));
    if (top <= 0) continue;
    n = n.reflect(v, top);
    d = d.reflect(v, top);
  }
  // Reflection is multiplicative up to monomials and one of the two sides
  // keeps a nonzero constant term in v, so the result stays reduced.
  RatFun r(std::move(n), std::move(d), true);
  r.fix_sign();
  return r;
}

RatFun RatFun::substitute(Var v, const Monomial& up, const Monomial& down) const {
  int top = std::max(num_.degree(v), den_.degree(v));
  if (top <= 0) return *this;
  return fraction(substitute_homogeneous(num_, v, up, down, top),
                  substitute_homogeneous(den_, v, up, down, top));
}

RatFun RatFun::evaluate(Var v, const mpq_class& value) const {
  int top = std::max(num_.degree(v), den_.degree(v));
  if (top <= 0) return *this;
  Poly n = num_.evaluate_homogeneous(v, value.get_num(), value.get_den(), top);
  Poly d = den_.evaluate_homogeneous(v, value.get_num(), value.get_den(), top);
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes at the evaluation point");
  return fraction(std::move(n), std::move(d));
}

RatFun RatFun::limit_at_one(Var v) const {
  const Poly factor = Poly::variable(v) - Poly(1);
  auto strip = [&](Poly p, int& order) {
    order = 0;
    while (p.degree(v) > 0 && p.evaluate(v, 1).is_zero()) {
      p = *p.divide_exact(factor);
      ++order;
    }
    return p;
  };
  int a = 0, b = 0;
  Poly n = strip(num_, a);
  Poly d = strip(den_, b);
  if (num_.is_zero() || a > b) return RatFun();
  if (a < b) fail(ErrorKind::DivisionByZero, std::string("pole at ") + var_name(v) + " = 1");
  return fraction(n.evaluate(v, 1), d.evaluate(v, 1));
}

std::string format_laurent_term(const mpz_class& abs_coeff, const Monomial& up,
                                const Monomial& down) {
  std::ostringstream os;
  bool wrote = false;
  bool unit = true;
  for (Var v : kAllVars) unit = unit && up.exponent(v) == down.exponent(v);
  if (abs_coeff != 1 || unit) {
    os << abs_coeff.get_str();
    wrote = true;
  }
  for (Var v : kAllVars) {
    int e = up.exponent(v) - down.exponent(v);
    if (e == 0) continue;
    if (wrote) os << "*";
    os << var_name(v);
    if (e != 1) os << "^" << e;
    wrote = true;
  }
  return os.str();
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  if (den_.is_monomial() && den_.leading().coeff == 1) {
    std::string out;
    bool first = true;
    const Monomial& d = den_.leading().mono;
    for (const auto& t : num_.terms()) {
      bool negative = t.coeff < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      out += format_laurent_term(abs(t.coeff), t.mono, d);
    }
    return out;
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qspin
