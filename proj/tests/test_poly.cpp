#include <doctest.h>

#include <random>

#include "qspin/error.hpp"
#include "qspin/ratfun.hpp"

using namespace qspin;

namespace {

Poly random_poly(std::mt19937& rng, int terms, int maxdeg, unsigned vars) {
  std::vector<Poly::Term> out;
  std::uniform_int_distribution<int> deg(0, maxdeg), coeff(-9, 9);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Var v : kAllVars)
      if ((vars >> static_cast<int>(v)) & 1U) m = m.with_exponent(v, deg(rng));
    out.push_back({m, coeff(rng)});
  }
  return Poly::from_terms(std::move(out));
}

const Poly q = Poly::variable(Var::q);
const Poly z = Poly::variable(Var::z);

}  // namespace

TEST_CASE("monomial packing") {
  Monomial a = Monomial::of(Var::q, 3) * Monomial::of(Var::z, 2);
  Monomial b = Monomial::of(Var::q, 1);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a / b).exponent(Var::q) == 2);
  CHECK(Monomial::of(Var::q) > Monomial::of(Var::z, 100));
  CHECK_THROWS_AS(Monomial::of(Var::q, 0x7000) * Monomial::of(Var::q, 0x1000), std::overflow_error);
}

TEST_CASE("polynomial arithmetic") {
  Poly a = q * q - Poly(1);
  auto quotient = a.divide_exact(q - Poly(1));
  REQUIRE(quotient);
  CHECK(*quotient == q + Poly(1));
  CHECK_FALSE(a.divide_exact(q + Poly(2)));
  CHECK((q + z).pow(3).size() == 4);
  CHECK(((q + z) * (q - z)) == q * q - z * z);
  CHECK((q + Poly(1)).to_string() == "q + 1");
}

TEST_CASE("gcd routes agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned vars = trial % 3 == 0 ? 0b000011U : (trial % 3 == 1 ? 0b000111U : 0b011011U);
    Poly c = random_poly(rng, 3, 3, vars);
    Poly a = random_poly(rng, 4, 4, vars) * c;
    Poly b = random_poly(rng, 4, 4, vars) * c;
    Poly g1 = gcd(a, b), g2 = gcd_prs(a, b);
    CHECK(g1 == g2);
    if (!c.is_zero()) CHECK(g1.divide_exact(c.scaled(c.leading().coeff < 0 ? -1 : 1)).has_value());
    if (!g1.is_zero()) {
      CHECK(a.divide_exact(g1).has_value());
      CHECK(b.divide_exact(g1).has_value());
    }
  }
}

TEST_CASE("rational functions reduce") {
  RatFun r = RatFun::fraction(q * q - Poly(1), q - Poly(1));
  CHECK(r == RatFun(q + Poly(1)));
  RatFun qi = RatFun::variable(Var::q, -1);
  RatFun zi = RatFun::variable(Var::z, -1);
  RatFun delta = (RatFun(z) - zi) / (RatFun(q) - qi);
  CHECK(delta.num() == (z * z - Poly(1)) * q);
  CHECK(delta.den() == (q * q - Poly(1)) * z);
  CHECK((delta * (RatFun(q) - qi) - (RatFun(z) - zi)).is_zero());
  CHECK(delta.invert_variables(0b11U) == delta);
  CHECK(delta.substitute(Var::z, Monomial::of(Var::q, 2)) == RatFun(q) + qi);
  CHECK(delta.substitute(Var::z, Monomial::of(Var::q, 3)).limit_at_one(Var::q) == RatFun(3));
  CHECK_THROWS_AS(RatFun(1) / RatFun(), Error);
  CHECK((RatFun(q) + qi).to_string() == "q + q^-1");
  CHECK(RatFun(mpq_class(1, 2)).to_string() == "(1)/(2)");
}
