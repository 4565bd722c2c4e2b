#include <doctest.h>

#include <utility>

#include "qspin/error.hpp"
#include "qspin/qcomb.hpp"
#include "qspin/recoupling.hpp"

using namespace qspin;

namespace {

ScalarK S(const char* text) { return parse_scalar(text); }

RatFun probe(const ScalarK& x) { return specialize(x, NumericProbe{2, 3, 5}); }

}  // namespace

TEST_CASE("admissible triples") {
  auto t = AdmissibleTriple::from_labels(1, 1, 2);
  CHECK(t.r == 0);
  CHECK(t.s == 1);
  CHECK(t.t == 1);
  CHECK_THROWS_AS(AdmissibleTriple::from_labels(1, 1, 1), Error);
  CHECK_THROWS_AS(AdmissibleTriple::from_labels(3, 1, 0), Error);
  try {
    AdmissibleTriple::from_labels(0, 0, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InadmissibleTriple);
  }
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s)
      for (int u = 0; u <= 4; ++u) {
        auto x = AdmissibleTriple::from_internal(r, s, u);
        CHECK(AdmissibleTriple::admissible(x.a, x.b, x.c));
        auto y = AdmissibleTriple::from_labels(x.a, x.b, x.c);
        CHECK(std::make_tuple(y.r, y.s, y.t) == std::make_tuple(r, s, u));
      }
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        bool expect = (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && a + c >= b;
        CHECK(AdmissibleTriple::admissible(a, b, c) == expect);
      }
}

TEST_CASE("loop values") {
  CHECK(dimq_vector(0).is_one());
  CHECK(dimq_vector(1) == S("(z q^-1 + z^-1 q) d"));
  CHECK(dimq_vector(1) == brace(1) / brace(0) * qint(2, 0));
  CHECK(dimq_vector(2) == brace(2) / brace(0) * qint(2, 0) * qint(2, -1) / qint(0, 2));
  // The fixed-prefactor form: raw value at a = 0 and the closed form at a = 2.
  CHECK(dimq_vector_printed(0) == brace(1) / brace(0));
  CHECK(dimq_vector_printed(2) == brace(1) / brace(0) * qint(2, 0) * qint(2, -1) / qint(0, 2));
  CHECK(dimq_vector_printed(1) == dimq_vector(1));
  for (int a = 2; a <= 5; ++a) CHECK_FALSE(dimq_vector_printed(a) == dimq_vector(a));

  CHECK(curl(1) == S("z^2 q^-1"));
  CHECK(curl(0).is_one());
  CHECK(twist(0, 0, 0).is_one());
  CHECK(twist(0, 1, 0) == S("z^-2 q"));
  CHECK(twist(0, 1, 0) * curl(1) == ScalarK(1));
  CHECK(twist(1, 1, 1) == -S("z^-2 q^2"));
}

TEST_CASE("projector closures and vertex collapse") {
  ScalarK D = ScalarK::Delta();
  CHECK(tadpole_chain(0) == D);
  CHECK(tadpole_chain(1) == D / S("z q^-1 + z^-1 q"));
  CHECK(tadpole_chain(2) == D * qint(0, 2) / (brace(1) * brace(2)));
  CHECK(projector_loop(0).is_one());
  CHECK(projector_loop(1) == ScalarK::delta());
  CHECK(projector_loop(2) == qint(0, 2) * dimq_vector(2) / (brace(1) * brace(2)));
  CHECK(vertex_collapse(AdmissibleTriple::from_labels(1, 1, 0)) == tadpole_chain(1));
  CHECK(vertex_collapse(AdmissibleTriple::from_labels(0, 0, 0)) == D);
  CHECK(vertex_collapse(AdmissibleTriple::from_labels(1, 1, 2)) == D * qint(0, 2) / (brace(1) * brace(2)));
  AdmissibleTriple bad;
  bad.a = 1;
  CHECK_THROWS_AS(vertex_collapse(bad), Error);
  // Collapsing onto a single labelled edge is the tadpole chain.
  for (int a = 0; a <= 5; ++a) CHECK(vertex_collapse(AdmissibleTriple::from_labels(a, a, 0)) == tadpole_chain(a));
}

TEST_CASE("leg hops and the gamma rewrite") {
  CHECK(gamma_cross_coeff(0) == ScalarK(1) / brace(1));
  CHECK(gamma_cross_coeff(1) == qint(0, 2) / brace(2));
  for (int p = 0; p <= 8; ++p) {
    CHECK(gamma_cross_coeff(p) * brace(p + 1) == qint(0, p + 1));
    // [n-p-1]/[2n-2p-2] = 1/{p+1}
    CHECK(gamma_cross_coeff(p) == qint(1, -p - 1) / qint(2, -2 * p - 2) * qint(0, p + 1));
  }
  CHECK(leg_hop(0) == brace(0) / brace(1) * (qint(0, 1) / qint(0, 2)));
  for (int a = 0; a <= 6; ++a) CHECK(leg_hop_iter(a, 0) == leg_hop(a));
  // The corollary's ratios telescope: hop(a, r) = hop(a, r-1) times the one
  // step from a + r - 1 to a + r, read off the two brace/bracket ratios.
  for (int a = 0; a <= 4; ++a)
    for (int r = 1; r <= 4; ++r)
      CHECK(leg_hop_iter(a, r) ==
            leg_hop_iter(a, r - 1) * (brace(a + r) / brace(a + r + 1)) * (qint(0, a + r + 1) / qint(0, a + r + 2)));
}

TEST_CASE("bubble") {
  CHECK(bubble(2, 3, 0).is_one());
  CHECK(bubble(1, 1, 1) == brace(0) / (brace(1) * brace(1)) * qint(2, -2));
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int m = 0; m <= 5; ++m) CHECK(check_bubble_identity(a, b, m));
  CHECK_FALSE(qint(2, -1) * brace(2) - qint(0, 1) * brace(1) == qint(2, -3) * brace(2));
}

TEST_CASE("theta and 3j values") {
  ScalarK D = ScalarK::Delta(), d = ScalarK::delta();
  CHECK(theta_spinor(0) == D);
  CHECK(theta_spinor(1) == D * d);
  CHECK(theta_spinor(2) == D * qint(2, 0) * qint(2, -1) / (brace(0) * brace(1)));
  CHECK(theta_spinor_printed(1) == D * d);
  CHECK(theta_spinor_printed(0) == D * brace(1) / brace(0));
  CHECK(theta_spinor_printed(2) == D * brace(1) / brace(0) * qint(2, 0) * qint(2, -1) / (brace(1) * brace(2)));

  CHECK(x_coeff(0, 0, 0).is_one());
  CHECK(x_coeff(1, 0, 0) == ScalarK(1) / brace(0));
  CHECK(x_coeff(1, 1, 0) == ScalarK(1) / (brace(0) * brace(1)));
  CHECK(threej_spinor(1, 0, 0) == D * d);
  CHECK(threej_spinor(1, 0, 0) == theta_spinor(1));
  CHECK(theta_vector(1, 0, 0) == brace(1) * d);
  CHECK(theta_vector(1, 0, 0) == dimq_vector(1));
  CHECK(threej_spinor(1, 1, 1) == D * x_coeff(1, 1, 1) * qint(2, 0) * qint(2, -1) * qint(2, -2));
}

TEST_CASE("regression: theta prefactor") {
  for (int a = 2; a <= 5; ++a) CHECK_FALSE(theta_spinor_printed(a) == theta_spinor(a));
  CHECK_FALSE(theta_spinor_printed(0) == theta_spinor(0));
}

TEST_CASE("property: recoupling coherence") {
  for (int a = 0; a <= 4; ++a) CHECK(theta_spinor(a) == ScalarK::Delta() * projector_loop(a));
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        // 3j from the bubble shrinking r strands, then the theta network.
        CHECK(threej_spinor(r, s, t) == bubble(s, t, r) * theta_spinor(s + t));
        // Vector theta from the 3j by collapsing the three vertices.
        auto tri = AdmissibleTriple::from_internal(r, s, t);
        CHECK(theta_vector(r, s, t) * ScalarK::Delta() * qfact(tri.a) * qfact(tri.b) * qfact(tri.c) ==
              brace_product(1, r + s + t) * qfact(r) * qfact(s) * qfact(t) * threej_spinor(r, s, t));
        CHECK(threej_double(r, s, t) == ScalarK::Delta() / brace_product(0, r + s + t - 1) * qfact(tri.a) *
                                            qfact(tri.b) * qfact(tri.c) / (qfact(r) * qfact(s) * qfact(t)) *
                                            threej_spinor(r, s, t));
      }
}

TEST_CASE("property: classical vector theta is polynomial in delta") {
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s + r <= 6; ++s)
      for (int t = 0; t + s + r <= 6; ++t) {
        RatFun c = specialize(theta_vector(r, s, t), Classical{});
        CHECK(c.den().is_constant());
        CHECK((c.var_mask() & ~(1U << static_cast<int>(Var::delta))) == 0U);
      }
}

TEST_CASE("property: dimq recurrence") {
  for (int p = 0; p <= 6; ++p)
    CHECK(qint(2, -2 * p - 2) / qint(1, -p - 1) * qint(2, -p) * dimq_vector(p) ==
          qint(2, -2 * p) / qint(1, -p) * qint(0, p + 1) * dimq_vector(p + 1));
}

TEST_CASE("completeness coefficients") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      CHECK(completeness_C(a, b, 0).is_one());
      if (a >= 1 && b >= 1) CHECK(completeness_C(a, b, 1) == qint(0, a) * qint(0, b) / brace(a + b - 1));
    }
  CHECK(completeness_C(1, 1, 1) == ScalarK(1) / brace(1));
  CHECK_THROWS_AS(completeness_C(1, 2, 2), Error);
  CHECK_THROWS_AS(completeness_C(1, 2, -1), Error);
}

TEST_CASE("Fierz coefficients") {
  CHECK(fierz(0, 0).is_one());
  CHECK(fierz(1, 0) == ScalarK::delta());
  ScalarK f11 = -qint(2, -2) * qint(2, 0) / (brace(0) * brace(1));
  CHECK(fierz(1, 1) == f11);
  CHECK(fierz(1, 1) == S("-[2n-2][2n]/({0}{1})"));
  CHECK(fierz_a1(1) == f11);
  CHECK(fierz_a1(2) == qint(2, -4) * qint(2, 0) * qint(2, -1) / brace_product(0, 2));
  CHECK_THROWS_AS(fierz_a1(0), Error);
  for (int a = 0; a <= 5; ++a) CHECK(fierz(a, 0) == projector_loop(a));
  for (int a = 1; a <= 6; ++a) CHECK(fierz(a, 1) == fierz_a1(a));
}

TEST_CASE("property: Fierz symmetry and bar invariance") {
  for (int a = 0; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      ScalarK f = fierz(a, b);
      CHECK(f == fierz(b, a));
      CHECK(f.bar() == f);
    }
}

TEST_CASE("regression: printed F(a,0)") {
  CHECK(fierz_a0(0).is_one());
  CHECK(fierz_a0(1) == S("1/2"));
  CHECK_FALSE(fierz_a0(1) == fierz(1, 0));
  for (int a = 1; a <= 4; ++a) CHECK_FALSE(fierz_a0(a) == fierz(a, 0));
}

TEST_CASE("Fierz recurrence and column product") {
  // The three-term recurrence holds in the b = 0 column only.
  for (int a = 0; a <= 6; ++a) CHECK(fierz_recurrence_check(a, 0));
  for (int b = 1; b <= 3; ++b)
    for (int a = 0; a + b <= 6; ++a) CHECK_FALSE(fierz_recurrence_check(a, b));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(fierz_column_product(a, b, 0) == ScalarK::Delta() * fierz(a, 0) * fierz(b, 0));
  CHECK(fierz_column_product(1, 2, 1) ==
        ScalarK::Delta() * brace(0) / qint(2, 0) * fierz(1, 1) * fierz(2, 1));
}

TEST_CASE("expansion coefficient") {
  for (int p = 0; p <= 10; p += 2) CHECK(exp_coeff(p) == exp_coeff_general(p));
  CHECK(exp_coeff(0) == ScalarK(1) / brace(1));
  CHECK_THROWS_AS(exp_coeff(1), Error);
  CHECK_THROWS_AS(exp_coeff(-2), Error);
  CHECK(exp_coeff_general(1) == S("z/(z^2 q^-1 - q^2)"));
}

TEST_CASE("oracle: numeric probe at q=2, n=3, Delta=5") {
  // Values from an independent rational-arithmetic evaluation of the closed
  // forms at z = q^n.
  const std::pair<ScalarK, const char*> cases[] = {
      {fierz(0, 1), "21/4"},
      {fierz(0, 2), "7161/272"},
      {fierz(0, 3), "7161/64"},
      {fierz(1, 1), "-105/8"},
      {fierz(1, 2), "7161/272"},
      {fierz(1, 3), "0"},
      {fierz(2, 2), "-7161/1156"},
      {fierz(2, 3), "-150381/1088"},
      {fierz(3, 3), "0"},
      {theta_vector(1, 0, 0), "357/16"},
      {threej_spinor(1, 0, 0), "105/4"},
      {theta_vector(1, 1, 0), "7161/64"},
      {threej_spinor(1, 1, 0), "35805/272"},
      {theta_vector(1, 1, 1), "93093/544"},
      {threej_spinor(1, 1, 1), "11636625/18496"},
      {theta_vector(2, 1, 0), "5797/32"},
      {threej_spinor(2, 1, 0), "35805/64"},
      {theta_vector(2, 1, 1), "4433/32"},
      {threej_spinor(2, 1, 1), "9774765/4352"},
      {dimq_vector(2), "7161/64"},
      {dimq_vector(3), "5797/32"},
      {dimq_vector(4), "7161/64"},
  };
  for (const auto& [value, expect] : cases) CHECK(probe(value).constant_value() == mpq_class(expect));
}

TEST_CASE("Fierz table") {
  FierzTable t = FierzTable::generate(3, 2);
  CHECK(t.max_a() == 3);
  CHECK(t.max_b() == 2);
  CHECK(t.entry(1, 1) == fierz(1, 1));
  CHECK(t.entry(3, 2) == fierz(3, 2));
  CHECK(t.symmetric());
  CHECK_THROWS_AS(t.entry(0, 3), Error);
  std::string text = t.to_json();
  FierzTable back = FierzTable::from_json(text);
  CHECK(back.to_json() == text);
  CHECK(back.entry(2, 2) == fierz(2, 2));
  CHECK_THROWS_AS(FierzTable::from_json("{\"version\": 1}"), Error);
  CHECK_THROWS_AS(FierzTable::from_json("not json"), Error);
  CHECK_THROWS_AS(FierzTable::from_json(R"({"version":1,"max_a":0,"max_b":0,"entries":[{"a":0,"b":0,"value":"q+"}]})"),
                  Error);
}
