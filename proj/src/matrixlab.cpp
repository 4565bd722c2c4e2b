#include "qspin/matrixlab.hpp"

#include <sstream>

#include "qspin/error.hpp"
#include "qspin/qcomb.hpp"

namespace qspin {

namespace {

RatFun Q(int e = 1) { return RatFun::variable(Var::q, e); }
RatFun qdiff() { return Q() - Q(-1); }

RatFun level_z(int n) { return Q(n); }

// Weight of basis index i: i - sign(i), so that indices -n..-1, 1..n carry
// weights -(n-1)..0, 0..n-1.
int weight(int i) { return i > 0 ? i - 1 : i + 1; }

struct Basis {
  int n;
  std::size_t N() const { return static_cast<std::size_t>(2 * n); }
  std::size_t pos(int i) const { return static_cast<std::size_t>(i < 0 ? i + n : i + n - 1); }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = -n; i <= n; ++i)
      if (i != 0) out.push_back(i);
    return out;
  }
  // E_ij ⊗ E_kl sends e_j ⊗ e_l to e_i ⊗ e_k.
  void add(SquareMatrixK& m, int i, int j, int k, int l, const RatFun& c) const {
    m.add_to(pos(i) * N() + pos(k), pos(j) * N() + pos(l), c);
  }
};

SquareMatrixK power_identity(std::size_t base, int times) {
  std::size_t d = 1;
  for (int k = 0; k < times; ++k) d *= base;
  return SquareMatrixK::identity(d);
}

// 1^{⊗(i-1)} ⊗ op ⊗ 1^{⊗(strands-i-1)}
SquareMatrixK embed(const SquareMatrixK& op, std::size_t base, int i, int strands) {
  SquareMatrixK left = power_identity(base, i - 1);
  SquareMatrixK right = power_identity(base, strands - i - 1);
  return kron(kron(left, op), right);
}

SquareMatrixK from_rows(const std::vector<std::vector<RatFun>>& rows) {
  SquareMatrixK m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  return m;
}

SquareMatrixK cup_from_skein(const SquareMatrixK& s, const SquareMatrixK& si) {
  return SquareMatrixK::identity(s.dim()) - qdiff().inverse() * (s - si);
}

std::string term_name(const Basis& b, std::size_t row, std::size_t col) {
  auto idx = b.indices();
  std::ostringstream os;
  os << "E_{" << idx[row / b.N()] << "," << idx[col / b.N()] << "}(x)E_{" << idx[row % b.N()] << ","
     << idx[col % b.N()] << "}";
  return os.str();
}

}  // namespace

// ------------------------------------------------------------ representations

BraidRep hecke_rep2() {
  BraidRep r;
  r.name = "hecke-2";
  r.strands = 3;
  r.z = RatFun::variable(Var::z);
  auto s1 = [](int e) { return from_rows({{Q(e), 0}, {1, -Q(-e)}}); };
  auto s2 = [](int e) { return from_rows({{-Q(-e), 1}, {0, Q(e)}}); };
  r.sigma = {s1(1), s2(1)};
  r.sigma_inv = {s1(-1), s2(-1)};
  return r;
}

namespace {

// corner_sign = -1 gives the solution of the braid relation; +1 the
// displayed matrices, which are neither inverse pairs nor braided.
BraidRep bmw_rep3_with(int corner_sign) {
  BraidRep r;
  r.name = corner_sign < 0 ? "bmw-3" : "bmw-3-printed";
  r.strands = 3;
  RatFun z = RatFun::variable(Var::z);
  r.z = z;
  RatFun corner = z * Q(-2) + z.inverse() * Q(2);
  auto s1 = [&](int e) {
    return from_rows(
        {{z.pow(-2 * e) * Q(e), 0, 0}, {-z.pow(corner_sign * e) * corner, -Q(-e), 0}, {Q(-e), 1, Q(e)}});
  };
  auto s2 = [&](int e) {
    return from_rows(
        {{Q(e), 1, Q(-e)}, {0, -Q(-e), -z.pow(corner_sign * e) * corner}, {0, 0, z.pow(-2 * e) * Q(e)}});
  };
  r.sigma = {s1(1), s2(1)};
  r.sigma_inv = {s1(-1), s2(-1)};
  for (int i = 0; i < 2; ++i) r.cup.push_back(cup_from_skein(r.sigma[i], r.sigma_inv[i]));
  return r;
}

}  // namespace

BraidRep bmw_rep3() { return bmw_rep3_with(-1); }
BraidRep bmw_rep3_printed() { return bmw_rep3_with(1); }

SquareMatrixK printed_sigma_inverse(int n) {
  Basis B{n};
  SquareMatrixK si(B.N() * B.N());
  const RatFun h = qdiff();
  for (int i : B.indices()) {
    B.add(si, i, i, i, i, Q(-1));
    B.add(si, -i, i, i, -i, -Q());
  }
  for (int i : B.indices())
    for (int j : B.indices()) {
      if (j != i && j != -i) B.add(si, i, j, j, i, 1);
      if (i > j) B.add(si, i, i, j, j, -h);
      if (j > -i) B.add(si, i, j, -i, -j, h * Q(weight(i) + weight(j)));
    }
  return si;
}

BraidData build_braid_data(int n) {
  if (n < 1 || n > 3) fail(ErrorKind::UnsupportedSize, "braid data is built for n in {1, 2, 3}");
  Basis B{n};
  const std::size_t D = B.N() * B.N();
  const RatFun h = qdiff();
  BraidData b;
  b.n = n;
  b.u_mat = SquareMatrixK(D);
  b.sigma = SquareMatrixK(D);
  for (int i : B.indices())
    for (int j : B.indices()) B.add(b.u_mat, i, j, -i, -j, Q(weight(i) + weight(j)));
  for (int i : B.indices()) {
    B.add(b.sigma, i, i, i, i, Q());
    B.add(b.sigma, i, -i, -i, i, Q(-1));
  }
  for (int i : B.indices())
    for (int j : B.indices()) {
      if (j != i && j != -i) B.add(b.sigma, i, j, j, i, 1);
      if (i < j) B.add(b.sigma, i, i, j, j, h);
      if (j < -i) B.add(b.sigma, i, j, -i, -j, -h * Q(weight(i) + weight(j)));
    }
  b.sigma_inv = b.sigma - h * (SquareMatrixK::identity(D) - b.u_mat);

  SquareMatrixK printed = printed_sigma_inverse(n);
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t c = 0; c < D; ++c) {
      RatFun want = b.sigma_inv.entry(r, c), shown = printed.entry(r, c);
      if (!(want == shown))
        b.warnings.push_back("sigma^-1 term " + term_name(B, r, c) + ": inverse has " + want.to_string() +
                             ", displayed sum has " + shown.to_string());
    }

  // Trace weight from the rank-one factorization u = |cup><cap|: closing the
  // second strand of u must give the identity, which fixes μ_k from the
  // diagonal entry at (-k, k).
  b.mu = SquareMatrixK(B.N());
  for (int k : B.indices()) {
    std::size_t at = B.pos(-k) * B.N() + B.pos(k);
    RatFun c = b.u_mat.entry(at, at);
    if (c.is_zero()) fail(ErrorKind::CalibrationFailed, "cup-cap has a zero pairing");
    b.mu.set(B.pos(k), B.pos(k), c.inverse());
  }
  // Closing the right strand of u with μ and the left strand with μ^{-1}
  // must both give the identity, and tr μ must be the loop value.
  auto close = [&](bool second) {
    SquareMatrixK out(B.N());
    for (std::size_t a = 0; a < B.N(); ++a)
      for (std::size_t c = 0; c < B.N(); ++c)
        for (std::size_t k = 0; k < B.N(); ++k) {
          std::size_t row = second ? a * B.N() + k : k * B.N() + a;
          std::size_t col = second ? c * B.N() + k : k * B.N() + c;
          RatFun x = b.u_mat.entry(row, col);
          if (x.is_zero()) continue;
          RatFun m = b.mu.entry(k, k);
          out.add_to(a, c, x * (second ? m : m.inverse()));
        }
    return out;
  };
  SquareMatrixK id = SquareMatrixK::identity(B.N());
  RatFun z = level_z(n);
  RatFun loop = (z * Q(-1) + z.inverse() * Q()) * specialize(qint(1, 0), IntegerLevel{n});
  if (!(close(true) == id) || !(close(false) == id) || !(b.mu.trace() == loop))
    fail(ErrorKind::CalibrationFailed, "no diagonal weight reproduces the loop value");
  return b;
}

BraidInvariants check_braid_invariants(const BraidData& b) {
  BraidInvariants r;
  const std::size_t D = b.sigma.dim();
  const RatFun h = qdiff();
  SquareMatrixK id = SquareMatrixK::identity(D);
  RatFun z = level_z(b.n);
  r.skein = b.sigma - b.sigma_inv == h * (id - b.u_mat);
  r.inverse = b.sigma * b.sigma_inv == id && b.sigma_inv * b.sigma == id;
  r.curl = b.sigma * b.u_mat == z.pow(-2) * Q() * b.u_mat && b.sigma_inv * b.u_mat == z.pow(2) * Q(-1) * b.u_mat;
  RatFun loop = (z * Q(-1) + z.inverse() * Q()) * specialize(qint(1, 0), IntegerLevel{b.n});
  r.loop = b.u_mat * b.u_mat == loop * b.u_mat;
  BraidRep t = tensor_rep(b, 3);
  r.braid = t.sigma[0] * t.sigma[1] * t.sigma[0] == t.sigma[1] * t.sigma[0] * t.sigma[1];
  return r;
}

BraidRep tensor_rep(const BraidData& b, int strands) {
  if (strands < 2) fail(ErrorKind::ArgumentOutOfRange, "a tensor representation needs two strands");
  BraidRep r;
  r.name = "V^" + std::to_string(strands) + " n=" + std::to_string(b.n);
  r.strands = strands;
  r.z = level_z(b.n);
  for (int i = 1; i < strands; ++i) {
    r.sigma.push_back(embed(b.sigma, b.dim_v(), i, strands));
    r.sigma_inv.push_back(embed(b.sigma_inv, b.dim_v(), i, strands));
    r.cup.push_back(embed(b.u_mat, b.dim_v(), i, strands));
  }
  return r;
}

// ------------------------------------------------------------ spectral R

std::string to_string(RKind k) {
  switch (k) {
    case RKind::HeckeF: return "HeckeF";
    case RKind::HeckeE: return "HeckeE";
    case RKind::BMW_D: return "BMW_D";
    case RKind::BMW_A: return "BMW_A";
  }
  return "?";
}

RCoefficients spectral_coefficients(RKind kind, const RatFun& x, const RatFun& z) {
  const RatFun xi = x.inverse(), zi = z.inverse(), h = qdiff();
  const RatFun base = x * Q() - xi * Q(-1);
  RCoefficients c;
  switch (kind) {
    case RKind::HeckeF:
      c = {x, -xi, RatFun(), base};
      break;
    case RKind::HeckeE:
      c = {xi, -x, RatFun(), base};
      break;
    case RKind::BMW_D: {
      RatFun a = x * z * Q(-1) - xi * zi * Q();
      c = {a * x, -a * xi, (z * Q(-1) - zi * Q()) * h, a * base};
      break;
    }
    case RKind::BMW_A: {
      RatFun a = x * zi + xi * z;
      c = {a * xi, -a * x, (z + zi) * h, a * base};
      break;
    }
  }
  return c;
}

SquareMatrixK spectral_numerator(RKind kind, const BraidRep& rep, int i, const RatFun& x) {
  if (i < 1 || i >= rep.strands) fail(ErrorKind::ArgumentOutOfRange, "generator index out of range");
  bool bmw = kind == RKind::BMW_D || kind == RKind::BMW_A;
  if (bmw && !rep.has_cup()) fail(ErrorKind::ArgumentOutOfRange, "BMW R-matrix needs a cup-cap operator");
  RCoefficients c = spectral_coefficients(kind, x, rep.z);
  SquareMatrixK m = c.sigma * rep.sigma[i - 1] + c.sigma_inv * rep.sigma_inv[i - 1];
  if (bmw) m = m + c.cup * rep.cup[i - 1];
  return m;
}

SquareMatrixK spectral_R(RKind kind, const BraidRep& rep, int i, const RatFun& x) {
  RCoefficients c = spectral_coefficients(kind, x, rep.z);
  if (c.denom.is_zero()) fail(ErrorKind::DivisorVanishes, to_string(kind) + " denominator vanishes");
  return c.denom.inverse() * spectral_numerator(kind, rep, i, x);
}

namespace {
const RatFun kU = RatFun::variable(Var::u);
const RatFun kV = RatFun::variable(Var::v);
}  // namespace

bool check_ybe(RKind kind, const BraidRep& rep) {
  // The scalar denominators d(u) d(uv) d(v) agree on both sides, so the
  // numerators alone must satisfy the relation.
  auto N = [&](int i, const RatFun& x) { return spectral_numerator(kind, rep, i, x); };
  RatFun uv = kU * kV;
  return N(1, kU) * N(2, uv) * N(1, kV) == N(2, kV) * N(1, uv) * N(2, kU);
}

bool check_unitarity(RKind kind, const BraidRep& rep) {
  SquareMatrixK id = SquareMatrixK::identity(rep.dim());
  for (int i = 1; i < rep.strands; ++i)
    if (!(spectral_R(kind, rep, i, kU) * spectral_R(kind, rep, i, kU.inverse()) == id)) return false;
  return true;
}

bool check_r_at_one(RKind kind, const BraidRep& rep) {
  SquareMatrixK id = SquareMatrixK::identity(rep.dim());
  for (int i = 1; i < rep.strands; ++i)
    if (!(spectral_R(kind, rep, i, kU).evaluate(Var::u, 1) == id)) return false;
  return true;
}

bool check_hecke_quotient(RKind bmw_kind) {
  RKind hecke = bmw_kind == RKind::BMW_D ? RKind::HeckeF : RKind::HeckeE;
  RatFun z = RatFun::variable(Var::z);
  RCoefficients b = spectral_coefficients(bmw_kind, kU, z);
  RCoefficients h = spectral_coefficients(hecke, kU, z);
  return b.sigma / b.denom == h.sigma / h.denom && b.sigma_inv / b.denom == h.sigma_inv / h.denom;
}

CrossingReport check_crossing(RKind bmw_kind) {
  // Elements c1 + cs σ + cu u with σ^{-1} = σ - h + h u.
  struct Elem {
    RatFun one, sig, cup;
    bool operator==(const Elem&) const = default;
  };
  const RatFun h = qdiff();
  const RatFun z = RatFun::variable(Var::z), zi = z.inverse(), ui = kU.inverse();
  auto numerator = [&](const RatFun& sig, const RatFun& sig_inv, const RatFun& cup) {
    return Elem{-h * sig_inv, sig + sig_inv, cup + h * sig_inv};
  };
  auto rotate = [&](const Elem& e) { return Elem{e.cup - h * e.sig, e.sig, e.one + h * e.sig}; };
  auto scale = [](const RatFun& c, const Elem& e) { return Elem{c * e.one, c * e.sig, c * e.cup}; };

  CrossingReport r;
  if (bmw_kind == RKind::BMW_D) {
    RCoefficients at_u = spectral_coefficients(RKind::BMW_D, kU, z);
    RatFun w = ui * zi * Q();
    RCoefficients at_w = spectral_coefficients(RKind::BMW_D, w, z);
    Elem lhs = rotate(numerator(at_u.sigma, at_u.sigma_inv, at_u.cup));
    Elem rhs = numerator(at_w.sigma, at_w.sigma_inv, at_w.cup);
    r.exact = lhs == rhs;
    RatFun shown = (kU - ui) * (kU * z * Q(-2) - ui * zi * Q(-2));
    r.printed = scale(at_w.denom, lhs) == scale(shown, rhs);
  } else if (bmw_kind == RKind::BMW_A) {
    RCoefficients at_u = spectral_coefficients(RKind::BMW_A, kU, z);
    Elem lhs = rotate(numerator(at_u.sigma, at_u.sigma_inv, at_u.cup));
    // At w = i z / u: (w z^-1 + w^-1 z)(w^-1 σ - w σ^-1) = (u^-1 - u)(u z^-1 σ + u^-1 z σ^-1)
    // and the denominator is -(u^-1 - u)(u^-1 z q + u z^-1 q^-1).
    RatFun a = ui - kU;
    Elem rhs = numerator(a * kU * zi, a * ui * z, (z + zi) * h);
    RatFun denom_w = -a * (ui * z * Q() + kU * zi * Q(-1));
    r.exact = lhs == rhs;
    RatFun shown = (kU - ui) * (kU * zi * Q(-1) + ui * z * Q());
    r.printed = scale(denom_w, lhs) == scale(shown, rhs);
  } else {
    fail(ErrorKind::ArgumentOutOfRange, "crossing symmetry is stated for the BMW kinds");
  }
  return r;
}

// ------------------------------------------------------------ towers

namespace {

RKind tower_r_kind(TowerKind kind, bool bmw) {
  if (kind == TowerKind::E) return bmw ? RKind::BMW_A : RKind::HeckeE;
  return bmw ? RKind::BMW_D : RKind::HeckeF;
}

}  // namespace

std::vector<SquareMatrixK> idempotent_tower(TowerKind kind, const BraidData& b, int p_max) {
  int cap = b.n <= 2 ? 4 : 3;
  if (p_max < 1 || p_max > cap)
    fail(ErrorKind::UnsupportedSize, "tower depth " + std::to_string(p_max) + " exceeds the budget for n = " +
                                         std::to_string(b.n));
  RKind rk = tower_r_kind(kind, true);
  std::vector<SquareMatrixK> out{SquareMatrixK::identity(b.dim_v())};
  SquareMatrixK id_v = SquareMatrixK::identity(b.dim_v());
  for (int p = 1; p < p_max; ++p) {
    BraidRep rep = tensor_rep(b, p + 1);
    SquareMatrixK lifted = kron(out.back(), id_v);
    SquareMatrixK R = spectral_R(rk, rep, p, Q(p));
    out.push_back(lifted * R * lifted);
  }
  return out;
}

std::vector<SquareMatrixK> idempotent_tower(TowerKind kind, const BraidRep& rep, int p_max) {
  if (p_max < 1 || p_max > rep.strands)
    fail(ErrorKind::UnsupportedSize, "tower depth exceeds the strands of the representation");
  RKind rk = tower_r_kind(kind, rep.has_cup());
  std::vector<SquareMatrixK> out{SquareMatrixK::identity(rep.dim())};
  for (int p = 1; p < p_max; ++p) {
    const SquareMatrixK& x = out.back();
    out.push_back(x * spectral_R(rk, rep, p, Q(p)) * x);
  }
  return out;
}

TowerReport check_tower_element(TowerKind kind, const BraidRep& rep, const SquareMatrixK& x, int p) {
  TowerReport r;
  r.idempotent = x * x == x;
  RatFun lambda = kind == TowerKind::E ? -Q(-1) : Q();
  r.eigen = true;
  r.absorbs = true;
  RKind rk = tower_r_kind(kind, rep.has_cup());
  for (int i = 1; i <= p - 1; ++i) {
    const SquareMatrixK& s = rep.sigma[i - 1];
    SquareMatrixK lx = lambda * x;
    r.eigen = r.eigen && s * x == lx && x * s == lx;
    if (rep.has_cup()) {
      const SquareMatrixK& c = rep.cup[i - 1];
      r.eigen = r.eigen && (c * x).is_zero() && (x * c).is_zero();
    }
    RCoefficients co = spectral_coefficients(rk, kU, rep.z);
    SquareMatrixK N = spectral_numerator(rk, rep, i, kU);
    SquareMatrixK dx = co.denom * x;
    r.absorbs = r.absorbs && N * x == dx && x * N == dx;
  }
  return r;
}

// ------------------------------------------------------------ traces

ScalarK quantum_trace(const SquareMatrixK& x, const BraidData& b) {
  const std::size_t N = b.dim_v();
  int p = 0;
  std::size_t d = 1;
  while (d < x.dim()) {
    d *= N;
    ++p;
  }
  if (d != x.dim() || p == 0) fail(ErrorKind::ArgumentOutOfRange, "matrix does not act on a tensor power of V");
  std::vector<RatFun> mu(N);
  for (std::size_t k = 0; k < N; ++k) mu[k] = b.mu.entry(k, k);
  RatFun t;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    RatFun xi = x.entry(i, i);
    if (xi.is_zero()) continue;
    std::size_t rest = i;
    for (int k = 0; k < p; ++k) {
      xi *= mu[rest % N];
      rest /= N;
    }
    t += xi;
  }
  return ScalarK::from_normal(t);
}

ScalarK dimq_symmetric(int p) {
  if (p < 0) fail(ErrorKind::ArgumentOutOfRange, "dimq_symmetric needs p >= 0");
  if (p == 0) return ScalarK(1);
  ScalarK out = brace(1) * qint(1, 0);
  for (int k = 1; k < p; ++k) out *= qint(2, k - 2) * qint(1, k) / (qint(1, k - 1) * qint(0, k + 1));
  return out;
}

ScalarK dimq_symmetric_weyl(int p) {
  if (p < 0) fail(ErrorKind::ArgumentOutOfRange, "dimq_symmetric_weyl needs p >= 0");
  return qint(1, p - 1) / qint(1, -1) * qbinom_ext(2, p - 3, p);
}

}  // namespace qspin
