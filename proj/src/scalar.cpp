#include "qspin/scalar.hpp"

#include <unordered_map>

#include "qspin/error.hpp"

namespace qspin {

struct ExprNode {
  enum class Kind { Const, Gen, QInt, Brace, BraceShifted, Leaf, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Const;
  mpq_class value;          // Const
  Generator gen{};          // Gen
  int p = 0, r = 0;         // QInt (b, a), Brace / BraceShifted (k), Pow (exponent)
  ExprPtr lhs, rhs;         // operands
  std::shared_ptr<const RatFun> leaf;  // Leaf
};

namespace {

using Kind = ExprNode::Kind;

RatFun var(Var v, int e = 1) { return RatFun::variable(v, e); }

RatFun delta_normal() {
  // (z - z^-1)/(q - q^-1) = (z^2 - 1) q / ((q^2 - 1) z)
  return (var(Var::z) - var(Var::z, -1)) / (var(Var::q) - var(Var::q, -1));
}

RatFun laurent(int qe, int ze) {
  return var(Var::q, qe) * var(Var::z, ze);
}

const RatFun& qdiff() {
  static const RatFun d = var(Var::q) - var(Var::q, -1);
  return d;
}

RatFun generator_normal(Generator g) {
  switch (g) {
    case Generator::q: return var(Var::q);
    case Generator::z: return var(Var::z);
    case Generator::delta: return delta_normal();
    case Generator::Delta: return var(Var::Delta);
    case Generator::u: return var(Var::u);
    case Generator::v: return var(Var::v);
  }
  return RatFun();
}

std::shared_ptr<const RatFun> share(RatFun r) { return std::make_shared<const RatFun>(std::move(r)); }

ExprPtr binary(Kind k, const ExprPtr& a, const ExprPtr& b) {
  ExprNode n;
  n.kind = k;
  n.lhs = a;
  n.rhs = b;
  return std::make_shared<const ExprNode>(std::move(n));
}

}  // namespace

ScalarK ScalarK::make(ExprNode node, RatFun normal) {
  return ScalarK(std::make_shared<const ExprNode>(std::move(node)), share(std::move(normal)));
}

ScalarK::ScalarK() : ScalarK(0L) {}

ScalarK::ScalarK(long c) : ScalarK(mpq_class(c)) {}

ScalarK::ScalarK(const mpq_class& c) {
  ExprNode n;
  n.kind = Kind::Const;
  n.value = c;
  expr_ = std::make_shared<const ExprNode>(std::move(n));
  normal_ = share(RatFun(c));
}

ScalarK ScalarK::generator(Generator g) {
  ExprNode n;
  n.kind = Kind::Gen;
  n.gen = g;
  return make(std::move(n), generator_normal(g));
}

ScalarK ScalarK::qint(int b, int a) {
  ExprNode n;
  n.kind = Kind::QInt;
  n.p = b;
  n.r = a;
  RatFun value = (laurent(a, b) - laurent(-a, -b)) / qdiff();
  return make(std::move(n), std::move(value));
}

ScalarK ScalarK::brace(int k) {
  ExprNode n;
  n.kind = Kind::Brace;
  n.p = k;
  return make(std::move(n), laurent(-k, 1) + laurent(k, -1));
}

ScalarK ScalarK::brace_shifted(int k) {
  ExprNode n;
  n.kind = Kind::BraceShifted;
  n.p = k;
  return make(std::move(n), laurent(k, 0) + laurent(-k, 0));
}

ScalarK ScalarK::from_normal(RatFun value) {
  auto shared = share(std::move(value));
  ExprNode n;
  n.kind = Kind::Leaf;
  n.leaf = shared;
  return ScalarK(std::make_shared<const ExprNode>(std::move(n)), shared);
}

bool ScalarK::depends_on(Generator g) const {
  unsigned mask = normal_->var_mask();
  switch (g) {
    case Generator::q: return mask & (1U << static_cast<int>(Var::q));
    case Generator::z: return mask & (1U << static_cast<int>(Var::z));
    case Generator::delta: return mask & 3U;
    case Generator::Delta: return mask & (1U << static_cast<int>(Var::Delta));
    case Generator::u: return mask & (1U << static_cast<int>(Var::u));
    case Generator::v: return mask & (1U << static_cast<int>(Var::v));
  }
  return false;
}

ScalarK ScalarK::operator-() const {
  ExprNode n;
  n.kind = Kind::Neg;
  n.lhs = expr_;
  return make(std::move(n), -*normal_);
}

ScalarK operator+(const ScalarK& a, const ScalarK& b) {
  return ScalarK(binary(Kind::Add, a.expr_, b.expr_), share(*a.normal_ + *b.normal_));
}

ScalarK operator-(const ScalarK& a, const ScalarK& b) {
  return ScalarK(binary(Kind::Sub, a.expr_, b.expr_), share(*a.normal_ - *b.normal_));
}

ScalarK operator*(const ScalarK& a, const ScalarK& b) {
  return ScalarK(binary(Kind::Mul, a.expr_, b.expr_), share(*a.normal_ * *b.normal_));
}

ScalarK operator/(const ScalarK& a, const ScalarK& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by a scalar that normalizes to 0");
  return ScalarK(binary(Kind::Div, a.expr_, b.expr_), share(*a.normal_ / *b.normal_));
}

ScalarK ScalarK::inverse() const { return ScalarK(1) / *this; }

ScalarK ScalarK::pow(int k) const {
  if (k < 0 && is_zero()) fail(ErrorKind::DivisionByZero, "negative power of zero");
  ExprNode n;
  n.kind = Kind::Pow;
  n.lhs = expr_;
  n.p = k;
  return make(std::move(n), normal_->pow(k));
}

namespace {

constexpr unsigned kQZ = (1U << static_cast<int>(Var::q)) | (1U << static_cast<int>(Var::z));

ExprPtr bar_expr(const ExprPtr& e, std::unordered_map<const ExprNode*, ExprPtr>& memo) {
  auto it = memo.find(e.get());
  if (it != memo.end()) return it->second;
  ExprPtr out;
  switch (e->kind) {
    case Kind::Const:
    case Kind::QInt:
    case Kind::Brace:
    case Kind::BraceShifted:
      out = e;  // bar-invariant
      break;
    case Kind::Gen:
      if (e->gen == Generator::q || e->gen == Generator::z) {
        ExprNode n;
        n.kind = Kind::Pow;
        n.lhs = e;
        n.p = -1;
        out = std::make_shared<const ExprNode>(std::move(n));
      } else {
        out = e;
      }
      break;
    case Kind::Leaf: {
      ExprNode n;
      n.kind = Kind::Leaf;
      n.leaf = std::make_shared<const RatFun>(e->leaf->invert_variables(kQZ));
      out = std::make_shared<const ExprNode>(std::move(n));
      break;
    }
    case Kind::Neg:
    case Kind::Pow: {
      ExprNode n = *e;
      n.lhs = bar_expr(e->lhs, memo);
      out = std::make_shared<const ExprNode>(std::move(n));
      break;
    }
    default: {
      ExprNode n = *e;
      n.lhs = bar_expr(e->lhs, memo);
      n.rhs = bar_expr(e->rhs, memo);
      out = std::make_shared<const ExprNode>(std::move(n));
      break;
    }
  }
  memo.emplace(e.get(), out);
  return out;
}

}  // namespace

ScalarK ScalarK::bar() const {
  std::unordered_map<const ExprNode*, ExprPtr> memo;
  return ScalarK(bar_expr(expr_, memo), share(normal_->invert_variables(kQZ)));
}

bool equal(const ScalarK& a, const ScalarK& b) { return a.normal() == b.normal(); }

ScalarK renormalize(const ScalarK& x) {
  return ScalarK::from_normal(RatFun::fraction(x.normal().num(), x.normal().den()));
}

// ---------------------------------------------------------- specialization

namespace {

struct ClassicalMap {
  RatFun delta_image;
  std::unordered_map<const ExprNode*, RatFun> memo;
};

RatFun classical_image(const ExprPtr& e, ClassicalMap& cm) {
  auto& memo = cm.memo;
  auto it = memo.find(e.get());
  if (it != memo.end()) return it->second;
  RatFun out;
  switch (e->kind) {
    case Kind::Const: out = RatFun(e->value); break;
    case Kind::Gen:
      switch (e->gen) {
        case Generator::q:
        case Generator::z: out = RatFun(1); break;
        case Generator::delta: out = cm.delta_image; break;
        case Generator::Delta: out = var(Var::Delta); break;
        case Generator::u: out = var(Var::u); break;
        case Generator::v: out = var(Var::v); break;
      }
      break;
    case Kind::QInt: out = RatFun(e->p) * cm.delta_image + RatFun(e->r); break;
    case Kind::Brace:
    case Kind::BraceShifted: out = RatFun(2); break;
    case Kind::Leaf: {
      const RatFun& f = *e->leaf;
      Poly d = f.den().evaluate(Var::q, 1).evaluate(Var::z, 1);
      if (d.is_zero())
        fail(ErrorKind::ClassicalSingular, "value has a pole at q = z = 1 and no generator-level form");
      out = RatFun::fraction(f.num().evaluate(Var::q, 1).evaluate(Var::z, 1), std::move(d));
      break;
    }
    case Kind::Neg: out = -classical_image(e->lhs, cm); break;
    case Kind::Pow: {
      RatFun base = classical_image(e->lhs, cm);
      if (e->p < 0 && base.is_zero())
        fail(ErrorKind::ClassicalSingular, "negative power of a subexpression with classical image 0");
      out = base.pow(e->p);
      break;
    }
    case Kind::Add: out = classical_image(e->lhs, cm) + classical_image(e->rhs, cm); break;
    case Kind::Sub: out = classical_image(e->lhs, cm) - classical_image(e->rhs, cm); break;
    case Kind::Mul: out = classical_image(e->lhs, cm) * classical_image(e->rhs, cm); break;
    case Kind::Div: {
      RatFun den = classical_image(e->rhs, cm);
      if (den.is_zero())
        fail(ErrorKind::ClassicalSingular, "divisor has classical image 0");
      out = classical_image(e->lhs, cm) / den;
      break;
    }
  }
  memo.emplace(e.get(), out);
  return out;
}

RatFun at_level(const ScalarK& x, int n) {
  if (n <= 0) fail(ErrorKind::ArgumentOutOfRange, "integer level must be positive");
  return x.normal().substitute(Var::z, Monomial::of(Var::q, n));
}

}  // namespace

RatFun specialize(const ScalarK& x, const SpecializationTarget& target) {
  if (std::holds_alternative<IntegerLevel>(target)) return at_level(x, std::get<IntegerLevel>(target).n);
  if (auto* c = std::get_if<Classical>(&target)) {
    ClassicalMap cm{c->delta ? RatFun(*c->delta) : var(Var::delta), {}};
    return classical_image(x.expr(), cm);
  }
  if (std::holds_alternative<ClassicalLimit>(target))
    return at_level(x, std::get<ClassicalLimit>(target).n).limit_at_one(Var::q);
  const auto& probe = std::get<NumericProbe>(target);
  if (probe.q0 == 0 || probe.q0 == 1 || probe.q0 == -1)
    fail(ErrorKind::ArgumentOutOfRange, "probe point q0 must avoid 0 and +-1");
  RatFun r = at_level(x, probe.n).evaluate(Var::q, probe.q0).evaluate(Var::Delta, probe.Delta0);
  if (!r.is_constant())
    fail(ErrorKind::ArgumentOutOfRange, "numeric probe leaves free spectral parameters");
  return r;
}

std::string target_to_string(const SpecializationTarget& target) {
  if (auto* t = std::get_if<IntegerLevel>(&target)) return "IntegerLevel(" + std::to_string(t->n) + ")";
  if (auto* c = std::get_if<Classical>(&target))
    return c->delta ? "Classical(delta=" + c->delta->get_str() + ")" : "Classical";
  if (auto* t = std::get_if<ClassicalLimit>(&target)) return "ClassicalLimit(" + std::to_string(t->n) + ")";
  const auto& p = std::get<NumericProbe>(target);
  return "NumericProbe(" + p.q0.get_str() + ", " + std::to_string(p.n) + ", " + p.Delta0.get_str() + ")";
}

}  // namespace qspin
