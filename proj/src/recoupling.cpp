#include "qspin/recoupling.hpp"

#include <json.hpp>

#include "qspin/error.hpp"
#include "qspin/parallel.hpp"
#include "qspin/qcomb.hpp"

namespace qspin {

namespace {

ScalarK sign(long e) { return (e % 2 == 0) ? ScalarK(1) : ScalarK(-1); }

ScalarK qz(int qe, int ze) { return ScalarK::q().pow(qe) * ScalarK::z().pow(ze); }

// [2n]!/[2n-a]!
ScalarK ffact_2n(int a) { return ffact_ext(2, 0, a); }

void need_nonnegative(std::initializer_list<int> xs, const char* what) {
  for (int x : xs)
    if (x < 0) fail(ErrorKind::ArgumentOutOfRange, std::string(what) + ": negative argument");
}

}  // namespace

bool AdmissibleTriple::admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a + b >= c && b + c >= a && c + a >= b;
}

AdmissibleTriple AdmissibleTriple::from_labels(int a, int b, int c) {
  if (!admissible(a, b, c))
    fail(ErrorKind::InadmissibleTriple, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                            std::to_string(c) + ") is not admissible");
  AdmissibleTriple t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.r = (a + b - c) / 2;
  t.s = (b + c - a) / 2;
  t.t = (a + c - b) / 2;
  return t;
}

AdmissibleTriple AdmissibleTriple::from_internal(int r, int s, int t) {
  need_nonnegative({r, s, t}, "admissible triple");
  return from_labels(r + t, r + s, s + t);
}

ScalarK brace_product(int lo, int hi) {
  ScalarK out(1);
  for (int k = lo; k <= hi; ++k) out *= brace(k);
  return out;
}

ScalarK dimq_vector(int a) {
  need_nonnegative({a}, "dimq_vector");
  return brace(a) / brace(0) * qbinom_ext(2, 0, a);
}

ScalarK dimq_vector_printed(int a) {
  need_nonnegative({a}, "dimq_vector_printed");
  return brace(1) / brace(0) * qbinom_ext(2, 0, a);
}

ScalarK curl(int a) { return qz(-a * a, 2 * a); }

ScalarK twist(int r, int s, int t) {
  return sign(static_cast<long>(s) * t + static_cast<long>(r) * s + static_cast<long>(r) * t) *
         qz((s + t) * (s + r) - 2 * r * t, -2 * s);
}

ScalarK tadpole_chain(int a) {
  need_nonnegative({a}, "tadpole_chain");
  ScalarK out = ScalarK::Delta();
  for (int k = 1; k <= a; ++k) out *= qint(0, k) / brace(k);
  return out;
}

ScalarK projector_loop(int a) {
  need_nonnegative({a}, "projector_loop");
  return qfact(a) * dimq_vector(a) / brace_product(1, a);
}

ScalarK vertex_collapse(const AdmissibleTriple& t) {
  if (!AdmissibleTriple::admissible(t.a, t.b, t.c) || t.r + t.t != t.a || t.r + t.s != t.b ||
      t.s + t.t != t.c)
    fail(ErrorKind::InadmissibleTriple, "inconsistent admissible triple");
  return ScalarK::Delta() * qfact(t.a) * qfact(t.b) * qfact(t.c) /
         (brace_product(1, t.r + t.s + t.t) * qfact(t.r) * qfact(t.s) * qfact(t.t));
}

ScalarK gamma_cross_coeff(int p) { return qint(0, p + 1) / brace(p + 1); }

ScalarK leg_hop(int r) { return brace(r) / brace(r + 1) * (qint(0, r + 1) / qint(0, r + 2)); }

ScalarK leg_hop_iter(int a, int r) {
  return brace(a) / brace(a + r + 1) * (qint(0, a + 1) / qint(0, a + r + 2));
}

ScalarK bubble(int a, int b, int m) {
  need_nonnegative({a, b, m}, "bubble");
  ScalarK out(1);
  for (int k = 0; k < m; ++k) out *= brace(k) / (brace(a + k) * brace(b + k)) * qint(2, -a - b - k);
  return out;
}

bool check_bubble_identity(int a, int b, int m) {
  return qint(2, -b - m) * brace(a + m) - qint(0, a) * brace(b) == qint(2, -a - b - m) * brace(m);
}

ScalarK theta_spinor(int a) {
  need_nonnegative({a}, "theta_spinor");
  return ScalarK::Delta() * ffact_2n(a) / brace_product(0, a - 1);
}

ScalarK theta_spinor_printed(int a) {
  need_nonnegative({a}, "theta_spinor_printed");
  return ScalarK::Delta() * (brace(1) / brace(0)) * ffact_2n(a) / brace_product(1, a);
}

ScalarK x_coeff(int r, int s, int t) {
  need_nonnegative({r, s, t}, "x_coeff");
  return brace_product(0, r - 1) * brace_product(0, s - 1) * brace_product(0, t - 1) /
         (brace_product(0, r + s - 1) * brace_product(0, r + t - 1) * brace_product(0, s + t - 1));
}

ScalarK threej_spinor(int r, int s, int t) {
  return ScalarK::Delta() * x_coeff(r, s, t) * ffact_2n(r + s + t);
}

ScalarK theta_vector(int r, int s, int t) {
  return x_coeff(r, s, t) * brace_product(1, r + s + t) * qfact(r) * qfact(s) * qfact(t) /
         (qfact(r + s) * qfact(r + t) * qfact(s + t)) * ffact_2n(r + s + t);
}

ScalarK threej_double(int r, int s, int t) {
  int a = r + t, b = r + s, c = s + t;
  ScalarK D = ScalarK::Delta();
  return D * D / brace_product(0, r + s + t - 1) * x_coeff(r, s, t) * qfact(a) * qfact(b) *
         qfact(c) / (qfact(r) * qfact(s) * qfact(t)) * ffact_2n(r + s + t);
}

ScalarK completeness_C(int a, int b, int m) {
  if (a < 0 || b < 0 || m < 0 || m > std::min(a, b))
    fail(ErrorKind::ArgumentOutOfRange, "completeness_C needs 0 <= m <= min(a, b)");
  return qbinom(a, m) * qbinom(b, m) * qfact(m) / brace_product(a + b - 2 * m + 1, a + b - m);
}

ScalarK fierz(int a, int b) {
  need_nonnegative({a, b}, "fierz");
  ScalarK out;
  for (int m = 0; m <= std::min(a, b); ++m) {
    long e = static_cast<long>(a) * b - static_cast<long>(m) * m;
    out += completeness_C(a, b, m) * sign(e) * qz(a * b - 2 * (a - m) * (b - m), -2 * m) *
           x_coeff(a - m, b - m, m) * ffact_2n(a + b - m);
  }
  return out;
}

ScalarK fierz_a0(int a) {
  need_nonnegative({a}, "fierz_a0");
  ScalarK out(1);
  for (int k = 0; k < a; ++k) out /= brace_shifted(k);
  return out;
}

ScalarK fierz_a1(int a) {
  if (a < 1) fail(ErrorKind::ArgumentOutOfRange, "fierz_a1 needs a >= 1");
  return sign(a) * qint(2, -2 * a) * ffact_2n(a) / brace_product(0, a);
}

ScalarK fierz_recurrence_residual(int a, int b) {
  need_nonnegative({a, b}, "fierz recurrence");
  return fierz(a + 2, b) - qint(2, -b) / brace(b) * fierz(a + 1, b) +
         qint(0, a + 1) * qint(2, -a) / (brace(a + 1) * brace(a)) * fierz(a, b);
}

bool fierz_recurrence_check(int a, int b) { return fierz_recurrence_residual(a, b).is_zero(); }

ScalarK fierz_column_product(int a, int b, int c) {
  need_nonnegative({a, b, c}, "fierz_column_product");
  ScalarK out = ScalarK::Delta() * fierz(a, c) * fierz(b, c);
  for (int k = 0; k < c; ++k) out *= brace(k) / qint(2, -k);
  return out;
}

ScalarK exp_coeff(int p) {
  if (p < 0 || p % 2 != 0) fail(ErrorKind::ArgumentOutOfRange, "exp_coeff needs an even p >= 0");
  int h = p / 2;
  return ScalarK::q().pow(-h) / (qz(-h - 1, 1) + qz(h + 1, -1));
}

ScalarK exp_coeff_general(int p) {
  need_nonnegative({p}, "exp_coeff_general");
  ScalarK mq = -ScalarK::q();
  return ScalarK::z() / (qz(-1, 2) - mq.pow(p + 1));
}

// ------------------------------------------------------------- FierzTable

FierzTable FierzTable::generate(int max_a, int max_b) {
  need_nonnegative({max_a, max_b}, "FierzTable");
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= max_b; ++b)
      if (a <= b || b > max_a || a > max_b) cells.emplace_back(a, b);
  std::vector<ScalarK> values(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) { values[i] = fierz(cells[i].first, cells[i].second); });
  FierzTable t;
  t.max_a_ = max_a;
  t.max_b_ = max_b;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [a, b] = cells[i];
    t.entries_[{a, b}] = values[i];
    if (b <= max_a && a <= max_b) t.entries_[{b, a}] = values[i];
  }
  return t;
}

const ScalarK& FierzTable::entry(int a, int b) const {
  auto it = entries_.find({a, b});
  if (it == entries_.end()) fail(ErrorKind::ArgumentOutOfRange, "Fierz table has no such entry");
  return it->second;
}

bool FierzTable::symmetric() const {
  for (const auto& [key, value] : entries_) {
    auto it = entries_.find({key.second, key.first});
    if (it != entries_.end() && !(it->second == value)) return false;
  }
  return true;
}

std::string FierzTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["generator"] = "completeness-sum";
  doc["max_a"] = max_a_;
  doc["max_b"] = max_b_;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries_)
    doc["entries"].push_back({{"a", key.first}, {"b", key.second}, {"value", value.to_string()}});
  return doc.dump(2);
}

FierzTable FierzTable::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaError, std::string("Fierz table: ") + e.what());
  }
  FierzTable t;
  try {
    if (doc.at("version").get<int>() != kVersion) fail(ErrorKind::SchemaError, "Fierz table: unknown version");
    t.max_a_ = doc.at("max_a").get<int>();
    t.max_b_ = doc.at("max_b").get<int>();
    for (const auto& e : doc.at("entries")) {
      int a = e.at("a").get<int>(), b = e.at("b").get<int>();
      if (a < 0 || b < 0 || a > t.max_a_ || b > t.max_b_)
        fail(ErrorKind::SchemaError, "Fierz table: entry out of range");
      t.entries_[{a, b}] = parse_scalar(e.at("value").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaError, std::string("Fierz table: ") + e.what());
  }
  if (t.entries_.size() != static_cast<std::size_t>(t.max_a_ + 1) * (t.max_b_ + 1))
    fail(ErrorKind::SchemaError, "Fierz table: missing entries");
  return t;
}

}  // namespace qspin
