#include <algorithm>

#include "qspin/error.hpp"
#include "qspin/matrixlab.hpp"

namespace qspin {

namespace {

void check_same_dim(const SquareMatrixK& a, const SquareMatrixK& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::ArgumentOutOfRange, "matrix dimensions differ");
}

template <class F>
SquareMatrixK map_entries(const SquareMatrixK& a, F f) {
  SquareMatrixK out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& [j, x] : a.row(i)) out.set(i, j, f(x));
  return out;
}

}  // namespace

SquareMatrixK SquareMatrixK::identity(std::size_t dim) {
  SquareMatrixK m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), RatFun(1));
  return m;
}

std::size_t SquareMatrixK::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

RatFun SquareMatrixK::entry(std::size_t i, std::size_t j) const {
  const Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return RatFun();
}

void SquareMatrixK::set(std::size_t i, std::size_t j, const RatFun& value) {
  if (j >= dim()) fail(ErrorKind::ArgumentOutOfRange, "column out of range");
  Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  bool present = it != r.end() && it->first == j;
  if (value.is_zero()) {
    if (present) r.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    r.insert(it, {static_cast<std::uint32_t>(j), value});
  }
}

void SquareMatrixK::add_to(std::size_t i, std::size_t j, const RatFun& value) { set(i, j, entry(i, j) + value); }

bool SquareMatrixK::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

RatFun SquareMatrixK::trace() const {
  RatFun t;
  for (std::size_t i = 0; i < dim(); ++i) t += entry(i, i);
  return t;
}

SquareMatrixK SquareMatrixK::operator-() const {
  return map_entries(*this, [](const RatFun& x) { return -x; });
}

SquareMatrixK operator+(const SquareMatrixK& a, const SquareMatrixK& b) {
  check_same_dim(a, b);
  SquareMatrixK out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& x = a.rows_[i];
    const auto& y = b.rows_[i];
    auto& o = out.rows_[i];
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
        o.push_back(x[p++]);
      } else if (p == x.size() || y[q].first < x[p].first) {
        o.push_back(y[q++]);
      } else {
        RatFun s = x[p].second + y[q].second;
        if (!s.is_zero()) o.emplace_back(x[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
  }
  return out;
}

SquareMatrixK operator-(const SquareMatrixK& a, const SquareMatrixK& b) { return a + (-b); }

SquareMatrixK operator*(const SquareMatrixK& a, const SquareMatrixK& b) {
  check_same_dim(a, b);
  const std::size_t n = a.dim();
  SquareMatrixK out(n);
  std::vector<RatFun> acc(n);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    cols.clear();
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) {
        if (!used[j]) {
          used[j] = 1;
          cols.push_back(j);
          acc[j] = x * y;
        } else {
          acc[j] += x * y;
        }
      }
    std::sort(cols.begin(), cols.end());
    auto& o = out.rows_[i];
    for (auto j : cols) {
      if (!acc[j].is_zero()) o.emplace_back(j, std::move(acc[j]));
      acc[j] = RatFun();
      used[j] = 0;
    }
  }
  return out;
}

SquareMatrixK operator*(const RatFun& c, const SquareMatrixK& a) {
  if (c.is_zero()) return SquareMatrixK(a.dim());
  return map_entries(a, [&](const RatFun& x) { return c * x; });
}

bool operator==(const SquareMatrixK& a, const SquareMatrixK& b) { return a.rows_ == b.rows_; }

SquareMatrixK SquareMatrixK::evaluate(Var v, const mpq_class& value) const {
  return map_entries(*this, [&](const RatFun& x) { return x.evaluate(v, value); });
}

SquareMatrixK SquareMatrixK::substitute(Var v, const Monomial& up, const Monomial& down) const {
  return map_entries(*this, [&](const RatFun& x) { return x.substitute(v, up, down); });
}

SquareMatrixK kron(const SquareMatrixK& a, const SquareMatrixK& b) {
  const std::size_t m = b.dim();
  SquareMatrixK out(a.dim() * m);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (const auto& [j, x] : a.row(i))
        for (const auto& [l, y] : b.row(k)) out.set(i * m + k, j * m + l, x * y);
  return out;
}

}  // namespace qspin
