#include "lieelem/linalg.hpp"

#include <algorithm>

namespace lieelem {

Rational det(const QMatrix& input) {
  if (!input.is_square()) throw DimensionError("det: matrix is not square");
  QMatrix m = input;
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.swap_rows(p, k);
      d = -d;
    }
    const Rational pivot = m(k, k);
    d *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      }
      m(i, k) = Rational(0);
    }
  }
  return d;
}

MultiPoly det(const PMatrix& m) { return bareiss_det(m); }

std::int64_t det(const ZMatrix& m) { return bareiss_det(m); }

namespace {

template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Matrix<T> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const T tr = trace(a * mk);
    c[n - k] = (T{} - tr) / Rational(static_cast<long>(k));
  }
  return c;
}

}  // namespace

std::vector<Rational> charpoly(const QMatrix& m) { return faddeev_leverrier(m); }

std::vector<MultiPoly> charpoly(const PMatrix& m) { return faddeev_leverrier(m); }

RowEchelon rref(const QMatrix& input) {
  QMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (const auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------- RowSpace

void RowSpace::reduce(std::vector<Rational>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Rational f = v[p];
    const auto& row = rows_[i];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
}

bool RowSpace::add(std::vector<Rational> v) {
  if (v.size() != dim_) throw DimensionError("RowSpace: vector has wrong length");
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  const auto p = static_cast<std::size_t>(it - v.begin());
  const Rational inv = Rational(1) / v[p];
  for (std::size_t j = p; j < dim_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  // Keep every stored row fully reduced with respect to the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Rational f = row[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw DimensionError("RowSpace: vector has wrong length");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<std::vector<Rational>> RowSpace::basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::vector<Rational>> out;
  out.reserve(order.size());
  for (const auto i : order) out.push_back(rows_[i]);
  return out;
}

}  // namespace lieelem
