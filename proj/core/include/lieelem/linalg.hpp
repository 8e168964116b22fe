#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieelem/matrix.hpp"

namespace lieelem {

/// Fraction-free (Bareiss) determinant over an integral domain. Every
/// intermediate division is exact.
template <class T>
T bareiss_det(Matrix<T> m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return T{};
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, previous);
      }
      m(i, k) = T{};
    }
    previous = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (negate) d = T{} - d;
  return d;
}

/// Determinant by Gaussian elimination over the rationals.
Rational det(const QMatrix& m);
/// Fraction-free determinant of a polynomial matrix.
MultiPoly det(const PMatrix& m);
/// Fraction-free determinant of an integer matrix.
std::int64_t det(const ZMatrix& m);

/// Coefficients c_0..c_n of det(tI - M), computed by Faddeev-LeVerrier.
/// The returned vector has n+1 entries and c_n = 1.
std::vector<Rational> charpoly(const QMatrix& m);
std::vector<MultiPoly> charpoly(const PMatrix& m);

namespace detail {

template <class T>
T pfaffian_rec(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  const std::size_t first = idx.front();
  T total{};
  // Expand along the first remaining row; sign alternates with the column position.
  for (std::size_t p = 1; p < idx.size(); ++p) {
    const T& entry = m(first, idx[p]);
    if (is_zero(entry)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != p) rest.push_back(idx[q]);
    T term = entry * pfaffian_rec(m, rest);
    if (p % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row, normalised so that
/// Pf [[0, 1], [-1, 0]] = 1. Throws StructureError for odd dimension or a
/// matrix that is not skew-symmetric.
template <class T>
T pfaffian(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("pfaffian: matrix is not square");
  if (m.rows() % 2 != 0) throw StructureError("pfaffian: odd dimension");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!is_zero(m(i, i))) throw StructureError("pfaffian: nonzero diagonal");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!is_zero(m(i, j) + m(j, i))) throw StructureError("pfaffian: matrix is not skew-symmetric");
    }
  }
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m, idx);
}

struct RowEchelon {
  QMatrix reduced;                  ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form; pivots are taken left to right.
RowEchelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Basis of the right kernel. One vector per free column, in increasing
/// column order, with a 1 at its free column.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// Incrementally maintained reduced echelon basis of a subspace of Q^dim.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span. Returns true when the rank grew.
  bool add(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;

  /// Basis rows sorted by pivot column.
  std::vector<std::vector<Rational>> basis() const;

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lieelem
