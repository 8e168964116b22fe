#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lieelem/errors.hpp"
#include "lieelem/linalg.hpp"
#include "lieelem/matrix.hpp"
#include "lieelem/multipoly.hpp"
#include "lieelem/permutation.hpp"

namespace lieelem {

struct SdetLimits {
  int max_n = 16;          ///< 2^n determinants
  int max_symbolic_n = 5;  ///< det(A + BX)^2 expansion
};

/// Row i (1-based) comes from A when bit i-1 of rows_from_a is set, from B otherwise.
template <class T>
Matrix<T> shuffle(const Matrix<T>& a, const Matrix<T>& b, std::uint32_t rows_from_a) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shuffle: shapes differ");
  if (a.rows() < 32 && (rows_from_a >> a.rows()) != 0) throw DimensionError("shuffle: row subset out of range");
  Matrix<T> out = b;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (rows_from_a & (1u << i))
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Same with the subset given as 1-based row labels.
template <class T>
Matrix<T> shuffle(const Matrix<T>& a, const Matrix<T>& b, const std::vector<int>& rows_from_a) {
  std::uint32_t mask = 0;
  for (const int i : rows_from_a) {
    if (i < 1 || static_cast<std::size_t>(i) > a.rows()) throw DimensionError("shuffle: row label out of range");
    mask |= 1u << (i - 1);
  }
  return shuffle(a, b, mask);
}

namespace detail {

inline Rational det_any(const QMatrix& m) { return det(m); }
inline MultiPoly det_any(const PMatrix& m) { return det(m); }
inline std::int64_t det_any(const ZMatrix& m) { return det(m); }

}  // namespace detail

/// sum over I of det (A,B)_I * det (A,B)_{complement of I}.
template <class T>
T sdet(const Matrix<T>& a, const Matrix<T>& b, SdetLimits limits = {}) {
  if (!a.is_square()) throw DimensionError("sdet: matrices are not square");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sdet: shapes differ");
  const std::size_t n = a.rows();
  if (static_cast<int>(n) > limits.max_n) throw ResourceLimitError("sdet: dimension exceeds the bound " + std::to_string(limits.max_n));
  const std::uint32_t full = (n == 0) ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<T> d(std::size_t{full} + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) d[mask] = detail::det_any(shuffle(a, b, mask));
  T total{};
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (is_zero(d[mask]) || is_zero(d[full ^ mask])) continue;
    total += d[mask] * d[full ^ mask];
  }
  return total;
}

/// Coefficient of x_1...x_n in det(A + B X)^2, X = diag(x_1..x_n).
Rational sdet_via_coeff(const QMatrix& a, const QMatrix& b, SdetLimits limits = {});
/// Symbolic version: entries may involve other variables, which are kept.
MultiPoly sdet_via_coeff(const PMatrix& a, const PMatrix& b, SdetLimits limits = {});

/// (-1)^n sum_sigma (-2)^{nu(sigma)} a_{1 sigma(1)} ... a_{n sigma(n)}.
template <class T>
T sdet_identity_formula(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("sdet_identity_formula: matrix is not square");
  const int n = static_cast<int>(a.rows());
  if (n > 7) throw ResourceLimitError("sdet_identity_formula: n exceeds 7");
  T total{};
  for (const Permutation& s : all_permutations(n)) {
    T term(1);
    for (int i = 1; i <= n && !is_zero(term); ++i) term *= a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(s(i) - 1));
    if (is_zero(term)) continue;
    std::int64_t factor = 1;
    for (int c = 0; c < s.cycle_count(); ++c) factor *= -2;
    if (n % 2 == 1) factor = -factor;
    total += term * T(factor);
  }
  return total;
}

/// Directed multigraph on vertices 1..n given by its 2n edges (from, to).
struct DirectedMultigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct MonomialCoefficient {
  std::int64_t value = 0;                ///< +-2^components
  int components = 0;                    ///< number of cycles of the auxiliary graph
  std::vector<std::size_t> cycle_lengths;
  /// Edge letters used for the evaluation: true for an a-letter, false for b.
  std::vector<bool> from_a;
};

/// Coefficient of the sdet monomial whose letters form the graph G. Each
/// vertex must have out-degree 2 and in-degree 2 (StructureError otherwise).
/// At every vertex the first out-edge in list order is read as the a-letter.
MonomialCoefficient monomial_coefficient(const DirectedMultigraph& g);

/// The graph G of the monomial prod a_{i j} (a_edges) prod b_{k l} (b_edges).
DirectedMultigraph monomial_graph(int n, const std::vector<std::pair<int, int>>& a_edges,
                                  const std::vector<std::pair<int, int>>& b_edges);

/// Ordered list of r 4-tuples of distinct labels in 1..n; repeats allowed.
struct EdgeSystem {
  int n = 0;
  std::vector<std::array<int, 4>> tuples;

  std::size_t r() const { return tuples.size(); }
  void validate() const;
};

/// r x n matrices: A row s has +1 at i_s and -1 at j_s; B row s has +1 at k_s and -1 at l_s.
std::pair<ZMatrix, ZMatrix> build_AB(const EdgeSystem& e);

/// Sum over r-subsets J of columns of sdet(A^J, B^J).
std::int64_t shuffle_coefficient(const EdgeSystem& e);
/// The n values sdet(A^J, B^J) with J = {1..n} minus {k}, k = 1..n (r = n-1).
std::vector<std::int64_t> column_deleted_sdets(const EdgeSystem& e);
/// n * sdet(A^J, B^J) with J = {1..n-1}; requires r = n-1.
std::int64_t shuffle_coefficient_top(const EdgeSystem& e);

/// Phi of the edge system times the product of the tuple weights.
template <class R>
R phi(const EdgeSystem& e, const std::vector<R>& weights) {
  if (weights.size() != e.r()) throw DimensionError("phi: one weight per tuple expected");
  R out(shuffle_coefficient(e));
  for (const auto& w : weights) out *= w;
  return out;
}

template <class R>
R phi_top(const EdgeSystem& e, const std::vector<R>& weights) {
  if (weights.size() != e.r()) throw DimensionError("phi_top: one weight per tuple expected");
  R out(shuffle_coefficient_top(e));
  for (const auto& w : weights) out *= w;
  return out;
}

/// The eta terms of z = sum xi_ijkl over i<j<k<l in canonical order:
/// (i,j,k,l) carrying w_ijkl, then (i,k,l,j) carrying w_iklj.
std::vector<std::array<int, 4>> eta_term_tuples(int n);

/// Table of c_E over all r-multisets E of eta terms of degree n with c_E != 0.
class PhiTable {
 public:
  enum class Method { all_columns, top };

  struct Entry {
    std::vector<std::uint16_t> terms;  ///< nondecreasing indices into eta_term_tuples(n)
    std::int64_t coefficient = 0;      ///< c_E
    std::int64_t symmetry = 1;         ///< product of multiplicity factorials
  };

  /// Method::top uses n * sdet with J = {1..n-1} and requires r = n-1.
  PhiTable(int n, int r, Method method = Method::all_columns);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t multisets_scanned() const { return scanned_; }

  /// mu_r = sum_E c_E prod w / prod k_i!, weights indexed like eta_term_tuples(n).
  template <class R>
  R evaluate(const std::vector<R>& term_weights) const {
    if (term_weights.size() != tuples_.size()) throw DimensionError("PhiTable: wrong number of term weights");
    R total{};
    for (const auto& e : entries_) {
      R term(e.coefficient);
      for (const auto t : e.terms) term *= term_weights[t];
      if (e.symmetry != 1) term *= R(Rational(1, static_cast<long>(e.symmetry)));
      total += term;
    }
    return total;
  }

 private:
  int n_;
  int r_;
  std::vector<std::array<int, 4>> tuples_;
  std::vector<Entry> entries_;
  std::size_t scanned_ = 0;
};

/// sum over ordered r-tuples of terms of c_E prod w (no 1/r!); small n only.
Rational phi_ordered_sum(int n, int r, const std::vector<Rational>& term_weights);

}  // namespace lieelem
