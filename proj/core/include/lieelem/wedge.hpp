#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieelem/group_algebra.hpp"
#include "lieelem/linalg.hpp"
#include "lieelem/matrix.hpp"

namespace lieelem {

/// Basis v_{i1} ^ ... ^ v_{im}, i1 < ... < im, of the m-th exterior power of
/// an n-dimensional space, in lexicographic order of the index sets.
class WedgeBasis {
 public:
  WedgeBasis(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t size() const { return subsets_.size(); }

  /// Sorted 1-based labels of the idx-th basis vector.
  const std::vector<int>& subset(std::size_t idx) const { return subsets_[idx]; }
  /// Index of the basis vector with this label set (bit k-1 set for label k).
  std::size_t index_of_mask(std::uint32_t mask) const;

 private:
  int n_;
  int m_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::int32_t> index_;  // mask -> position, -1 when |mask| != m
};

/// Sign of the permutation sorting a sequence of labels into increasing
/// order, or 0 if a label repeats (the wedge vanishes).
int wedge_sign(const std::vector<int>& labels);

std::uint32_t label_mask(const std::vector<int>& labels);

enum class Representation {
  permutation,  ///< Q^n, sigma(v_i) = v_{sigma(i)}
  reflection,   ///< {sum x_i = 0} in the basis b_i = v_i - v_n, i < n
};

std::string to_string(Representation rep);

/// Dimension of the representation space for S_n.
inline int rep_dimension(int n, Representation rep) { return rep == Representation::permutation ? n : n - 1; }

/// Matrix of a single permutation in the reflection representation.
ZMatrix reflection_matrix(const Permutation& g);

/// Grp_m of a single linear operator: the m-th compound matrix (all m x m minors).
template <class R>
Matrix<R> compound_matrix(const Matrix<R>& op, int m) {
  if (!op.is_square()) throw DimensionError("compound_matrix: operator is not square");
  const int d = static_cast<int>(op.rows());
  if (m < 0 || m > d) throw DimensionError("compound_matrix: wedge degree out of range");
  const WedgeBasis basis(d, m);
  Matrix<R> out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::vector<std::size_t> rows;
    for (const int k : basis.subset(r)) rows.push_back(static_cast<std::size_t>(k - 1));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      std::vector<std::size_t> cols;
      for (const int k : basis.subset(c)) cols.push_back(static_cast<std::size_t>(k - 1));
      out(r, c) = bareiss_det(op.select(rows, cols));
    }
  }
  return out;
}

/// Alg_m of a single linear operator: the derivation extension
/// v1^...^vm -> sum_p v1^...^op(vp)^...^vm. Zero for m = 0.
template <class R>
Matrix<R> derivation_matrix(const Matrix<R>& op, int m) {
  if (!op.is_square()) throw DimensionError("derivation_matrix: operator is not square");
  const int d = static_cast<int>(op.rows());
  if (m < 0 || m > d) throw DimensionError("derivation_matrix: wedge degree out of range");
  const WedgeBasis basis(d, m);
  Matrix<R> out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& cols = basis.subset(c);
    const std::uint32_t mask = label_mask(cols);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      for (int k = 1; k <= d; ++k) {
        const R& coef = op(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(cols[p] - 1));
        if (is_zero(coef)) continue;
        if (k == cols[p]) {
          out(c, c) += coef;
          continue;
        }
        if (mask & (1u << (k - 1))) continue;
        std::vector<int> seq = cols;
        seq[p] = k;
        const int s = wedge_sign(seq);
        const std::size_t r = basis.index_of_mask(label_mask(seq));
        if (s > 0) {
          out(r, c) += coef;
        } else {
          out(r, c) -= coef;
        }
      }
    }
  }
  return out;
}

/// Matrix of x acting on the representation: permutation (n x n, column i
/// is x v_i) or reflection ((n-1) x (n-1) in the basis v_i - v_n).
template <class R>
Matrix<R> action_matrix(const GroupAlgebraElement<R>& x, Representation rep) {
  const int n = x.degree();
  if (rep == Representation::permutation) {
    Matrix<R> out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [g, a] : x.terms())
      for (int i = 1; i <= n; ++i) out(static_cast<std::size_t>(g(i) - 1), static_cast<std::size_t>(i - 1)) += a;
    return out;
  }
  const auto d = static_cast<std::size_t>(n - 1);
  Matrix<R> out(d, d);
  for (const auto& [g, a] : x.terms()) {
    const ZMatrix rg = reflection_matrix(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (rg(i, j) == 1) {
          out(i, j) += a;
        } else if (rg(i, j) == -1) {
          out(i, j) -= a;
        }
      }
  }
  return out;
}

/// Matrix of Grp_m<x> on the m-th exterior power, in WedgeBasis order.
/// m = 0 gives the 1 x 1 matrix [coeff_sum(x)].
template <class R>
Matrix<R> grp_matrix(const GroupAlgebraElement<R>& x, int m, Representation rep = Representation::permutation) {
  const int n = x.degree();
  const int d = rep_dimension(n, rep);
  if (m < 0 || m > d) throw DimensionError("grp_matrix: wedge degree out of range");
  const WedgeBasis basis(d, m);
  Matrix<R> out(basis.size(), basis.size());
  if (rep == Representation::reflection) {
    for (const auto& [g, a] : x.terms()) {
      const Matrix<R> comp = compound_matrix(convert<R>(reflection_matrix(g)), m);
      out += comp * a;
    }
    return out;
  }
  for (const auto& [g, a] : x.terms()) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      std::vector<int> seq = basis.subset(c);
      for (auto& v : seq) v = g(v);
      const int s = wedge_sign(seq);
      const std::size_t r = basis.index_of_mask(label_mask(seq));
      if (s > 0) {
        out(r, c) += a;
      } else {
        out(r, c) -= a;
      }
    }
  }
  return out;
}

/// Matrix of Alg_m<x>; m = 0 gives the 1 x 1 zero matrix.
template <class R>
Matrix<R> alg_matrix(const GroupAlgebraElement<R>& x, int m, Representation rep = Representation::permutation) {
  const int n = x.degree();
  const int d = rep_dimension(n, rep);
  if (m < 0 || m > d) throw DimensionError("alg_matrix: wedge degree out of range");
  // Alg_m is linear in the operator, so it is the derivation of x's action.
  return derivation_matrix(action_matrix(x, rep), m);
}

/// True iff Grp_m<x> = Alg_m<x> for every m = 0..dim of the representation.
template <class R>
bool is_lie(const GroupAlgebraElement<R>& x, Representation rep = Representation::permutation) {
  const int d = rep_dimension(x.degree(), rep);
  for (int m = 0; m <= d; ++m) {
    if (!(grp_matrix(x, m, rep) == alg_matrix(x, m, rep))) return false;
  }
  return true;
}

struct LieSolverLimits {
  int max_n = 6;
};

struct LieSpaceResult {
  int n = 0;
  Representation rep = Representation::permutation;
  std::vector<QElement> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Exact basis of all Lie elements of Q[S_n], found as the kernel of the
/// linear system Grp_m<x> = Alg_m<x>, m = 0..dim. Basis vectors come from
/// the reduced echelon form with free columns in lexicographic permutation
/// order. Throws ResourceLimitError for n > limits.max_n.
LieSpaceResult lie_space(int n, Representation rep = Representation::permutation, LieSolverLimits limits = {});

/// Integer constraint rows of the Lie system (one column per permutation in
/// lexicographic order), zero and duplicate rows removed.
std::vector<std::vector<std::int64_t>> lie_constraint_rows(int n, Representation rep);

struct KernelDims {
  std::size_t dim_lie = 0;     ///< dim of the Lie space
  std::size_t dim_kernel = 0;  ///< dim of the Lie elements acting by zero on Q^n
  std::size_t quotient() const { return dim_lie - dim_kernel; }
};

KernelDims kernel_dim(int n, LieSolverLimits limits = {});
/// Same, reusing an already computed Lie space.
KernelDims kernel_dim(const LieSpaceResult& space);

/// Flattened permutation-representation matrix, for rank computations.
std::vector<Rational> action_vector(const QElement& x);

}  // namespace lieelem
