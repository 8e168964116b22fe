#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieelem/group_algebra.hpp"
#include "lieelem/matrix.hpp"

namespace lieelem {

enum class GeneratorKind { kappa, nu, eta };

/// Names one of the elements
///   kappa_ij   = 1 - (i j)
///   nu_ijk     = (i j k) - (i k j)
///   eta_ijkl   = (i j k l) + (i l k j) - (i j l k) - (i k l j)
struct GeneratorId {
  GeneratorKind kind = GeneratorKind::kappa;
  std::vector<int> indices;

  /// "kappa[1,2]", "nu[1,2,3]", "eta[1,2,3,4]".
  std::string to_string() const;
};

/// Builds the element in Q[S_n]. Throws StructureError for a wrong index
/// count or repeated index, DimensionError for labels outside 1..n.
QElement make(const GeneratorId& id, int n);

QElement kappa(int n, int i, int j);
QElement nu(int n, int i, int j, int k);
QElement eta(int n, int i, int j, int k, int l);

/// xi_ijkl = w1 * eta_ijkl + w2 * eta_iklj for i < j < k < l.
template <class R>
struct XiElement {
  std::array<int, 4> indices{};
  R w1{};
  R w2{};
};

/// Expands a xi element into R[S_n].
template <class R>
GroupAlgebraElement<R> to_element(const XiElement<R>& xi, int n);

/// All kappa_ij with i < j, in lexicographic order of (i, j).
std::vector<QElement> all_kappas(int n);

struct RelationReport {
  std::vector<std::string> violations;
  std::size_t checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks the symmetry relations among kappa, nu and eta on every index
/// tuple drawn from every 2-, 3- and 4-subset of 1..n. Requires n >= 4.
RelationReport verify_relations(int n);

struct SpanDims {
  std::size_t kappa = 0;  ///< dim span{kappa_pq : (p,q) a permutation of (i,j)}
  std::size_t nu = 0;
  std::size_t eta = 0;
  bool eta_basis_ok = false;  ///< {eta_ijkl, eta_iklj} spans the eta space
};

/// Span dimensions over index permutations of {1,2}, {1,2,3}, {1,2,3,4}
/// (checked to be the same for every index set of 1..n).
SpanDims span_dims(int n);

/// Matrices of the index-permutation action of (1 2), (2 3), (3 4) on the
/// eta space of {1,2,3,4} in the basis {eta_1234, eta_1342}.
std::vector<QMatrix> eta_index_action_matrices();

/// Dimension of the matrix algebra generated by the given square matrices (identity included).
std::size_t generated_algebra_dim(const std::vector<QMatrix>& generators);

/// True iff the index-permutation action of S_4 on the eta space has no
/// invariant line over the algebraic closure. By Burnside's theorem this
/// holds exactly when the action generates all 2 x 2 matrices.
bool no_invariant_line();

/// Index swaps fix kappa_12 (trivial action of S_2).
bool kappa_span_is_trivial();
/// Index transpositions send nu_123 to -nu_123 (sign action of S_3).
bool nu_span_is_sign();

/// Coordinates of y in the span of basis, or nullopt if y is outside it.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<QElement>& basis, const QElement& y);
/// Rank of a family of elements as n!-vectors.
std::size_t span_rank(const std::vector<QElement>& elements);

struct ClosureLimits {
  int max_n = 6;
};

/// Basis (reduced echelon, lexicographic permutation coordinates) of the
/// smallest bracket-closed subspace containing the generators.
std::vector<QElement> lie_closure(const std::vector<QElement>& generators, int n, ClosureLimits limits = {});

/// All (n-1)! left-nested commutators [...[kappa_{1 i1}, kappa_{2 i2}], ...], kappa_{n-1, i_{n-1}}]
/// with s+1 <= i_s <= n.
std::vector<QElement> repeated_commutator_set(int n, ClosureLimits limits = {});

}  // namespace lieelem
