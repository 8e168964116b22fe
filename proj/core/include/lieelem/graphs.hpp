#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lieelem/errors.hpp"
#include "lieelem/sdet.hpp"
#include "lieelem/weights.hpp"

namespace lieelem {

/// Tree on vertices 1..n; edges stored as (u, v) with u < v, sorted.
struct LabeledTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Connected and acyclic with n - 1 edges (union-find).
bool is_tree(const LabeledTree& t);

/// Tree of a Pruefer sequence of length n - 2 (n >= 2).
LabeledTree prufer_decode(int n, const std::vector<int>& sequence);
std::vector<int> prufer_encode(const LabeledTree& t);

/// Calls f for each of the n^(n-2) trees on 1..n, in lexicographic order of
/// their Pruefer sequences. Throws ResourceLimitError for n > max_n.
void for_each_tree(int n, const std::function<void(const LabeledTree&)>& f, int max_n = 9);
std::vector<LabeledTree> enumerate_trees(int n, int max_n = 9);

template <class R>
R tree_weight(const LabeledTree& t, const PairWeights<R>& w) {
  R out(1);
  for (const auto& [u, v] : t.edges) out *= w.at(u, v);
  return out;
}

/// sum over trees of tree_weight.
template <class R>
R tree_sum(int n, const PairWeights<R>& w, int max_n = 9) {
  R total{};
  for_each_tree(n, [&](const LabeledTree& t) { total += tree_weight(t, w); }, max_n);
  return total;
}

/// Union of m solid triangles on vertices 1..n; each triple sorted ascending.
struct ThreeGraph {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;
};

/// Contractibility by leaf pruning: n = 2m+1, every vertex covered, and
/// triangles with two private vertices can be removed one by one down to a
/// single triangle.
bool is_three_tree(const ThreeGraph& g);

/// Reference criterion: the vertex-triangle incidence graph is a tree
/// (connected, every vertex used, n = 2m + 1).
bool is_three_tree_incidence(const ThreeGraph& g);

struct ThreeTreeLimits {
  int max_m = 3;
};

/// All 3-trees on 1..2m+1 with triangles in lexicographic order, the list
/// itself sorted lexicographically.
std::vector<ThreeGraph> enumerate_three_trees(int m, ThreeTreeLimits limits = {});

/// delta of a 3-tree with the triangles taken in the given order: the product
/// of the 3-cycles is an n-cycle (a_1 ... a_n) with a_1 = 1 and delta is the
/// sign of s -> a_s. Throws StructureError if the product is not an n-cycle.
int delta_sign_ordered(int n, const std::vector<std::array<int, 3>>& triangles);

/// delta_sign_ordered, checked against the reversed edge order (StructureError on mismatch).
int delta_sign(const ThreeGraph& g);

template <class R>
R three_tree_weight(const ThreeGraph& g, const TripleWeights<R>& w) {
  R out(1);
  for (const auto& t : g.triangles) out *= w.at(t[0], t[1], t[2]);
  return out;
}

/// sum over 3-trees on 1..n of delta * weight; n = 2m + 1.
template <class R>
R signed_three_tree_sum(int n, const TripleWeights<R>& w, ThreeTreeLimits limits = {}) {
  if (n % 2 == 0) throw DimensionError("3-trees need an odd number of vertices");
  R total{};
  for (const auto& g : enumerate_three_trees((n - 1) / 2, limits)) {
    const R term = three_tree_weight(g, w);
    if (delta_sign(g) > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// A 4-edge: tetrahedron variant T1 (eta_ijkl) or T2 (eta_iklj) on i<j<k<l.
struct FourEdge {
  std::array<int, 4> vertices{};
  int variant = 1;

  /// The eta term (i,j,k,l) for T1, (i,k,l,j) for T2.
  std::array<int, 4> tuple() const;
  friend auto operator<=>(const FourEdge&, const FourEdge&) = default;
};

struct FourGraph {
  int n = 0;
  std::vector<FourEdge> edges;  ///< nondecreasing

  EdgeSystem edge_system() const;
};

struct FourGraphLimits {
  std::uint64_t max_count = 2'000'000;
};

/// Number of r-multisets of 4-edges on n vertices.
std::uint64_t four_graph_count(int r, int n);

/// All r-multisets of 4-edges on n vertices in lexicographic order.
std::vector<FourGraph> enumerate_four_graphs(int r, int n, FourGraphLimits limits = {});

}  // namespace lieelem
