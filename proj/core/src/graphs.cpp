#include "lieelem/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lieelem/permutation.hpp"

namespace lieelem {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

bool is_tree(const LabeledTree& t) {
  if (t.n < 1) return false;
  if (t.edges.size() != static_cast<std::size_t>(t.n - 1)) return false;
  UnionFind uf(t.n);
  for (const auto& [u, v] : t.edges) {
    if (u < 1 || v < 1 || u > t.n || v > t.n || u == v) return false;
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

LabeledTree prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 1) throw DimensionError("prufer_decode: n must be positive");
  LabeledTree t;
  t.n = n;
  if (n == 1) {
    if (!sequence.empty()) throw DimensionError("prufer_decode: sequence length must be n - 2");
    return t;
  }
  if (sequence.size() != static_cast<std::size_t>(n - 2)) throw DimensionError("prufer_decode: sequence length must be n - 2");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (const int v : sequence) {
    if (v < 1 || v > n) throw DimensionError("prufer_decode: label out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  for (const int v : sequence) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  t.edges.emplace_back(a, b);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::vector<int> prufer_encode(const LabeledTree& t) {
  if (!is_tree(t)) throw StructureError("prufer_encode: not a tree");
  const int n = t.n;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [u, v] : t.edges) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (adj[static_cast<std::size_t>(v)].size() == 1) leaves.insert(v);
  std::vector<int> seq;
  for (int step = 0; step + 2 < n; ++step) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    const int neighbour = *adj[static_cast<std::size_t>(leaf)].begin();
    seq.push_back(neighbour);
    adj[static_cast<std::size_t>(neighbour)].erase(leaf);
    if (adj[static_cast<std::size_t>(neighbour)].size() == 1) leaves.insert(neighbour);
  }
  return seq;
}

void for_each_tree(int n, const std::function<void(const LabeledTree&)>& f, int max_n) {
  if (n < 1) throw DimensionError("enumerate_trees: n must be positive");
  if (n > max_n) throw ResourceLimitError("enumerate_trees: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  if (n <= 2) {
    f(prufer_decode(n, {}));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    f(prufer_decode(n, seq));
    int p = n - 3;
    while (p >= 0 && seq[static_cast<std::size_t>(p)] == n) {
      seq[static_cast<std::size_t>(p)] = 1;
      --p;
    }
    if (p < 0) break;
    ++seq[static_cast<std::size_t>(p)];
  }
}

std::vector<LabeledTree> enumerate_trees(int n, int max_n) {
  std::vector<LabeledTree> out;
  for_each_tree(n, [&](const LabeledTree& t) { out.push_back(t); }, max_n);
  return out;
}

bool is_three_tree(const ThreeGraph& g) {
  const std::size_t m = g.triangles.size();
  if (m == 0 || g.n != static_cast<int>(2 * m + 1)) return false;
  std::vector<int> uses(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& t : g.triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    for (const int v : t) {
      if (v < 1 || v > g.n) return false;
      ++uses[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 1; v <= g.n; ++v)
    if (uses[static_cast<std::size_t>(v)] == 0) return false;

  std::vector<bool> removed(m, false);
  std::size_t left = m;
  while (left > 1) {
    bool pruned = false;
    for (std::size_t s = 0; s < m && !pruned; ++s) {
      if (removed[s]) continue;
      int private_vertices = 0;
      for (const int v : g.triangles[s])
        if (uses[static_cast<std::size_t>(v)] == 1) ++private_vertices;
      if (private_vertices == 2) {
        removed[s] = true;
        for (const int v : g.triangles[s]) --uses[static_cast<std::size_t>(v)];
        --left;
        pruned = true;
      }
    }
    if (!pruned) return false;
  }
  return true;
}

bool is_three_tree_incidence(const ThreeGraph& g) {
  const std::size_t m = g.triangles.size();
  if (m == 0 || g.n != static_cast<int>(2 * m + 1)) return false;
  // Nodes 1..n are vertices, n+1..n+m triangles.
  UnionFind uf(g.n + static_cast<int>(m));
  std::vector<bool> used(static_cast<std::size_t>(g.n) + 1, false);
  for (std::size_t s = 0; s < m; ++s) {
    for (const int v : g.triangles[s]) {
      if (v < 1 || v > g.n) return false;
      used[static_cast<std::size_t>(v)] = true;
      if (!uf.unite(v, g.n + 1 + static_cast<int>(s))) return false;  // a cycle in the incidence graph
    }
  }
  for (int v = 1; v <= g.n; ++v)
    if (!used[static_cast<std::size_t>(v)]) return false;
  const int root = uf.find(1);
  for (int v = 2; v <= g.n + static_cast<int>(m); ++v)
    if (uf.find(v) != root) return false;
  return true;
}

std::vector<ThreeGraph> enumerate_three_trees(int m, ThreeTreeLimits limits) {
  if (m < 1) throw DimensionError("enumerate_three_trees: m must be positive");
  if (m > limits.max_m) throw ResourceLimitError("enumerate_three_trees: m = " + std::to_string(m) + " exceeds the bound " + std::to_string(limits.max_m));
  const int n = 2 * m + 1;
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});

  std::vector<ThreeGraph> out;
  ThreeGraph g{n, {}};
  // A repeated triangle shares two vertices with itself, so distinct triples suffice.
  const auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(g.triangles.size()) == m) {
      if (is_three_tree(g)) out.push_back(g);
      return;
    }
    for (std::size_t t = start; t < triples.size(); ++t) {
      g.triangles.push_back(triples[t]);
      self(self, t + 1);
      g.triangles.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int delta_sign_ordered(int n, const std::vector<std::array<int, 3>>& triangles) {
  Permutation sigma = Permutation::identity(n);
  for (const auto& t : triangles) {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    sigma = sigma * Permutation::from_cycles(n, {{s[0], s[1], s[2]}});
  }
  std::vector<int> a;
  a.reserve(static_cast<std::size_t>(n));
  int v = 1;
  do {
    a.push_back(v);
    v = sigma(v);
  } while (v != 1);
  if (static_cast<int>(a.size()) != n) throw StructureError("delta: product of the 3-cycles is not an n-cycle");
  return Permutation(a).sign();
}

int delta_sign(const ThreeGraph& g) {
  const int forward = delta_sign_ordered(g.n, g.triangles);
  std::vector<std::array<int, 3>> reversed(g.triangles.rbegin(), g.triangles.rend());
  if (delta_sign_ordered(g.n, reversed) != forward) throw StructureError("delta: sign depends on the edge order");
  return forward;
}

std::array<int, 4> FourEdge::tuple() const {
  const auto [i, j, k, l] = vertices;
  return variant == 1 ? std::array<int, 4>{i, j, k, l} : std::array<int, 4>{i, k, l, j};
}

EdgeSystem FourGraph::edge_system() const {
  EdgeSystem e{n, {}};
  for (const auto& edge : edges) e.tuples.push_back(edge.tuple());
  return e;
}

std::uint64_t four_graph_count(int r, int n) {
  const std::uint64_t choices = 2 * binomial(static_cast<std::uint64_t>(n), 4);
  if (choices == 0) return r == 0 ? 1 : 0;
  return binomial(choices + static_cast<std::uint64_t>(r) - 1, static_cast<std::uint64_t>(r));
}

std::vector<FourGraph> enumerate_four_graphs(int r, int n, FourGraphLimits limits) {
  if (r < 1) throw DimensionError("enumerate_four_graphs: r must be positive");
  if (n < 4) throw DimensionError("enumerate_four_graphs: needs n >= 4");
  const std::uint64_t count = four_graph_count(r, n);
  if (count > limits.max_count) throw ResourceLimitError("enumerate_four_graphs: " + std::to_string(count) + " graphs exceed the bound");
  std::vector<FourEdge> choices;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          choices.push_back({{i, j, k, l}, 1});
          choices.push_back({{i, j, k, l}, 2});
        }
  std::vector<FourGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    FourGraph g{n, {}};
    for (const auto i : idx) g.edges.push_back(choices[i]);
    out.push_back(std::move(g));
    int p = r - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] + 1 == choices.size()) --p;
    if (p < 0) break;
    const std::size_t v = idx[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < r; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

}  // namespace lieelem
