#include "lieelem/wedge.hpp"

#include <algorithm>
#include <set>

namespace lieelem {

namespace {

void combinations(int n, int m, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int v = start; v <= n; ++v) {
    current.push_back(v);
    combinations(n, m, v + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

WedgeBasis::WedgeBasis(int n, int m) : n_(n), m_(m) {
  if (n < 0 || n > 20) throw DimensionError("WedgeBasis: dimension out of supported range");
  if (m < 0 || m > n) throw DimensionError("WedgeBasis: wedge degree out of range");
  std::vector<int> current;
  combinations(n, m, 1, current, subsets_);
  index_.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < subsets_.size(); ++i) index_[label_mask(subsets_[i])] = static_cast<std::int32_t>(i);
}

std::size_t WedgeBasis::index_of_mask(std::uint32_t mask) const {
  if (mask >= index_.size() || index_[mask] < 0) throw DimensionError("WedgeBasis: label set not in basis");
  return static_cast<std::size_t>(index_[mask]);
}

int wedge_sign(const std::vector<int>& labels) {
  int inversions = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) return 0;
      if (labels[i] > labels[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::uint32_t label_mask(const std::vector<int>& labels) {
  std::uint32_t mask = 0;
  for (const int v : labels) mask |= 1u << (v - 1);
  return mask;
}

std::string to_string(Representation rep) {
  return rep == Representation::permutation ? "permutation" : "reflection";
}

ZMatrix reflection_matrix(const Permutation& g) {
  const int n = g.degree();
  const auto d = static_cast<std::size_t>(n - 1);
  ZMatrix r(d, d);
  // g(v_i - v_n) = v_{g(i)} - v_{g(n)}; a vector of V is sum_{k<n} u_k (v_k - v_n).
  for (int i = 1; i < n; ++i) {
    const auto col = static_cast<std::size_t>(i - 1);
    if (g(i) < n) r(static_cast<std::size_t>(g(i) - 1), col) += 1;
    if (g(n) < n) r(static_cast<std::size_t>(g(n) - 1), col) -= 1;
  }
  return r;
}

std::vector<std::vector<std::int64_t>> lie_constraint_rows(int n, Representation rep) {
  const auto perms = all_permutations(n);
  const int d = rep_dimension(n, rep);
  std::set<std::vector<std::int64_t>> unique_rows;
  for (int m = 0; m <= d; ++m) {
    const WedgeBasis basis(d, m);
    const std::size_t block = basis.size() * basis.size();
    // rows[e][sigma]: equation e of degree m, coefficient of the unknown a_sigma
    std::vector<std::vector<std::int64_t>> rows(block, std::vector<std::int64_t>(perms.size(), 0));
    for (std::size_t s = 0; s < perms.size(); ++s) {
      const QElement g = QElement::of(perms[s]);
      const QMatrix diff = grp_matrix(g, m, rep) - alg_matrix(g, m, rep);
      for (std::size_t e = 0; e < block; ++e) {
        const Rational& v = diff.data()[e];
        if (v.is_zero()) continue;
        rows[e][s] = mpz_class(v.raw().get_num()).get_si();
      }
    }
    for (auto& row : rows) {
      const auto first = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
      if (first == row.end()) continue;
      if (*first < 0)
        for (auto& v : row) v = -v;
      unique_rows.insert(std::move(row));
    }
  }
  return {unique_rows.begin(), unique_rows.end()};
}

LieSpaceResult lie_space(int n, Representation rep, LieSolverLimits limits) {
  if (n < 1) throw DimensionError("lie_space: n must be positive");
  if (n > limits.max_n) {
    throw ResourceLimitError("lie_space: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_n));
  }
  if (rep == Representation::reflection && n < 2) throw DimensionError("lie_space: reflection representation needs n >= 2");
  const auto rows = lie_constraint_rows(n, rep);
  const std::size_t unknowns = factorial(n);
  QMatrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j)
      if (rows[i][j] != 0) system(i, j) = Rational(rows[i][j]);

  LieSpaceResult result;
  result.n = n;
  result.rep = rep;
  for (const auto& v : nullspace(system)) result.basis.push_back(QElement::from_dense(n, v));
  return result;
}

std::vector<Rational> action_vector(const QElement& x) {
  return action_matrix(x, Representation::permutation).data();
}

KernelDims kernel_dim(const LieSpaceResult& space) {
  if (space.rep != Representation::permutation) throw DimensionError("kernel_dim: needs the permutation-representation Lie space");
  RowSpace images(static_cast<std::size_t>(space.n) * static_cast<std::size_t>(space.n));
  for (const auto& x : space.basis) images.add(action_vector(x));
  return {space.dim(), space.dim() - images.rank()};
}

KernelDims kernel_dim(int n, LieSolverLimits limits) { return kernel_dim(lie_space(n, Representation::permutation, limits)); }

}  // namespace lieelem
