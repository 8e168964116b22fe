#pragma once

// Brute-force reference implementations shared by the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lieelem/verify.hpp"

namespace testing_support {

using namespace lieelem;

inline QMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 3);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

/// Laplace expansion along the first row.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total{};
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const T minor = m(0, j) * cofactor_det(m.select(rows, cols));
    if (j % 2 == 0) {
      total += minor;
    } else {
      total -= minor;
    }
  }
  return total;
}

inline QElement random_element(int n, std::mt19937_64& rng, int terms = 5) {
  std::uniform_int_distribution<std::size_t> pick(0, factorial(n) - 1);
  std::uniform_int_distribution<long> coef(-4, 4);
  QElement x(n);
  for (int t = 0; t < terms; ++t) x.add(lex_unrank(n, pick(rng)), Rational(coef(rng), 1));
  return x;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

/// Matrix of sigma on Q^n: column i is e_{sigma(i)}.
inline QMatrix permutation_matrix(const Permutation& s) {
  const auto n = static_cast<std::size_t>(s.degree());
  QMatrix m(n, n);
  for (int i = 1; i <= s.degree(); ++i) m(static_cast<std::size_t>(s(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
  return m;
}

/// Inverse of a rational matrix by Gauss-Jordan on [M | I].
inline QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Number of standard Young tableaux of shape lambda (hook length formula).
inline std::size_t hook_dimension(const std::vector<int>& lambda) {
  int n = 0;
  for (const int p : lambda) n += p;
  std::size_t hooks = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < lambda.size(); ++rr)
        if (lambda[rr] > c) ++below;
      hooks *= static_cast<std::size_t>(lambda[r] - c - 1 + below + 1);
    }
  }
  return factorial(n) / hooks;
}

inline void partitions_rec(int left, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline bool is_hook(const std::vector<int>& lambda) {
  for (std::size_t r = 1; r < lambda.size(); ++r)
    if (lambda[r] != 1) return false;
  return true;
}

}  // namespace testing_support
