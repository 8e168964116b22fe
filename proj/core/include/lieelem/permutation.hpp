#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lieelem {

/// A bijection of {1..n}. Labels are 1-based throughout the public API.
///
/// Products use the left-action convention (s * t)(i) = s(t(i)), under which
/// (1 2)(2 3) = (1 2 3).
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = sigma(i). Throws InvalidCycleError if not a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Product of the given disjoint cycles; each cycle (i1 ... ik) sends
  /// i1 -> i2 -> ... -> ik -> i1.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Parses "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse(int n, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// +1 for even, -1 for odd permutations.
  int sign() const;
  /// Number of orbits on {1..n}, fixed points included.
  int cycle_count() const;
  /// Nontrivial cycles, each starting at its least element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  /// The same permutation as an element of S_m, m >= n, fixing n+1..m.
  Permutation extended(int m) const;

  /// Cycle notation "(1 2 3)(4 5)"; the identity renders as "()".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (s * t)(i) = s(t(i)). Throws DimensionError on degree mismatch.
Permutation compose(const Permutation& s, const Permutation& t);
inline Permutation operator*(const Permutation& s, const Permutation& t) { return compose(s, t); }

/// Position of p among all permutations of its degree in lexicographic order of the image array.
std::size_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::size_t rank);
/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

std::size_t factorial(int n);

}  // namespace lieelem
