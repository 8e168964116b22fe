#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

#include "lieelem/errors.hpp"
#include "lieelem/multipoly.hpp"
#include "lieelem/rational.hpp"

namespace lieelem {

/// Symmetric pair weights, w_ji = w_ij.
template <class R>
class PairWeights {
 public:
  explicit PairWeights(int n = 0) : n_(n) {}

  int n() const { return n_; }

  /// Throws ConflictError if the pair already holds a different value.
  void set(int i, int j, const R& w) {
    const auto key = canonical(i, j);
    auto [it, inserted] = values_.try_emplace(key, w);
    if (!inserted && !(it->second == w)) throw ConflictError("pair weight w" + label(i, j) + " given twice with different values");
  }
  bool contains(int i, int j) const { return values_.count(canonical(i, j)) != 0; }
  /// Throws Error when the weight is missing.
  R at(int i, int j) const {
    const auto it = values_.find(canonical(i, j));
    if (it == values_.end()) throw Error("missing pair weight w" + label(i, j));
    return it->second;
  }
  R get_or_zero(int i, int j) const {
    const auto it = values_.find(canonical(i, j));
    return it == values_.end() ? R{} : it->second;
  }
  /// Sets every unset pair to zero.
  void fill_missing() {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) values_.try_emplace({i, j}, R{});
  }
  const std::map<std::pair<int, int>, R>& values() const { return values_; }

  /// w[i,j] for every pair.
  static PairWeights symbolic(int n) {
    PairWeights w(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) w.set(i, j, R(MultiPoly::variable(Var('w', {i, j}))));
    return w;
  }

 private:
  std::pair<int, int> canonical(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw DimensionError("pair weight index out of range");
    if (i == j) throw StructureError("pair weight needs two distinct indices");
    return i < j ? std::pair{i, j} : std::pair{j, i};
  }
  static std::string label(int i, int j) { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

  int n_;
  std::map<std::pair<int, int>, R> values_;
};

/// Triple weights alternating under index permutations:
/// w_jki = w_kij = w_ijk and w_jik = w_ikj = w_kji = -w_ijk.
template <class R>
class TripleWeights {
 public:
  explicit TripleWeights(int n = 0) : n_(n) {}

  int n() const { return n_; }

  void set(int i, int j, int k, const R& w) {
    const auto [key, sign] = canonical(i, j, k);
    const R stored = sign > 0 ? w : R{} - w;
    auto [it, inserted] = values_.try_emplace(key, stored);
    if (!inserted && !(it->second == stored)) throw ConflictError("triple weight w" + label(i, j, k) + " conflicts with an earlier entry");
  }
  R at(int i, int j, int k) const {
    const auto [key, sign] = canonical(i, j, k);
    const auto it = values_.find(key);
    if (it == values_.end()) throw Error("missing triple weight w" + label(i, j, k));
    return sign > 0 ? it->second : R{} - it->second;
  }
  R get_or_zero(int i, int j, int k) const {
    const auto [key, sign] = canonical(i, j, k);
    const auto it = values_.find(key);
    if (it == values_.end()) return R{};
    return sign > 0 ? it->second : R{} - it->second;
  }
  void fill_missing() {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k) values_.try_emplace({i, j, k}, R{});
  }
  /// Keyed by increasing triples.
  const std::map<std::array<int, 3>, R>& values() const { return values_; }

  static TripleWeights symbolic(int n) {
    TripleWeights w(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) w.set(i, j, k, R(MultiPoly::variable(Var('w', {i, j, k}))));
    return w;
  }

 private:
  std::pair<std::array<int, 3>, int> canonical(int i, int j, int k) const {
    std::array<int, 3> t{i, j, k};
    for (const int v : t)
      if (v < 1 || v > n_) throw DimensionError("triple weight index out of range");
    if (i == j || j == k || i == k) throw StructureError("triple weight needs three distinct indices");
    int sign = 1;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (t[a] > t[b]) sign = -sign;
    std::sort(t.begin(), t.end());
    return {t, sign};
  }
  static std::string label(int i, int j, int k) {
    return "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
  }

  int n_;
  std::map<std::array<int, 3>, R> values_;
};

/// Which of eta_ijkl, eta_iklj, eta_iljk (i<j<k<l the sorted labels) a
/// relabelled eta_pqrs equals, and with which sign.
struct EtaClass {
  int element = 0;  ///< 0: eta_ijkl, 1: eta_iklj, 2: eta_iljk = -eta_ijkl - eta_iklj
  int sign = 1;
};

/// Classifies eta_{p q r s} for four distinct labels.
EtaClass classify_eta(const std::array<int, 4>& labels);

/// Per 4-subset i<j<k<l the pair (w_ijkl, w_iklj) with
/// xi_ijkl = w_ijkl eta_ijkl + w_iklj eta_iklj.
template <class R>
class QuadWeights {
 public:
  explicit QuadWeights(int n = 0) : n_(n) {}

  int n() const { return n_; }

  /// Adds w * eta_{pqrs} to z. Two entries naming the same element (up to
  /// sign) must agree, otherwise ConflictError.
  void set(const std::array<int, 4>& labels, const R& w) {
    for (const int v : labels)
      if (v < 1 || v > n_) throw DimensionError("quad weight index out of range");
    const EtaClass c = classify_eta(labels);
    std::array<int, 4> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const R signed_w = c.sign > 0 ? w : R{} - w;
    auto [it, inserted] = given_.try_emplace({sorted, c.element}, signed_w);
    if (!inserted) {
      if (!(it->second == signed_w)) throw ConflictError("quad weight for eta" + label(labels) + " conflicts with an earlier entry");
      return;
    }
    auto& slot = values_[sorted];
    if (c.element == 0) {
      slot.first += signed_w;
    } else if (c.element == 1) {
      slot.second += signed_w;
    } else {
      slot.first -= signed_w;
      slot.second -= signed_w;
    }
  }
  /// Direct assignment of (w_ijkl, w_iklj) for sorted labels.
  void set_pair(const std::array<int, 4>& sorted, const R& w1, const R& w2) {
    if (!(sorted[0] < sorted[1] && sorted[1] < sorted[2] && sorted[2] < sorted[3])) throw StructureError("set_pair: labels must increase");
    set(sorted, w1);
    set({sorted[0], sorted[2], sorted[3], sorted[1]}, w2);
  }
  std::pair<R, R> get_or_zero(const std::array<int, 4>& sorted) const {
    const auto it = values_.find(sorted);
    return it == values_.end() ? std::pair<R, R>{} : it->second;
  }
  const std::map<std::array<int, 4>, std::pair<R, R>>& values() const { return values_; }

  static QuadWeights symbolic(int n) {
    QuadWeights w(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            w.set_pair({i, j, k, l}, R(MultiPoly::variable(Var('w', {i, j, k, l}))), R(MultiPoly::variable(Var('w', {i, k, l, j}))));
    return w;
  }

 private:
  static std::string label(const std::array<int, 4>& t) {
    return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "," + std::to_string(t[3]) + "]";
  }

  int n_;
  std::map<std::pair<std::array<int, 4>, int>, R> given_;
  std::map<std::array<int, 4>, std::pair<R, R>> values_;
};

}  // namespace lieelem
