#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieelem/errors.hpp"
#include "lieelem/multipoly.hpp"
#include "lieelem/permutation.hpp"
#include "lieelem/rational.hpp"

namespace lieelem {

/// Sparse element sum_g a_g g of the group algebra R[S_n].
///
/// R is Rational or MultiPoly. No zero coefficient is ever stored; terms are
/// kept in lexicographic order of the permutations' image arrays.
template <class R>
class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, R>;

  explicit GroupAlgebraElement(int n = 0) : n_(n) {}

  /// The unit 1 = 1 * id.
  static GroupAlgebraElement one(int n) { return of(Permutation::identity(n)); }
  static GroupAlgebraElement of(const Permutation& p, const R& coefficient = R(1)) {
    GroupAlgebraElement x(p.degree());
    x.add(p, coefficient);
    return x;
  }

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  R coeff(const Permutation& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? R{} : it->second;
  }

  void add(const Permutation& p, const R& c) {
    if (p.degree() != n_) throw DimensionError("group algebra: permutation degree mismatch");
    if (lieelem::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (lieelem::is_zero(it->second)) terms_.erase(it);
    }
  }

  GroupAlgebraElement operator-() const {
    GroupAlgebraElement out(n_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, R{} - c);
    return out;
  }
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add(p, R{} - c);
    return *this;
  }
  GroupAlgebraElement& operator*=(const R& s) {
    if (lieelem::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const R& s) { return a *= s; }
  friend GroupAlgebraElement operator*(const R& s, GroupAlgebraElement a) { return a *= s; }

  /// Bilinear extension of permutation composition.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check_degree(b);
    GroupAlgebraElement out(a.n_);
    for (const auto& [p, cp] : a.terms_)
      for (const auto& [q, cq] : b.terms_) out.add(p * q, cp * cq);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Dense coordinates indexed by lex_rank; length n!.
  std::vector<R> dense() const {
    std::vector<R> v(factorial(n_));
    for (const auto& [p, c] : terms_) v[lex_rank(p)] = c;
    return v;
  }
  static GroupAlgebraElement from_dense(int n, const std::vector<R>& v) {
    if (v.size() != factorial(n)) throw DimensionError("from_dense: vector length is not n!");
    GroupAlgebraElement x(n);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!lieelem::is_zero(v[r])) x.terms_.emplace(lex_unrank(n, r), v[r]);
    return x;
  }

  /// "1 - (1 2)", "(1 2 3) - (1 3 2)", "0" for the zero element.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      std::string cs = lieelem::to_string(c);
      bool negative = !cs.empty() && cs[0] == '-';
      const bool compound = cs.find_first_of(" +*") != std::string::npos || cs.find('-', 1) != std::string::npos;
      if (compound) negative = false;
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      if (compound) cs = "(" + cs + ")";
      if (p.is_identity()) {
        s += cs;
      } else {
        if (cs != "1") s += cs + "*";
        s += p.to_string();
      }
      first = false;
    }
    return s;
  }

 private:
  void check_degree(const GroupAlgebraElement& o) const {
    if (o.n_ != n_) throw DimensionError("group algebra: degree mismatch");
  }

  int n_;
  Terms terms_;
};

using QElement = GroupAlgebraElement<Rational>;
using PElement = GroupAlgebraElement<MultiPoly>;

template <class R>
GroupAlgebraElement<R> multiply(const GroupAlgebraElement<R>& x, const GroupAlgebraElement<R>& y) {
  return x * y;
}

/// Commutator xy - yx.
template <class R>
GroupAlgebraElement<R> bracket(const GroupAlgebraElement<R>& x, const GroupAlgebraElement<R>& y) {
  return x * y - y * x;
}

/// sigma x sigma^{-1}.
template <class R>
GroupAlgebraElement<R> conjugate(const Permutation& sigma, const GroupAlgebraElement<R>& x) {
  if (sigma.degree() != x.degree()) throw DimensionError("conjugate: degree mismatch");
  const Permutation inv = sigma.inverse();
  GroupAlgebraElement<R> out(x.degree());
  for (const auto& [p, c] : x.terms()) out.add(sigma * p * inv, c);
  return out;
}

/// y x y^{-1} for y a single group element with unit coefficient.
template <class R>
GroupAlgebraElement<R> conjugate(const GroupAlgebraElement<R>& y, const GroupAlgebraElement<R>& x) {
  if (y.size() != 1 || !(y.terms().begin()->second == R(1))) {
    throw UnsupportedUnitError("conjugate: only conjugation by a single permutation is supported");
  }
  return conjugate(y.terms().begin()->first, x);
}

/// Sum of the coefficients, i.e. the action on the trivial representation.
template <class R>
R coeff_sum(const GroupAlgebraElement<R>& x) {
  R s{};
  for (const auto& [p, c] : x.terms()) s += c;
  return s;
}

/// Embedding R[S_n] -> R[S_{n+1}] extending every permutation by the fixed point n+1.
template <class R>
GroupAlgebraElement<R> iota(const GroupAlgebraElement<R>& x) {
  GroupAlgebraElement<R> out(x.degree() + 1);
  for (const auto& [p, c] : x.terms()) out.add(p.extended(x.degree() + 1), c);
  return out;
}

}  // namespace lieelem
