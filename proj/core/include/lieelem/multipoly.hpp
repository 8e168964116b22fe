#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieelem/rational.hpp"

namespace lieelem {

/// An indexed indeterminate such as w[1,2], x[3] or a[2,1].
///
/// The variable is encoded in a single 64-bit code: the kind letter, the
/// index count and up to four 12-bit indices. Ordering of codes is the
/// variable order used by the monomial ordering.
class Var {
 public:
  static constexpr int kMaxIndices = 4;
  static constexpr int kMaxIndex = (1 << 12) - 1;

  Var() = default;
  Var(char kind, std::initializer_list<int> indices);
  Var(char kind, const std::vector<int>& indices);

  char kind() const { return static_cast<char>(code_ >> 56); }
  std::vector<int> indices() const;
  std::uint64_t code() const { return code_; }

  /// "w[1,2]", "x[3]", or just "p" without indices.
  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;

 private:
  std::uint64_t code_ = 0;
};

/// Exponent vector stored sparsely: (variable, exponent > 0) sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Var v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order on monomials (lower variable code ranks higher).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored. Terms are kept in graded
/// lexicographic order, so the leading term is the last map entry.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MultiPoly(I constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  unsigned total_degree() const;

  /// Coefficient of exactly this monomial; zero if absent.
  Rational coeff_at(const Monomial& m) const;

  /// Substitutes a value for every variable.
  Rational evaluate(const std::function<Rational(Var)>& value_of) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator/=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }

  /// Exact quotient a / b. Throws InexactDivisionError when b does not divide a.
  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Human readable form, highest term first: "3*x[1]^2 - w[1,2] + 1".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }
MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Coefficient of a monomial given as (variable, exponent) pairs.
Rational coeff_at(const MultiPoly& p, const std::vector<Monomial::Factor>& exponents);

}  // namespace lieelem
