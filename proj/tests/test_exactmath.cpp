#include "doctest.h"
#include "support.hpp"

using namespace lieelem;
using namespace testing_support;

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-5").to_string() == "-5");
  CHECK(Rational::parse("22/7").to_string() == "22/7");
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const QMatrix m = random_matrix(n, n, rng);
      CHECK(det(m) == cofactor_det(m));
      CHECK(bareiss_det(m) == cofactor_det(m));
    }
  }
  const ZMatrix z = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(det(z) == 4);
  CHECK(det(QMatrix(0, 0)) == Rational(1));
}

TEST_CASE("symbolic determinant of a generic 3x3 matrix") {
  PMatrix m(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly::variable(Var('a', {i, j}));
  const MultiPoly d = det(m);
  CHECK(d == cofactor_det(m));
  CHECK(d.size() == 6);
  CHECK(d.total_degree() == 3);
}

TEST_CASE("characteristic polynomial matches det(tI - M) at sample points") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const QMatrix m = random_matrix(n, n, rng);
    const auto c = charpoly(m);
    REQUIRE(c.size() == n + 1);
    CHECK(c[n] == Rational(1));
    for (long t = -2; t <= static_cast<long>(n); ++t) {
      QMatrix shifted = QMatrix::identity(n) * Rational(t) - m;
      Rational value{};
      for (std::size_t k = c.size(); k-- > 0;) value = value * Rational(t) + c[k];
      CHECK(value == cofactor_det(shifted));
    }
  }
}

TEST_CASE("symbolic characteristic polynomial") {
  const MultiPoly x = MultiPoly::variable(Var('x', {}));
  const MultiPoly y = MultiPoly::variable(Var('y', {}));
  const PMatrix m = {{x, y}, {y, x}};
  const auto c = charpoly(m);
  CHECK(c[0] == x * x - y * y);
  CHECK(c[1] == MultiPoly(Rational(-2)) * x);
  CHECK(c[2] == MultiPoly(Rational(1)));
}

TEST_CASE("pfaffian") {
  const QMatrix m4 = {{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
  CHECK(pfaffian(m4) == Rational(1 * 6 - 2 * 5 + 3 * 4));
  std::mt19937_64 rng(3);
  for (std::size_t n : {2, 4, 6}) {
    QMatrix a = random_matrix(n, n, rng);
    const QMatrix skew = a - a.transpose();
    const Rational pf = pfaffian(skew);
    CHECK(pf * pf == cofactor_det(skew));
  }
  CHECK_THROWS_AS(pfaffian(QMatrix(3, 3)), StructureError);
  const QMatrix not_skew = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(pfaffian(not_skew), StructureError);
}

TEST_CASE("row echelon form, rank and nullspace") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    QMatrix a = random_matrix(3, 6, rng);
    // force a dependent row
    QMatrix m(4, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t i = 0; i < 3; ++i) m(i, j) = a(i, j);
      m(3, j) = a(0, j) * Rational(2) - a(2, j);
    }
    const std::size_t r = rank(m);
    CHECK(r == 3);
    const auto ns = nullspace(m);
    CHECK(ns.size() == 6 - r);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s{};
        for (std::size_t j = 0; j < 6; ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
    }
    const RowEchelon e = rref(m);
    CHECK(e.reduced.rows() == r);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) CHECK(e.reduced(i, e.pivots[i]) == Rational(1));
  }
}

TEST_CASE("incremental row space") {
  RowSpace s(3);
  CHECK(s.add({1, 2, 3}));
  CHECK(!s.add({2, 4, 6}));
  CHECK(s.contains({-1, -2, -3}));
  CHECK(!s.contains({0, 0, 1}));
  CHECK(s.add({0, 0, 1}));
  CHECK(s.contains({1, 2, 0}));
  CHECK(s.rank() == 2);
}

TEST_CASE("multivariate polynomials") {
  const MultiPoly x = MultiPoly::variable(Var('x', {1}));
  const MultiPoly y = MultiPoly::variable(Var('x', {2}));
  const MultiPoly s = x + y;
  const MultiPoly sq = s * s;
  CHECK(sq == x * x + MultiPoly(Rational(2)) * x * y + y * y);
  CHECK(pow(s, 2) == sq);
  CHECK(exact_div(sq, s) == s);
  CHECK_THROWS_AS(exact_div(sq + MultiPoly(Rational(1)), s), InexactDivisionError);
  CHECK((s - s).is_zero());
  CHECK(sq.total_degree() == 2);
  const Rational v = sq.evaluate([](Var var) { return var.indices()[0] == 1 ? Rational(3) : Rational(-1, 2); });
  CHECK(v == Rational(25, 4));
  CHECK(sq.coeff_at(Monomial({{Var('x', {1}), 1}, {Var('x', {2}), 1}})) == Rational(2));
  CHECK(Var('w', {1, 2}).name() == "w[1,2]");
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-3, 3);
  const auto random_poly = [&] {
    MultiPoly p;
    for (int t = 0; t < 4; ++t) {
      MultiPoly term(Rational(c(rng), 1));
      for (int v = 1; v <= 3; ++v)
        if (c(rng) > 0) term *= MultiPoly::variable(Var('x', {v}));
      p += term;
    }
    return p;
  };
  const auto at = [](Var v) { return Rational(v.indices()[0] + 1, 2); };
  for (int t = 0; t < 20; ++t) {
    const MultiPoly p = random_poly();
    const MultiPoly q = random_poly();
    CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
    CHECK((p - q).evaluate(at) == p.evaluate(at) - q.evaluate(at));
  }
}
