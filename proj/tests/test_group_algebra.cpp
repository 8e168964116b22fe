#include "doctest.h"
#include "support.hpp"

using namespace lieelem;
using namespace testing_support;

TEST_CASE("element construction and printing") {
  const QElement k = kappa(2, 1, 2);
  CHECK(k.to_string() == "1 - (1 2)");
  CHECK(QElement(3).to_string() == "0");
  CHECK((k - k).is_zero());
  CHECK(k.size() == 2);
  QElement x(3);
  x.add(Permutation::parse(3, "(1 2 3)"), Rational(1, 2));
  x.add(Permutation::parse(3, "(1 2 3)"), Rational(-1, 2));
  CHECK(x.is_zero());
  CHECK_THROWS_AS(x.add(Permutation::identity(2), 1), DimensionError);
  CHECK_THROWS_AS(kappa(2, 1, 2) + kappa(3, 1, 2), DimensionError);
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const QElement a = random_element(4, rng);
    const QElement b = random_element(4, rng);
    const QElement c = random_element(4, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(QElement::one(4) * a == a);
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const QElement a = random_element(4, rng);
    const QElement b = random_element(4, rng);
    const QElement c = random_element(4, rng);
    CHECK(bracket(a, b) == -bracket(b, a));
    CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
  }
}

TEST_CASE("conjugation") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Permutation s = random_permutation(5, rng);
    const QElement x = random_element(5, rng);
    const QElement g = QElement::of(s);
    CHECK(conjugate(s, x) == g * x * QElement::of(s.inverse()));
    CHECK(conjugate(g, x) == conjugate(s, x));
  }
  CHECK_THROWS_AS(conjugate(kappa(3, 1, 2), kappa(3, 2, 3)), UnsupportedUnitError);
  CHECK_THROWS_AS(conjugate(QElement::of(Permutation::identity(3), Rational(2)), kappa(3, 2, 3)), UnsupportedUnitError);
}

TEST_CASE("coefficient sum is the trivial character") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const QElement a = random_element(4, rng);
    const QElement b = random_element(4, rng);
    CHECK(coeff_sum(a * b) == coeff_sum(a) * coeff_sum(b));
  }
  CHECK(coeff_sum(kappa(3, 1, 2)) == Rational(0));
}

TEST_CASE("iota is an algebra embedding") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const QElement a = random_element(3, rng);
    const QElement b = random_element(3, rng);
    CHECK(iota(a * b) == iota(a) * iota(b));
    CHECK(iota(a).degree() == 4);
  }
  CHECK(iota(kappa(2, 1, 2)) == kappa(3, 1, 2));
}

TEST_CASE("dense coordinates round trip") {
  std::mt19937_64 rng(1);
  const QElement a = random_element(4, rng, 8);
  CHECK(QElement::from_dense(4, a.dense()) == a);
  CHECK_THROWS_AS(QElement::from_dense(4, std::vector<Rational>(5)), DimensionError);
}

TEST_CASE("polynomial coefficients") {
  const MultiPoly w = MultiPoly::variable(Var('w', {1, 2}));
  PElement x = PElement::one(2) * w;
  x.add(Permutation::transposition(2, 1, 2), -w);
  CHECK(x.to_string() == "w[1,2] - w[1,2]*(1 2)");
  CHECK(coeff_sum(x).is_zero());
  CHECK((x * x) == x * MultiPoly(Rational(2)) * w);
}
