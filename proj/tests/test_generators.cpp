#include "doctest.h"
#include "support.hpp"

using namespace lieelem;
using namespace testing_support;

namespace {

QElement from_cycles(int n, std::initializer_list<std::pair<int, std::vector<std::vector<int>>>> terms) {
  QElement x(n);
  for (const auto& [c, cycles] : terms) x.add(Permutation::from_cycles(n, cycles), Rational(c));
  return x;
}

}  // namespace

TEST_CASE("explicit generator formulas") {
  CHECK(kappa(3, 1, 2) == from_cycles(3, {{1, {}}, {-1, {{1, 2}}}}));
  CHECK(nu(3, 1, 2, 3) == from_cycles(3, {{1, {{1, 2, 3}}}, {-1, {{1, 3, 2}}}}));
  CHECK(eta(4, 1, 2, 3, 4) == from_cycles(4, {{1, {{1, 2, 3, 4}}}, {1, {{1, 4, 3, 2}}}, {-1, {{1, 2, 4, 3}}}, {-1, {{1, 3, 4, 2}}}}));
  CHECK(make({GeneratorKind::nu, {1, 2, 3}}, 4) == nu(4, 1, 2, 3));
  CHECK(GeneratorId{GeneratorKind::eta, {1, 2, 3, 4}}.to_string() == "eta[1,2,3,4]");
  CHECK_THROWS_AS(make({GeneratorKind::kappa, {1, 1}}, 3), StructureError);
  CHECK_THROWS_AS(make({GeneratorKind::nu, {1, 2}}, 3), StructureError);
  CHECK_THROWS_AS(kappa(3, 1, 4), DimensionError);
}

TEST_CASE("nu is the bracket of two Kirchhoff differences") {
  const int n = 5;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        CHECK(bracket(kappa(n, i, j), kappa(n, j, k)) == nu(n, i, j, k));
      }
}

TEST_CASE("bracket of a Kirchhoff difference with nu") {
  const int n = 5;
  std::size_t literal_holds = 0;
  std::size_t total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const QElement b = bracket(kappa(n, i, l), nu(n, i, j, k));
          CHECK(b == eta(n, i, l, j, k));
          ++total;
          if (b == eta(n, i, j, k, l)) ++literal_holds;
        }
  CHECK(total == 120);
  // eta_ijkl itself is a different element
  CHECK(literal_holds == 0);
}

TEST_CASE("three-term relation and index symmetries") {
  CHECK((eta(5, 1, 2, 3, 4) + eta(5, 1, 3, 4, 2) + eta(5, 1, 4, 2, 3)).is_zero());
  CHECK(kappa(4, 2, 1) == kappa(4, 1, 2));
  CHECK(nu(4, 2, 3, 1) == nu(4, 1, 2, 3));
  CHECK(nu(4, 2, 1, 3) == -nu(4, 1, 2, 3));
  const RelationReport r = verify_relations(5);
  CHECK(r.ok());
  CHECK(r.checked > 0);
  CHECK_THROWS_AS(verify_relations(3), DimensionError);
}

TEST_CASE("span dimensions and the index actions") {
  const SpanDims d = span_dims(5);
  CHECK(d.kappa == 1);
  CHECK(d.nu == 1);
  CHECK(d.eta == 2);
  CHECK(d.eta_basis_ok);
  CHECK(kappa_span_is_trivial());
  CHECK(nu_span_is_sign());
  CHECK(no_invariant_line());
  const auto mats = eta_index_action_matrices();
  REQUIRE(mats.size() == 3);
  for (const auto& m : mats) CHECK(m * m == QMatrix::identity(2));
  CHECK(generated_algebra_dim(mats) == 4);
  CHECK(generated_algebra_dim({QMatrix{{1, 0}, {0, -1}}}) == 2);
}

TEST_CASE("coordinates and xi elements") {
  const XiElement<Rational> xi{{1, 2, 3, 4}, Rational(2), Rational(-1, 3)};
  const QElement z = to_element(xi, 4);
  CHECK(z == eta(4, 1, 2, 3, 4) * Rational(2) + eta(4, 1, 3, 4, 2) * Rational(-1, 3));
  const auto c = coordinates_in({eta(4, 1, 2, 3, 4), eta(4, 1, 3, 4, 2)}, z);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rational(2));
  CHECK((*c)[1] == Rational(-1, 3));
  CHECK(!coordinates_in({eta(4, 1, 2, 3, 4)}, kappa(4, 1, 2)).has_value());
}

TEST_CASE("closure of the Kirchhoff differences") {
  CHECK(lie_closure({kappa(2, 1, 2)}, 2).size() == 1);
  const auto c3 = lie_closure(all_kappas(3), 3);
  CHECK(coordinates_in(c3, nu(3, 1, 2, 3)).has_value());
  for (int n = 3; n <= 5; ++n) {
    const auto closure = lie_closure(all_kappas(n), n);
    const auto space = lie_space(n);
    for (const auto& x : closure) CHECK(coordinates_in(space.basis, x).has_value());
    CHECK(closure.size() <= space.dim());
  }
  // idempotent and monotone
  const auto c4 = lie_closure(all_kappas(4), 4);
  CHECK(lie_closure(c4, 4).size() == c4.size());
  CHECK(lie_closure({kappa(4, 1, 2), kappa(4, 2, 3)}, 4).size() <= c4.size());
  CHECK_THROWS_AS(lie_closure(all_kappas(4), 4, ClosureLimits{3}), ResourceLimitError);
}

TEST_CASE("repeated commutators") {
  for (int n = 2; n <= 5; ++n) {
    const auto set = repeated_commutator_set(n);
    CHECK(set.size() == factorial(n - 1));
    if (n <= 4)
      for (const auto& x : set) CHECK(is_lie(x));
  }
  CHECK(repeated_commutator_set(2).front() == kappa(2, 1, 2));
  const auto s3 = repeated_commutator_set(3);
  CHECK(s3[0] == nu(3, 1, 2, 3));
  CHECK(s3[1] == -nu(3, 1, 2, 3));
}
