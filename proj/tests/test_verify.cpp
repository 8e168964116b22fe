#include "doctest.h"
#include "support.hpp"

using namespace lieelem;
using namespace testing_support;

namespace {

/// Kirchhoff: reduced Laplacian determinant counts weighted spanning trees.
template <class R>
R reduced_laplacian_det(int n, const PairWeights<R>& w) {
  Matrix<R> l(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    R diag{};
    for (int j = 1; j <= n; ++j)
      if (j != i) diag += w.get_or_zero(i, j);
    l(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = diag;
    for (int j = 1; j < n; ++j)
      if (j != i) l(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = R{} - w.get_or_zero(i, j);
  }
  return cofactor_det(l);
}

std::string detail_value(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("MTT on small inputs") {
  PairWeights<Rational> w2(2);
  w2.set(1, 2, Rational(1));
  CHECK(det(action_matrix(kirchhoff_sum(2, w2), Representation::reflection)) == Rational(2));
  CHECK(verify_mtt(2, w2).status == Status::pass);

  PairWeights<Rational> ones(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) ones.set(i, j, Rational(1));
  const auto r = verify_mtt(3, ones);
  CHECK(r.status == Status::pass);
  CHECK(r.lhs == "9");
  CHECK(r.rhs == "9");
}

TEST_CASE("MTT against the reduced Laplacian") {
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto w = random_pair_weights(n, seed);
      const Rational lhs = det(action_matrix(kirchhoff_sum(n, w), Representation::reflection));
      CHECK(lhs == Rational(n) * reduced_laplacian_det(n, w));
      CHECK(verify_mtt(n, w, seed).status == Status::pass);
    }
}

TEST_CASE("MTT symbolic") {
  const auto w3 = PairWeights<MultiPoly>::symbolic(3);
  const MultiPoly w12 = w3.at(1, 2), w13 = w3.at(1, 3), w23 = w3.at(2, 3);
  const MultiPoly lhs = det(action_matrix(kirchhoff_sum(3, w3), Representation::reflection));
  CHECK(lhs == MultiPoly(Rational(3)) * (w12 * w13 + w12 * w23 + w13 * w23));
  CHECK(verify_mtt(3, w3).status == Status::pass);

  const auto w4 = PairWeights<MultiPoly>::symbolic(4);
  const MultiPoly d = det(action_matrix(kirchhoff_sum(4, w4), Representation::reflection));
  CHECK(d == MultiPoly(Rational(4)) * reduced_laplacian_det(4, w4));
  CHECK(d.size() == 16);
  CHECK(verify_mtt(4, w4).status == Status::pass);
}

TEST_CASE("PfT at n = 3 symbolic") {
  const auto w = TripleWeights<MultiPoly>::symbolic(3);
  const MultiPoly x = w.at(1, 2, 3);
  const PMatrix omega = pft_form(nu_sum(3, w));
  REQUIRE(omega.rows() == 2);
  CHECK(omega(0, 1) == MultiPoly(Rational(0)) - omega(1, 0));
  CHECK(pfaffian(omega) * pfaffian(omega) == MultiPoly(Rational(9)) * x * x);
  CHECK(det(omega) == MultiPoly(Rational(9)) * x * x);
  const auto r = verify_pft(3, w);
  CHECK(r.status == Status::pass);
  CHECK(detail_value(r, "pf_squared_equals_n_times_n_sum_squared") == "false");
}

TEST_CASE("PfT global sign is stable") {
  CHECK(pft_global_sign(3) == -1);
  CHECK(pft_global_sign(5) == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = random_triple_weights(5, seed);
    const auto r = verify_pft(5, w, seed);
    CHECK(r.status == Status::pass);
    const Rational pf = pfaffian(pft_form(nu_sum(5, w)));
    CHECK(pf == Rational(5 * pft_global_sign(5)) * signed_three_tree_sum(5, w));
  }
}

TEST_CASE("PfT even n degenerates") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto w = random_triple_weights(4, seed);
    CHECK(det(action_matrix(nu_sum(4, w), Representation::reflection)).is_zero());
    CHECK(verify_pft(4, w, seed).status == Status::pass);
  }
}

TEST_CASE("rank-two action of eta") {
  for (int n = 4; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            const auto r = verify_rank2(i, j, k, l, n);
            CHECK(r.status == Status::pass);
            CHECK(rank(action_matrix(eta(n, i, j, k, l), Representation::permutation)) == 2);
          }
}

TEST_CASE("main theorem at n = 4") {
  const MainTheoremTables tables(4);
  QuadWeights<Rational> single(4);
  single.set_pair({1, 2, 3, 4}, Rational(1), Rational(0));
  const auto r = verify_main(4, single, tables);
  CHECK(r.status == Status::pass);
  CHECK(r.lhs == "[0, -4, 0]");
  const auto cp = charpoly(action_matrix(eta(4, 1, 2, 3, 4), Representation::permutation));
  CHECK(cp[2] == Rational(-4));
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(verify_main(4, random_quad_weights(4, seed), tables, seed).status == Status::pass);

  const auto sym = QuadWeights<MultiPoly>::symbolic(4);
  CHECK(verify_main(4, sym, tables).status == Status::pass);
}

TEST_CASE("main theorem at n = 5") {
  const MainTheoremTables tables(5);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto r = verify_main(5, random_quad_weights(5, seed), tables, seed);
    CHECK(r.status == Status::pass);
    CHECK(r.lhs.ends_with(", " + detail_value(r, "phi_top") + "]"));
  }
}

TEST_CASE("iota preserves Lie elements") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = verify_iota(n, 3, 11);
    CHECK(r.status == Status::pass);
    CHECK(r.lhs == r.rhs);
  }
}

TEST_CASE("conjecture data at n = 2 and 3") {
  const auto d2 = conjecture_dims(2);
  CHECK(d2.dim_lie == 1);
  CHECK(d2.dim_closure == 1);
  CHECK(d2.dim_kernel == 0);
  CHECK(d2.dim_quotient == 1);
  CHECK(d2.closure_in_lie);
  const auto d3 = conjecture_dims(3);
  CHECK(d3.dim_lie == lie_space(3).dim());
  CHECK(d3.expected_quotient == 2);
  CHECK(d3.closure_in_lie);
  CHECK(conjecture_report(3).status == Status::report);
}
