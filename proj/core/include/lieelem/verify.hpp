#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lieelem/generators.hpp"
#include "lieelem/graphs.hpp"
#include "lieelem/sdet.hpp"
#include "lieelem/wedge.hpp"
#include "lieelem/weights.hpp"

namespace lieelem {

enum class Status { pass, fail, report };

/// "PASS", "FAIL", "REPORT".
std::string to_string(Status s);

struct VerificationReport {
  std::string theorem;
  int n = 0;
  std::uint64_t seed = 0;
  Status status = Status::fail;
  std::string lhs;
  std::string rhs;
  double elapsed_ms = 0;
  /// Extra named values (ordered), e.g. global sign, dimensions.
  std::vector<std::pair<std::string, std::string>> details;
};

/// p/q with |p| <= 100, 1 <= q <= 10.
Rational random_rational(std::mt19937_64& rng);

PairWeights<Rational> random_pair_weights(int n, std::uint64_t seed);
TripleWeights<Rational> random_triple_weights(int n, std::uint64_t seed);
QuadWeights<Rational> random_quad_weights(int n, std::uint64_t seed);

/// x = sum_{i<j} w_ij kappa_ij.
template <class R>
GroupAlgebraElement<R> kirchhoff_sum(int n, const PairWeights<R>& w);
/// y = sum_{i<j<k} w_ijk nu_ijk.
template <class R>
GroupAlgebraElement<R> nu_sum(int n, const TripleWeights<R>& w);
/// z = sum_{i<j<k<l} (w_ijkl eta_ijkl + w_iklj eta_iklj).
template <class R>
GroupAlgebraElement<R> eta_sum(int n, const QuadWeights<R>& w);

/// Weights of the eta terms of z in eta_term_tuples(n) order.
template <class R>
std::vector<R> eta_term_weights(int n, const QuadWeights<R>& w);

/// det x|_V against n * (sum over trees of w_Gamma).
template <class R>
VerificationReport verify_mtt(int n, const PairWeights<R>& w, std::uint64_t seed = 0);

/// Skew form Omega_pq = (b_p, y b_q) in the basis b_i = v_i - v_n.
template <class R>
Matrix<R> pft_form(const GroupAlgebraElement<R>& y);

/// Sign g(n) with Pf(Omega) = g(n) * n * sum delta w, pinned from a fixed
/// reference weighting (seed 0).
int pft_global_sign(int n);

/// Odd n: Pf(Omega) = g(n) * n * sum_{3-trees} delta w (checks skew symmetry
/// on the way). Even n: det y|_V = 0.
template <class R>
VerificationReport verify_pft(int n, const TripleWeights<R>& w, std::uint64_t seed = 0);

/// Action matrix of eta_ijkl on Q^n against
/// (v_l - v_k)(v_i - v_j)^T + (v_i - v_j)(v_l - v_k)^T.
VerificationReport verify_rank2(int i, int j, int k, int l, int n);

/// Coefficient tables c_E for every r = 1..n-1 plus the r = n-1 shortcut.
class MainTheoremTables {
 public:
  explicit MainTheoremTables(int n);
  int n() const { return n_; }
  const PhiTable& table(int r) const { return tables_.at(static_cast<std::size_t>(r - 1)); }
  const PhiTable& top() const { return *top_; }

 private:
  int n_;
  std::vector<PhiTable> tables_;
  std::unique_ptr<PhiTable> top_;
};

/// charpoly of z on Q^n against mu_r = Phi_r(z^r), r = 1..n-1, with the
/// constant term 0 and the r = n-1 shortcut cross-checked.
template <class R>
VerificationReport verify_main(int n, const QuadWeights<R>& w, const MainTheoremTables& tables, std::uint64_t seed = 0);

/// iota maps every Lie basis element (and `trials` random combinations) of
/// degree n to a Lie element of degree n+1; iota(1) is not Lie.
VerificationReport verify_iota(int n, int trials, std::uint64_t seed = 0, LieSolverLimits limits = {});

struct ConjectureDims {
  std::size_t dim_lie = 0;
  std::size_t dim_closure = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_quotient = 0;
  std::size_t expected_quotient = 0;  ///< (n-1)!
  std::size_t commutator_count = 0;
  std::size_t commutator_rank = 0;    ///< rank of the repeated commutators modulo K_n
  bool closure_in_lie = false;
  bool closure_equals_lie = false;
};

ConjectureDims conjecture_dims(int n, LieSolverLimits limits = {});

/// REPORT unless the proven containment closure in Lie fails (then FAIL).
VerificationReport conjecture_report(int n, LieSolverLimits limits = {});

}  // namespace lieelem
