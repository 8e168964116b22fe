#include "lieelem/verify.hpp"

#include <chrono>

namespace lieelem {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class R>
void add_scaled(GroupAlgebraElement<R>& out, const QElement& x, const R& w) {
  if (is_zero(w)) return;
  for (const auto& [p, c] : x.terms()) out.add(p, R(c) * w);
}

template <class R>
std::string list_string(const std::vector<R>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

template <class R>
R negate(const R& x) {
  return R{} - x;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::report:
      return "REPORT";
  }
  return "FAIL";
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 10);
  const long p = num(rng);
  const long q = den(rng);
  return Rational(p, q);
}

PairWeights<Rational> random_pair_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PairWeights<Rational> w(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w.set(i, j, random_rational(rng));
  return w;
}

TripleWeights<Rational> random_triple_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TripleWeights<Rational> w(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) w.set(i, j, k, random_rational(rng));
  return w;
}

QuadWeights<Rational> random_quad_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuadWeights<Rational> w(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const Rational w1 = random_rational(rng);
          const Rational w2 = random_rational(rng);
          w.set_pair({i, j, k, l}, w1, w2);
        }
  return w;
}

template <class R>
GroupAlgebraElement<R> kirchhoff_sum(int n, const PairWeights<R>& w) {
  GroupAlgebraElement<R> x(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) add_scaled(x, kappa(n, i, j), w.get_or_zero(i, j));
  return x;
}

template <class R>
GroupAlgebraElement<R> nu_sum(int n, const TripleWeights<R>& w) {
  GroupAlgebraElement<R> y(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) add_scaled(y, nu(n, i, j, k), w.get_or_zero(i, j, k));
  return y;
}

template <class R>
GroupAlgebraElement<R> eta_sum(int n, const QuadWeights<R>& w) {
  GroupAlgebraElement<R> z(n);
  for (const auto& [t, pair] : w.values()) {
    add_scaled(z, eta(n, t[0], t[1], t[2], t[3]), pair.first);
    add_scaled(z, eta(n, t[0], t[2], t[3], t[1]), pair.second);
  }
  return z;
}

template <class R>
std::vector<R> eta_term_weights(int n, const QuadWeights<R>& w) {
  std::vector<R> out;
  const auto tuples = eta_term_tuples(n);
  for (std::size_t t = 0; t < tuples.size(); t += 2) {
    const auto [w1, w2] = w.get_or_zero(tuples[t]);
    out.push_back(w1);
    out.push_back(w2);
  }
  return out;
}

template <class R>
VerificationReport verify_mtt(int n, const PairWeights<R>& w, std::uint64_t seed) {
  const auto start = Clock::now();
  if (n < 2) throw DimensionError("verify_mtt: needs n >= 2");
  VerificationReport rep{"mtt", n, seed, Status::fail, "", "", 0, {}};
  const auto x = kirchhoff_sum(n, w);
  const R lhs = det(action_matrix(x, Representation::reflection));
  PairWeights<R> full = w;
  full.fill_missing();
  const R rhs = R(n) * tree_sum(n, full);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.status = lhs == rhs ? Status::pass : Status::fail;
  rep.details.emplace_back("trees", std::to_string(enumerate_trees(n).size()));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

template <class R>
Matrix<R> pft_form(const GroupAlgebraElement<R>& y) {
  const int n = y.degree();
  const Matrix<R> a = action_matrix(y, Representation::permutation);
  const auto d = static_cast<std::size_t>(n - 1);
  const std::size_t last = d;
  Matrix<R> omega(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) omega(p, q) = a(p, q) - a(p, last) - a(last, q) + a(last, last);
  return omega;
}

int pft_global_sign(int n) {
  if (n % 2 == 0 || n < 3) throw DimensionError("pft_global_sign: needs odd n >= 3");
  for (std::uint64_t seed = 0;; ++seed) {
    const auto w = random_triple_weights(n, seed);
    const Rational pf = pfaffian(pft_form(nu_sum(n, w)));
    const Rational rhs = Rational(n) * signed_three_tree_sum(n, w);
    if (rhs.is_zero()) continue;
    return (pf / rhs).sign();
  }
}

template <class R>
VerificationReport verify_pft(int n, const TripleWeights<R>& w, std::uint64_t seed) {
  const auto start = Clock::now();
  if (n < 3) throw DimensionError("verify_pft: needs n >= 3");
  VerificationReport rep{"pft", n, seed, Status::fail, "", "", 0, {}};
  const auto y = nu_sum(n, w);
  if (n % 2 == 0) {
    const R d = det(action_matrix(y, Representation::reflection));
    rep.lhs = to_string(d);
    rep.rhs = "0";
    rep.status = is_zero(d) ? Status::pass : Status::fail;
    rep.details.emplace_back("identity", "det y|_V = 0");
    rep.elapsed_ms = ms_since(start);
    return rep;
  }
  const Matrix<R> omega = pft_form(y);
  const R pf = pfaffian(omega);  // throws unless omega is skew-symmetric
  TripleWeights<R> full = w;
  full.fill_missing();
  const R sum = R(n) * signed_three_tree_sum(n, full);
  const int g = pft_global_sign(n);
  const R rhs = g > 0 ? sum : negate(sum);
  rep.lhs = to_string(pf);
  rep.rhs = to_string(rhs);
  rep.status = pf == rhs ? Status::pass : Status::fail;
  const R pf_sq = pf * pf;
  const R literal = R(n) * sum * sum;
  rep.details.emplace_back("identity", "Pf(Omega) = global_sign * n * sum delta(T) w_T");
  rep.details.emplace_back("global_sign", std::to_string(g));
  rep.details.emplace_back("pf_squared", to_string(pf_sq));
  rep.details.emplace_back("n_sum_squared", to_string(sum * sum));
  rep.details.emplace_back("pf_squared_equals_n_times_n_sum_squared", pf_sq == literal ? "true" : "false");
  rep.details.emplace_back("three_trees", std::to_string(enumerate_three_trees((n - 1) / 2).size()));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport verify_rank2(int i, int j, int k, int l, int n) {
  const auto start = Clock::now();
  VerificationReport rep{"rank2", n, 0, Status::fail, "", "", 0, {}};
  const QMatrix lhs = action_matrix(eta(n, i, j, k, l), Representation::permutation);
  std::vector<Rational> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  a[static_cast<std::size_t>(i - 1)] += 1;
  a[static_cast<std::size_t>(j - 1)] -= 1;
  b[static_cast<std::size_t>(l - 1)] += 1;
  b[static_cast<std::size_t>(k - 1)] -= 1;
  // M[alpha, v] u = (alpha, u) v has matrix v alpha^T.
  QMatrix rhs(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < rhs.rows(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) = b[r] * a[c] + a[r] * b[c];
  rep.lhs = lhs.to_string();
  rep.rhs = rhs.to_string();
  rep.status = lhs == rhs ? Status::pass : Status::fail;
  rep.details.emplace_back("trace", trace(rhs).to_string());
  rep.details.emplace_back("rank", std::to_string(rank(lhs)));
  rep.elapsed_ms = ms_since(start);
  return rep;
}

MainTheoremTables::MainTheoremTables(int n) : n_(n) {
  if (n < 2) throw DimensionError("MainTheoremTables: needs n >= 2");
  for (int r = 1; r <= n - 1; ++r) tables_.emplace_back(n, r);
  top_ = std::make_unique<PhiTable>(n, n - 1, PhiTable::Method::top);
}

template <class R>
VerificationReport verify_main(int n, const QuadWeights<R>& w, const MainTheoremTables& tables, std::uint64_t seed) {
  const auto start = Clock::now();
  if (tables.n() != n) throw DimensionError("verify_main: tables built for another n");
  VerificationReport rep{"main", n, seed, Status::fail, "", "", 0, {}};
  const auto z = eta_sum(n, w);
  const auto cp = charpoly(action_matrix(z, Representation::permutation));
  const auto weights = eta_term_weights(n, w);
  std::vector<R> mu, phis;
  bool ok = is_zero(cp[0]);
  for (int r = 1; r <= n - 1; ++r) {
    mu.push_back(cp[static_cast<std::size_t>(n - r)]);
    phis.push_back(tables.table(r).evaluate(weights));
    ok = ok && mu.back() == phis.back();
  }
  const R top = tables.top().evaluate(weights);
  ok = ok && top == phis.back();
  rep.lhs = list_string(mu);
  rep.rhs = list_string(phis);
  rep.status = ok ? Status::pass : Status::fail;
  rep.details.emplace_back("constant_term", to_string(cp[0]));
  rep.details.emplace_back("phi_top", to_string(top));
  rep.details.emplace_back("normalization", "sum over multisets E of c_E prod w / prod k!");
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport verify_iota(int n, int trials, std::uint64_t seed, LieSolverLimits limits) {
  const auto start = Clock::now();
  VerificationReport rep{"iota", n, seed, Status::fail, "", "", 0, {}};
  const LieSpaceResult space = lie_space(n, Representation::permutation, limits);
  std::mt19937_64 rng(seed);
  std::vector<QElement> samples = space.basis;
  for (int t = 0; t < trials && !space.basis.empty(); ++t) {
    QElement x(n);
    for (const auto& b : space.basis) x += b * random_rational(rng);
    samples.push_back(std::move(x));
  }
  std::size_t good = 0;
  for (const auto& x : samples)
    if (is_lie(iota(x))) ++good;
  const bool unit_rejected = !is_lie(iota(QElement::one(n)));
  rep.lhs = std::to_string(good);
  rep.rhs = std::to_string(samples.size());
  rep.status = good == samples.size() && unit_rejected ? Status::pass : Status::fail;
  rep.details.emplace_back("dim_lie", std::to_string(space.dim()));
  rep.details.emplace_back("iota_of_unit_is_lie", unit_rejected ? "false" : "true");
  rep.elapsed_ms = ms_since(start);
  return rep;
}

ConjectureDims conjecture_dims(int n, LieSolverLimits limits) {
  if (n < 2) throw DimensionError("conjecture_dims: needs n >= 2");
  ConjectureDims d;
  const LieSpaceResult space = lie_space(n, Representation::permutation, limits);
  const KernelDims k = kernel_dim(space);
  const auto closure = lie_closure(all_kappas(n), n, ClosureLimits{limits.max_n});
  RowSpace lie_span(factorial(n));
  for (const auto& b : space.basis) lie_span.add(b.dense());
  d.closure_in_lie = true;
  for (const auto& c : closure) d.closure_in_lie = d.closure_in_lie && lie_span.contains(c.dense());
  d.dim_lie = space.dim();
  d.dim_closure = closure.size();
  d.dim_kernel = k.dim_kernel;
  d.dim_quotient = k.quotient();
  d.expected_quotient = factorial(n - 1);
  d.closure_equals_lie = d.closure_in_lie && d.dim_closure == d.dim_lie;
  const auto commutators = repeated_commutator_set(n, ClosureLimits{limits.max_n});
  RowSpace images(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& c : commutators) images.add(action_vector(c));
  d.commutator_count = commutators.size();
  d.commutator_rank = images.rank();
  return d;
}

VerificationReport conjecture_report(int n, LieSolverLimits limits) {
  const auto start = Clock::now();
  const ConjectureDims d = conjecture_dims(n, limits);
  VerificationReport rep{"conjectures", n, 0, Status::report, "", "", 0, {}};
  rep.lhs = std::to_string(d.dim_quotient);
  rep.rhs = std::to_string(d.expected_quotient);
  rep.status = d.closure_in_lie ? Status::report : Status::fail;
  rep.details = {
      {"dim_lie", std::to_string(d.dim_lie)},
      {"dim_closure", std::to_string(d.dim_closure)},
      {"dim_kernel", std::to_string(d.dim_kernel)},
      {"dim_quotient", std::to_string(d.dim_quotient)},
      {"factorial_n_minus_1", std::to_string(d.expected_quotient)},
      {"commutator_count", std::to_string(d.commutator_count)},
      {"commutator_rank_mod_kernel", std::to_string(d.commutator_rank)},
      {"closure_in_lie", d.closure_in_lie ? "true" : "false"},
      {"closure_equals_lie", d.closure_equals_lie ? "true" : "false"},
  };
  rep.elapsed_ms = ms_since(start);
  return rep;
}

template GroupAlgebraElement<Rational> kirchhoff_sum(int, const PairWeights<Rational>&);
template GroupAlgebraElement<MultiPoly> kirchhoff_sum(int, const PairWeights<MultiPoly>&);
template GroupAlgebraElement<Rational> nu_sum(int, const TripleWeights<Rational>&);
template GroupAlgebraElement<MultiPoly> nu_sum(int, const TripleWeights<MultiPoly>&);
template GroupAlgebraElement<Rational> eta_sum(int, const QuadWeights<Rational>&);
template GroupAlgebraElement<MultiPoly> eta_sum(int, const QuadWeights<MultiPoly>&);
template std::vector<Rational> eta_term_weights(int, const QuadWeights<Rational>&);
template std::vector<MultiPoly> eta_term_weights(int, const QuadWeights<MultiPoly>&);
template VerificationReport verify_mtt(int, const PairWeights<Rational>&, std::uint64_t);
template VerificationReport verify_mtt(int, const PairWeights<MultiPoly>&, std::uint64_t);
template QMatrix pft_form(const QElement&);
template PMatrix pft_form(const PElement&);
template VerificationReport verify_pft(int, const TripleWeights<Rational>&, std::uint64_t);
template VerificationReport verify_pft(int, const TripleWeights<MultiPoly>&, std::uint64_t);
template VerificationReport verify_main(int, const QuadWeights<Rational>&, const MainTheoremTables&, std::uint64_t);
template VerificationReport verify_main(int, const QuadWeights<MultiPoly>&, const MainTheoremTables&, std::uint64_t);

}  // namespace lieelem
