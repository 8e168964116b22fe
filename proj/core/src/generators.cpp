#include "lieelem/generators.hpp"

#include <algorithm>
#include <numeric>

#include "lieelem/linalg.hpp"

namespace lieelem {

namespace {

void check_indices(const std::vector<int>& idx, std::size_t expected, int n) {
  if (idx.size() != expected) throw StructureError("generator: wrong number of indices");
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > n) throw DimensionError("generator: index outside 1.." + std::to_string(n));
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b]) throw StructureError("generator: repeated index");
  }
}

QElement cycle(int n, std::vector<int> c) { return QElement::of(Permutation::from_cycles(n, {std::move(c)})); }

std::vector<std::vector<int>> orderings(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::string GeneratorId::to_string() const {
  std::string s = kind == GeneratorKind::kappa ? "kappa" : (kind == GeneratorKind::nu ? "nu" : "eta");
  s += '[';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices[i]);
  }
  return s + ']';
}

QElement make(const GeneratorId& id, int n) {
  const auto& x = id.indices;
  switch (id.kind) {
    case GeneratorKind::kappa:
      check_indices(x, 2, n);
      return QElement::one(n) - cycle(n, {x[0], x[1]});
    case GeneratorKind::nu:
      check_indices(x, 3, n);
      return cycle(n, {x[0], x[1], x[2]}) - cycle(n, {x[0], x[2], x[1]});
    case GeneratorKind::eta: {
      check_indices(x, 4, n);
      const int i = x[0], j = x[1], k = x[2], l = x[3];
      return cycle(n, {i, j, k, l}) + cycle(n, {i, l, k, j}) - cycle(n, {i, j, l, k}) - cycle(n, {i, k, l, j});
    }
  }
  throw StructureError("generator: unknown kind");
}

QElement kappa(int n, int i, int j) { return make({GeneratorKind::kappa, {i, j}}, n); }
QElement nu(int n, int i, int j, int k) { return make({GeneratorKind::nu, {i, j, k}}, n); }
QElement eta(int n, int i, int j, int k, int l) { return make({GeneratorKind::eta, {i, j, k, l}}, n); }

template <class R>
GroupAlgebraElement<R> to_element(const XiElement<R>& xi, int n) {
  const auto [i, j, k, l] = xi.indices;
  if (!(i < j && j < k && k < l)) throw StructureError("xi: indices must be strictly increasing");
  GroupAlgebraElement<R> out(n);
  const auto accumulate = [&](const QElement& e, const R& w) {
    for (const auto& [p, c] : e.terms()) out.add(p, R(c) * w);
  };
  accumulate(eta(n, i, j, k, l), xi.w1);
  accumulate(eta(n, i, k, l, j), xi.w2);
  return out;
}

template GroupAlgebraElement<Rational> to_element(const XiElement<Rational>&, int);
template GroupAlgebraElement<MultiPoly> to_element(const XiElement<MultiPoly>&, int);

std::vector<QElement> all_kappas(int n) {
  std::vector<QElement> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(kappa(n, i, j));
  return out;
}

RelationReport verify_relations(int n) {
  if (n < 4) throw DimensionError("verify_relations: needs n >= 4");
  RelationReport report;
  const auto check = [&](bool holds, const std::string& what) {
    ++report.checked;
    if (!holds) report.violations.push_back(what);
  };
  const auto name = [](const char* k, const std::vector<int>& v) { return GeneratorId{k[0] == 'k' ? GeneratorKind::kappa : (k[0] == 'n' ? GeneratorKind::nu : GeneratorKind::eta), v}.to_string(); };

  for (const auto& s : subsets(n, 2)) {
    for (const auto& o : orderings(s)) {
      const int p = o[0], q = o[1];
      check(kappa(n, q, p) == kappa(n, p, q), name("kappa", {q, p}) + " = " + name("kappa", {p, q}));
    }
  }
  for (const auto& s : subsets(n, 3)) {
    for (const auto& o : orderings(s)) {
      const int p = o[0], q = o[1], r = o[2];
      const QElement v = nu(n, p, q, r);
      check(v == nu(n, q, r, p), name("nu", {p, q, r}) + " = " + name("nu", {q, r, p}));
      check(v == -nu(n, q, p, r), name("nu", {p, q, r}) + " = -" + name("nu", {q, p, r}));
    }
  }
  for (const auto& s : subsets(n, 4)) {
    for (const auto& o : orderings(s)) {
      const int p = o[0], q = o[1], r = o[2], t = o[3];
      const QElement e = eta(n, p, q, r, t);
      const std::string lhs = name("eta", {p, q, r, t});
      check(e == -eta(n, q, p, r, t), lhs + " = -" + name("eta", {q, p, r, t}));
      check(e == -eta(n, p, q, t, r), lhs + " = -" + name("eta", {p, q, t, r}));
      check(e == eta(n, t, r, q, p), lhs + " = " + name("eta", {t, r, q, p}));
      check(e == eta(n, r, t, p, q), lhs + " = " + name("eta", {r, t, p, q}));
      check(e == eta(n, q, p, t, r), lhs + " = " + name("eta", {q, p, t, r}));
      check((e + eta(n, p, r, t, q) + eta(n, p, t, q, r)).is_zero(),
            lhs + " + " + name("eta", {p, r, t, q}) + " + " + name("eta", {p, t, q, r}) + " = 0");
    }
  }
  return report;
}

std::size_t span_rank(const std::vector<QElement>& elements) {
  if (elements.empty()) return 0;
  RowSpace space(factorial(elements.front().degree()));
  for (const auto& e : elements) space.add(e.dense());
  return space.rank();
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<QElement>& basis, const QElement& y) {
  // Restrict to the joint support, then solve [basis | y] by row reduction.
  std::vector<Permutation> support;
  for (const auto& b : basis)
    for (const auto& [p, c] : b.terms()) support.push_back(p);
  for (const auto& [p, c] : y.terms()) support.push_back(p);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  QMatrix aug(support.size(), basis.size() + 1);
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) aug(r, c) = basis[c].coeff(support[r]);
    aug(r, basis.size()) = y.coeff(support[r]);
  }
  const RowEchelon e = rref(aug);
  std::vector<Rational> coords(basis.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == basis.size()) return std::nullopt;
    coords[e.pivots[i]] = e.reduced(i, basis.size());
  }
  return coords;
}

SpanDims span_dims(int n) {
  if (n < 4) throw DimensionError("span_dims: needs n >= 4");
  SpanDims dims;
  bool first = true;
  const auto span_over = [&](const std::vector<int>& labels, auto&& builder) {
    std::vector<QElement> family;
    for (const auto& o : orderings(labels)) family.push_back(builder(o));
    return family;
  };
  for (const auto& s4 : subsets(n, 4)) {
    const std::vector<int> s2{s4[0], s4[1]};
    const std::vector<int> s3{s4[0], s4[1], s4[2]};
    const auto ks = span_over(s2, [&](const std::vector<int>& o) { return kappa(n, o[0], o[1]); });
    const auto ns = span_over(s3, [&](const std::vector<int>& o) { return nu(n, o[0], o[1], o[2]); });
    const auto hs = span_over(s4, [&](const std::vector<int>& o) { return eta(n, o[0], o[1], o[2], o[3]); });
    const int i = s4[0], j = s4[1], k = s4[2], l = s4[3];
    const std::vector<QElement> eta_basis{eta(n, i, j, k, l), eta(n, i, k, l, j)};
    bool basis_ok = span_rank(eta_basis) == 2;
    for (const auto& h : hs) basis_ok = basis_ok && coordinates_in(eta_basis, h).has_value();
    SpanDims here{span_rank(ks), span_rank(ns), span_rank(hs), basis_ok};
    if (first) {
      dims = here;
      first = false;
    } else if (here.kappa != dims.kappa || here.nu != dims.nu || here.eta != dims.eta || here.eta_basis_ok != dims.eta_basis_ok) {
      // Different index sets disagree; report the failure through the basis flag.
      dims.eta_basis_ok = false;
    }
  }
  return dims;
}

std::vector<QMatrix> eta_index_action_matrices() {
  const int n = 4;
  const std::vector<QElement> basis{eta(n, 1, 2, 3, 4), eta(n, 1, 3, 4, 2)};
  std::vector<QMatrix> mats;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}) {
    const Permutation pi = Permutation::transposition(n, a, b);
    QMatrix m(2, 2);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      // Relabeling the indices of eta by pi is conjugation by pi.
      const auto coords = coordinates_in(basis, conjugate(pi, basis[c]));
      if (!coords) throw StructureError("eta space is not invariant under index permutation");
      m(0, c) = (*coords)[0];
      m(1, c) = (*coords)[1];
    }
    mats.push_back(std::move(m));
  }
  return mats;
}

std::size_t generated_algebra_dim(const std::vector<QMatrix>& generators) {
  if (generators.empty()) return 1;
  const std::size_t d = generators.front().rows();
  RowSpace span(d * d);
  std::vector<QMatrix> frontier{QMatrix::identity(d)};
  span.add(frontier.front().data());
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        QMatrix p = w * g;
        if (span.add(p.data())) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return span.rank();
}

bool no_invariant_line() {
  const auto mats = eta_index_action_matrices();
  return generated_algebra_dim(mats) == 4;
}

bool kappa_span_is_trivial() {
  const int n = 2;
  const QElement k = kappa(n, 1, 2);
  return conjugate(Permutation::transposition(n, 1, 2), k) == k;
}

bool nu_span_is_sign() {
  const int n = 3;
  const QElement v = nu(n, 1, 2, 3);
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}}) {
    if (!(conjugate(Permutation::transposition(n, a, b), v) == -v)) return false;
  }
  return true;
}

std::vector<QElement> lie_closure(const std::vector<QElement>& generators, int n, ClosureLimits limits) {
  if (n > limits.max_n) {
    throw ResourceLimitError("lie_closure: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_n));
  }
  RowSpace space(factorial(n));
  std::vector<QElement> found;
  for (const auto& g : generators) {
    if (g.degree() != n) throw DimensionError("lie_closure: generator degree mismatch");
    if (space.add(g.dense())) found.push_back(g);
  }
  // Brackets with generators only: left-normed commutators span the generated algebra.
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const auto& g : generators) {
      QElement b = bracket(found[next], g);
      if (space.add(b.dense())) found.push_back(std::move(b));
    }
  }
  std::vector<QElement> basis;
  for (const auto& row : space.basis()) basis.push_back(QElement::from_dense(n, row));
  return basis;
}

std::vector<QElement> repeated_commutator_set(int n, ClosureLimits limits) {
  if (n > limits.max_n) {
    throw ResourceLimitError("repeated_commutator_set: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_n));
  }
  if (n < 2) return {};
  std::vector<QElement> out;
  std::vector<int> choice(static_cast<std::size_t>(n - 1));
  const auto rec = [&](auto&& self, int s) -> void {
    if (s == n) {
      QElement x = kappa(n, 1, choice[0]);
      for (int t = 2; t <= n - 1; ++t) x = bracket(x, kappa(n, t, choice[static_cast<std::size_t>(t - 1)]));
      out.push_back(std::move(x));
      return;
    }
    for (int i = s + 1; i <= n; ++i) {
      choice[static_cast<std::size_t>(s - 1)] = i;
      self(self, s + 1);
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace lieelem
