#include "lieelem/sdet.hpp"

#include <algorithm>
#include <numeric>

namespace lieelem {

namespace {

constexpr int kSmall = 8;

using SmallMatrix = std::array<std::int64_t, kSmall * kSmall>;

std::int64_t small_det(SmallMatrix m, int r) {
  if (r == 0) return 1;
  bool negate = false;
  std::int64_t previous = 1;
  for (int k = 0; k + 1 < r; ++k) {
    if (m[k * kSmall + k] == 0) {
      int p = k + 1;
      while (p < r && m[p * kSmall + k] == 0) ++p;
      if (p == r) return 0;
      for (int j = 0; j < r; ++j) std::swap(m[k * kSmall + j], m[p * kSmall + j]);
      negate = !negate;
    }
    const std::int64_t pivot = m[k * kSmall + k];
    for (int i = k + 1; i < r; ++i) {
      const std::int64_t lead = m[i * kSmall + k];
      for (int j = k + 1; j < r; ++j) m[i * kSmall + j] = (m[i * kSmall + j] * pivot - lead * m[k * kSmall + j]) / previous;
      m[i * kSmall + k] = 0;
    }
    previous = pivot;
  }
  const std::int64_t d = m[(r - 1) * kSmall + (r - 1)];
  return negate ? -d : d;
}

// rows_a / rows_b: r rows of length n; cols: the r selected columns.
std::int64_t small_sdet(const std::vector<std::array<std::int8_t, 16>>& rows_a, const std::vector<std::array<std::int8_t, 16>>& rows_b,
                        const std::vector<int>& cols) {
  const int r = static_cast<int>(rows_a.size());
  // A row that vanishes in both matrices kills every shuffle.
  for (int s = 0; s < r; ++s) {
    bool any = false;
    for (const int c : cols) any = any || rows_a[s][c] != 0 || rows_b[s][c] != 0;
    if (!any) return 0;
  }
  const std::uint32_t full = (1u << r) - 1;
  std::array<std::int64_t, 1u << kSmall> d{};
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    SmallMatrix m{};
    for (int s = 0; s < r; ++s) {
      const auto& src = (mask & (1u << s)) ? rows_a[s] : rows_b[s];
      for (int j = 0; j < r; ++j) m[s * kSmall + j] = src[cols[j]];
    }
    d[mask] = small_det(m, r);
  }
  std::int64_t total = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) total += d[mask] * d[full ^ mask];
  return total;
}

struct Rows {
  std::vector<std::array<std::int8_t, 16>> a;
  std::vector<std::array<std::int8_t, 16>> b;
};

Rows make_rows(const EdgeSystem& e) {
  Rows rows;
  for (const auto& t : e.tuples) {
    std::array<std::int8_t, 16> ra{}, rb{};
    ra[t[0] - 1] += 1;
    ra[t[1] - 1] -= 1;
    rb[t[2] - 1] += 1;
    rb[t[3] - 1] -= 1;
    rows.a.push_back(ra);
    rows.b.push_back(rb);
  }
  return rows;
}

bool use_small(const EdgeSystem& e) { return e.r() <= static_cast<std::size_t>(kSmall) && e.n <= 16; }

std::vector<std::vector<int>> column_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::int64_t sdet_columns(const EdgeSystem& e, const Rows& rows, const std::vector<int>& cols) {
  if (use_small(e)) return small_sdet(rows.a, rows.b, cols);
  const auto [a, b] = build_AB(e);
  std::vector<std::size_t> all_rows(e.r()), sel(cols.begin(), cols.end());
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  return sdet(a.select(all_rows, sel), b.select(all_rows, sel));
}

Var x_var(int j) { return Var('x', {j}); }

}  // namespace

MultiPoly sdet_via_coeff(const PMatrix& a, const PMatrix& b, SdetLimits limits) {
  if (!a.is_square()) throw DimensionError("sdet_via_coeff: matrices are not square");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sdet_via_coeff: shapes differ");
  const int n = static_cast<int>(a.rows());
  if (n > limits.max_symbolic_n) {
    throw ResourceLimitError("sdet_via_coeff: dimension exceeds the symbolic bound " + std::to_string(limits.max_symbolic_n));
  }
  PMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j) * MultiPoly::variable(x_var(static_cast<int>(j) + 1));
  const MultiPoly d = det(m);
  const MultiPoly sq = d * d;

  MultiPoly out;
  for (const auto& [mono, c] : sq.terms()) {
    bool match = true;
    std::vector<Monomial::Factor> rest;
    int seen = 0;
    for (const auto& [v, e] : mono.factors()) {
      if (v.kind() == 'x' && v.indices().size() == 1) {
        if (e != 1) {
          match = false;
          break;
        }
        ++seen;
      } else {
        rest.emplace_back(v, e);
      }
    }
    if (match && seen == n) out += MultiPoly::term(Monomial(std::move(rest)), c);
  }
  return out;
}

Rational sdet_via_coeff(const QMatrix& a, const QMatrix& b, SdetLimits limits) {
  return sdet_via_coeff(convert<MultiPoly>(a), convert<MultiPoly>(b), limits).constant_term();
}

DirectedMultigraph monomial_graph(int n, const std::vector<std::pair<int, int>>& a_edges,
                                  const std::vector<std::pair<int, int>>& b_edges) {
  DirectedMultigraph g;
  g.n = n;
  g.edges = a_edges;
  g.edges.insert(g.edges.end(), b_edges.begin(), b_edges.end());
  return g;
}

MonomialCoefficient monomial_coefficient(const DirectedMultigraph& g) {
  const int n = g.n;
  if (n < 1) throw DimensionError("monomial_coefficient: empty graph");
  if (g.edges.size() != static_cast<std::size_t>(2 * n)) throw StructureError("monomial_coefficient: expected 2n edges");
  std::vector<std::vector<std::size_t>> out_edges(static_cast<std::size_t>(n) + 1), in_edges(static_cast<std::size_t>(n) + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u < 1 || u > n || v < 1 || v > n) throw DimensionError("monomial_coefficient: vertex out of range");
    out_edges[static_cast<std::size_t>(u)].push_back(e);
    in_edges[static_cast<std::size_t>(v)].push_back(e);
  }
  for (int v = 1; v <= n; ++v) {
    if (out_edges[static_cast<std::size_t>(v)].size() != 2 || in_edges[static_cast<std::size_t>(v)].size() != 2) {
      throw StructureError("monomial_coefficient: vertex " + std::to_string(v) + " does not have in- and out-degree 2");
    }
  }

  const std::size_t m = g.edges.size();
  std::vector<std::size_t> initial_partner(m), terminal_partner(m);
  MonomialCoefficient result;
  result.from_a.assign(m, false);
  for (int v = 1; v <= n; ++v) {
    const auto& o = out_edges[static_cast<std::size_t>(v)];
    initial_partner[o[0]] = o[1];
    initial_partner[o[1]] = o[0];
    result.from_a[o[0]] = true;
    const auto& in = in_edges[static_cast<std::size_t>(v)];
    terminal_partner[in[0]] = in[1];
    terminal_partner[in[1]] = in[0];
  }

  // Walk the cycles of the auxiliary graph, alternating the two kinds of
  // adjacency, and colour its vertices alternately.
  std::vector<int> colour(m, -1);
  for (std::size_t start = 0; start < m; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::size_t cur = start;
    std::size_t length = 0;
    bool via_initial = true;
    while (true) {
      const std::size_t next = via_initial ? initial_partner[cur] : terminal_partner[cur];
      via_initial = !via_initial;
      ++length;
      if (next == start) break;
      colour[next] = 1 - colour[cur];
      cur = next;
    }
    ++result.components;
    result.cycle_lengths.push_back(length);
  }

  std::vector<int> red(static_cast<std::size_t>(n), 0), blue(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = g.edges[e];
    (colour[e] == 0 ? blue : red)[static_cast<std::size_t>(u - 1)] = v;
  }
  const int s = Permutation(blue).sign() * Permutation(red).sign();
  result.value = s * (std::int64_t{1} << result.components);
  return result;
}

void EdgeSystem::validate() const {
  if (n < 1) throw DimensionError("EdgeSystem: n must be positive");
  for (const auto& t : tuples) {
    for (std::size_t a = 0; a < 4; ++a) {
      if (t[a] < 1 || t[a] > n) throw DimensionError("EdgeSystem: label outside 1.." + std::to_string(n));
      for (std::size_t b = a + 1; b < 4; ++b)
        if (t[a] == t[b]) throw StructureError("EdgeSystem: repeated label in a tuple");
    }
  }
}

std::pair<ZMatrix, ZMatrix> build_AB(const EdgeSystem& e) {
  e.validate();
  ZMatrix a(e.r(), static_cast<std::size_t>(e.n)), b(e.r(), static_cast<std::size_t>(e.n));
  for (std::size_t s = 0; s < e.r(); ++s) {
    const auto& t = e.tuples[s];
    a(s, static_cast<std::size_t>(t[0] - 1)) = 1;
    a(s, static_cast<std::size_t>(t[1] - 1)) = -1;
    b(s, static_cast<std::size_t>(t[2] - 1)) = 1;
    b(s, static_cast<std::size_t>(t[3] - 1)) = -1;
  }
  return {a, b};
}

std::int64_t shuffle_coefficient(const EdgeSystem& e) {
  e.validate();
  const int r = static_cast<int>(e.r());
  if (r > e.n) throw DimensionError("phi: r exceeds n");
  const Rows rows = make_rows(e);
  std::int64_t total = 0;
  for (const auto& cols : column_subsets(e.n, r)) total += sdet_columns(e, rows, cols);
  return total;
}

std::vector<std::int64_t> column_deleted_sdets(const EdgeSystem& e) {
  e.validate();
  if (static_cast<int>(e.r()) != e.n - 1) throw DimensionError("column_deleted_sdets: needs r = n - 1");
  const Rows rows = make_rows(e);
  std::vector<std::int64_t> out;
  for (int k = 0; k < e.n; ++k) {
    std::vector<int> cols;
    for (int c = 0; c < e.n; ++c)
      if (c != k) cols.push_back(c);
    out.push_back(sdet_columns(e, rows, cols));
  }
  return out;
}

std::int64_t shuffle_coefficient_top(const EdgeSystem& e) {
  e.validate();
  if (static_cast<int>(e.r()) != e.n - 1) throw DimensionError("phi_top: needs r = n - 1");
  const Rows rows = make_rows(e);
  std::vector<int> cols(static_cast<std::size_t>(e.n - 1));
  std::iota(cols.begin(), cols.end(), 0);
  return e.n * sdet_columns(e, rows, cols);
}

std::vector<std::array<int, 4>> eta_term_tuples(int n) {
  std::vector<std::array<int, 4>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          out.push_back({i, j, k, l});
          out.push_back({i, k, l, j});
        }
  return out;
}

PhiTable::PhiTable(int n, int r, Method method) : n_(n), r_(r), tuples_(eta_term_tuples(n)) {
  if (r < 1 || r > n) throw DimensionError("PhiTable: r must be in 1..n");
  if (method == Method::top && r != n - 1) throw DimensionError("PhiTable: the top method needs r = n - 1");
  if (n > 16) throw ResourceLimitError("PhiTable: n exceeds 16");
  const std::size_t t = tuples_.size();
  if (t == 0) return;
  std::vector<std::uint16_t> idx(static_cast<std::size_t>(r), 0);
  EdgeSystem e{n, {}};
  while (true) {
    e.tuples.clear();
    for (const auto i : idx) e.tuples.push_back(tuples_[i]);
    const std::int64_t c = method == Method::top ? shuffle_coefficient_top(e) : shuffle_coefficient(e);
    ++scanned_;
    if (c != 0) {
      std::int64_t symmetry = 1;
      std::int64_t run = 1;
      for (std::size_t p = 1; p < idx.size(); ++p) {
        run = idx[p] == idx[p - 1] ? run + 1 : 1;
        symmetry *= run;
      }
      entries_.push_back({idx, c, symmetry});
    }
    // Next nondecreasing index sequence.
    int p = r - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == t - 1) --p;
    if (p < 0) break;
    const auto v = static_cast<std::uint16_t>(idx[static_cast<std::size_t>(p)] + 1);
    for (int q = p; q < r; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
}

Rational phi_ordered_sum(int n, int r, const std::vector<Rational>& term_weights) {
  const auto tuples = eta_term_tuples(n);
  if (term_weights.size() != tuples.size()) throw DimensionError("phi_ordered_sum: wrong number of term weights");
  if (r < 1 || r > n) throw DimensionError("phi_ordered_sum: r must be in 1..n");
  Rational total;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    EdgeSystem e{n, {}};
    Rational w(1);
    for (const auto i : idx) {
      e.tuples.push_back(tuples[i]);
      w *= term_weights[i];
    }
    if (!w.is_zero()) total += w * Rational(shuffle_coefficient(e));
    int p = r - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] + 1 == tuples.size()) {
      idx[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
  }
  return total;
}

}  // namespace lieelem
