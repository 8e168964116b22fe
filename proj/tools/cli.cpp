#include "cli.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace lietool {

using namespace lieelem;
using ojson = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 1;
  std::string weights;
  bool symbolic = false;
  std::string format = "text";
  std::string out;
  bool allow_heavy = false;
  int jobs = 1;
  bool timing = false;
  std::string results_dir;
  // command specific
  std::string indices = "1,2,3,4";
  std::string rep = "permutation";
  std::string a;
  std::string b;
  std::string a_edges;
  std::string b_edges;
  std::string method = "shuffle";
  int r = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> locate(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ojson parse_json(const std::string& text, const std::string& what) {
  try {
    return ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    const auto [line, col] = locate(text, e.byte);
    std::string msg = e.what();
    const auto p = msg.find(": ");
    if (p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(what + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

Rational json_rational(const ojson& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>(), 1);
  throw ParseError(where + ": expected a rational string such as \"3/4\"");
}

int json_index(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer index");
  return v.get<int>();
}

template <class F>
void read_entries(const ojson& root, const char* key, std::size_t arity, F&& apply) {
  if (!root.contains(key)) return;
  const ojson& list = root.at(key);
  if (!list.is_array()) throw ParseError(std::string("weights: ") + key + " must be an array");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = std::string("weights: ") + key + "[" + std::to_string(e) + "]";
    const ojson& item = list[e];
    if (!item.is_array() || item.size() != arity + 1) {
      throw ParseError(where + ": expected " + std::to_string(arity) + " indices and a weight");
    }
    std::vector<int> idx;
    for (std::size_t k = 0; k < arity; ++k) idx.push_back(json_index(item[k], where));
    const Rational w = json_rational(item[arity], where);
    try {
      apply(idx, w);
    } catch (const ConflictError&) {
      throw;
    } catch (const Error& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string plain(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void check_bound(const RunConfig& cfg, bool within, const std::string& what, std::ostream& err) {
  if (within) return;
  if (!cfg.allow_heavy) throw ResourceLimitError(what + " (pass --allow-heavy to lift the bound)");
  err << "warning: " << what << "; running anyway because of --allow-heavy\n";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

template <class F>
std::vector<VerificationReport> run_pool(int count, int jobs, F&& f) {
  std::vector<std::optional<VerificationReport>> results(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int t = next++; t < count; t = next++) {
      try {
        results[static_cast<std::size_t>(t)] = f(t);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<VerificationReport> out;
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
    out.push_back(std::move(*results[t]));
  }
  return out;
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  void reports(const std::vector<VerificationReport>& reps) {
    if (cfg_.format == "json") {
      ojson arr = ojson::array();
      for (const auto& r : reps) arr.push_back(report_json(r, cfg_.timing));
      buf_ << arr.dump(2) << "\n";
    } else if (cfg_.format == "csv") {
      buf_ << "theorem,n,seed,status,lhs,rhs,elapsed_ms\n";
      for (const auto& r : reps) {
        buf_ << csv_field(r.theorem) << ',' << r.n << ',' << r.seed << ',' << to_string(r.status) << ',' << csv_field(r.lhs) << ','
             << csv_field(r.rhs) << ',';
        if (cfg_.timing) buf_ << r.elapsed_ms;
        buf_ << "\n";
      }
    } else {
      for (const auto& r : reps) {
        buf_ << to_string(r.status) << ' ' << r.theorem << " n=" << r.n << " seed=" << r.seed << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (cfg_.timing) buf_ << " elapsed_ms=" << r.elapsed_ms;
        buf_ << "\n";
      }
    }
  }

  /// text_key names the single field printed per line in text format; empty prints key=value pairs.
  void records(const ojson& arr, const std::string& text_key = "") {
    if (cfg_.format == "json") {
      buf_ << arr.dump(2) << "\n";
      return;
    }
    if (cfg_.format == "csv") {
      if (arr.empty()) return;
      bool first = true;
      for (const auto& [k, v] : arr.front().items()) {
        buf_ << (first ? "" : ",") << csv_field(k);
        first = false;
      }
      buf_ << "\n";
      for (const auto& rec : arr) {
        first = true;
        for (const auto& [k, v] : rec.items()) {
          buf_ << (first ? "" : ",") << csv_field(plain(v));
          first = false;
        }
        buf_ << "\n";
      }
      return;
    }
    for (const auto& rec : arr) {
      if (!text_key.empty()) {
        buf_ << plain(rec.at(text_key)) << "\n";
        continue;
      }
      bool first = true;
      for (const auto& [k, v] : rec.items()) {
        buf_ << (first ? "" : " ") << k << '=' << plain(v);
        first = false;
      }
      buf_ << "\n";
    }
  }

  void flush(std::ostream& out) const {
    if (cfg_.out.empty()) {
      out << buf_.str();
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg_.out);
    f << buf_.str();
  }

 private:
  const RunConfig& cfg_;
  std::ostringstream buf_;
};

int exit_code_of(const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps)
    if (r.status == Status::fail) return exit_failure;
  return exit_pass;
}

void persist(const RunConfig& cfg, const std::vector<VerificationReport>& reps, std::ostream& err) {
  if (cfg.results_dir.empty() || reps.empty()) return;
  std::filesystem::create_directories(cfg.results_dir);
  const auto path = std::filesystem::path(cfg.results_dir) / (reps.front().theorem + "_n" + std::to_string(reps.front().n) + ".json");
  ojson arr = ojson::array();
  for (const auto& r : reps) arr.push_back(report_json(r, false));
  std::ofstream(path, std::ios::binary) << arr.dump(2) << "\n";
  err << "results: wrote " << path.string() << "\n";
}

/// Compares the conjecture dims against a stored golden file, writing it on first use.
bool check_golden(const RunConfig& cfg, const VerificationReport& rep, std::ostream& err) {
  if (cfg.results_dir.empty()) return true;
  std::filesystem::create_directories(cfg.results_dir);
  const auto path = std::filesystem::path(cfg.results_dir) / ("conjectures_n" + std::to_string(rep.n) + ".json");
  const ojson now = report_json(rep, false);
  if (std::filesystem::exists(path)) {
    const ojson golden = parse_json(slurp(path.string()), path.string());
    if (golden.value("details", ojson::object()) != now.at("details")) {
      err << "golden: MISMATCH " << path.string() << "\n";
      return false;
    }
    err << "golden: matches " << path.string() << "\n";
    return true;
  }
  std::ofstream(path, std::ios::binary) << now.dump(2) << "\n";
  err << "golden: wrote " << path.string() << "\n";
  return true;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_int_list(item, ':');
    if (v.size() != 2) throw UsageError("edge '" + item + "' must look like i:j");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

std::string matrix_text(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg; }

// ---------------------------------------------------------------- commands

int cmd_verify_mtt(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 2, "verify mtt needs --n >= 2");
  std::vector<VerificationReport> reps;
  if (cfg.symbolic) {
    check_bound(cfg, cfg.n <= 5, "symbolic mtt is bounded to n <= 5", err);
    reps.push_back(verify_mtt(cfg.n, PairWeights<MultiPoly>::symbolic(cfg.n), cfg.seed));
  } else {
    check_bound(cfg, cfg.n <= 7, "mtt is bounded to n <= 7", err);
    if (!cfg.weights.empty()) {
      reps.push_back(verify_mtt(cfg.n, load_weights(cfg.weights, cfg.n).pairs, cfg.seed));
    } else {
      reps = run_pool(cfg.trials, cfg.jobs, [&](int t) {
        const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(t);
        return verify_mtt(cfg.n, random_pair_weights(cfg.n, s), s);
      });
    }
  }
  out.reports(reps);
  persist(cfg, reps, err);
  return exit_code_of(reps);
}

int cmd_verify_pft(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 3, "verify pft needs --n >= 3");
  check_bound(cfg, cfg.n <= (cfg.symbolic ? 5 : 6), "pft is bounded to n <= 5 (odd) / 6 (even)", err);
  std::vector<VerificationReport> reps;
  if (cfg.symbolic) {
    reps.push_back(verify_pft(cfg.n, TripleWeights<MultiPoly>::symbolic(cfg.n), cfg.seed));
  } else if (!cfg.weights.empty()) {
    reps.push_back(verify_pft(cfg.n, load_weights(cfg.weights, cfg.n).triples, cfg.seed));
  } else {
    reps = run_pool(cfg.trials, cfg.jobs, [&](int t) {
      const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(t);
      return verify_pft(cfg.n, random_triple_weights(cfg.n, s), s);
    });
  }
  out.reports(reps);
  persist(cfg, reps, err);
  return exit_code_of(reps);
}

int cmd_verify_main(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 4, "verify main needs --n >= 4");
  check_bound(cfg, cfg.n <= (cfg.symbolic ? 5 : 6), "main theorem is bounded to n <= 6 (symbolic n <= 5)", err);
  const MainTheoremTables tables(cfg.n);
  std::vector<VerificationReport> reps;
  if (cfg.symbolic) {
    reps.push_back(verify_main(cfg.n, QuadWeights<MultiPoly>::symbolic(cfg.n), tables, cfg.seed));
  } else if (!cfg.weights.empty()) {
    reps.push_back(verify_main(cfg.n, load_weights(cfg.weights, cfg.n).quads, tables, cfg.seed));
  } else {
    reps = run_pool(cfg.trials, cfg.jobs, [&](int t) {
      const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(t);
      return verify_main(cfg.n, random_quad_weights(cfg.n, s), tables, s);
    });
  }
  out.reports(reps);
  persist(cfg, reps, err);
  return exit_code_of(reps);
}

int cmd_verify_rank2(const RunConfig& cfg, Output& out, std::ostream& err) {
  const auto idx = parse_int_list(cfg.indices, ',');
  require(idx.size() == 4, "--indices needs four labels i,j,k,l");
  require(cfg.n >= 4, "verify rank2 needs --n >= 4");
  for (std::size_t a = 0; a < 4; ++a) {
    require(idx[a] >= 1 && idx[a] <= cfg.n, "--indices must lie in 1..n");
    for (std::size_t b = a + 1; b < 4; ++b) require(idx[a] != idx[b], "--indices must be distinct");
  }
  check_bound(cfg, cfg.n <= 12, "rank2 is bounded to n <= 12", err);
  std::vector<VerificationReport> reps{verify_rank2(idx[0], idx[1], idx[2], idx[3], cfg.n)};
  out.reports(reps);
  persist(cfg, reps, err);
  return exit_code_of(reps);
}

LieSolverLimits lie_limits(const RunConfig& cfg) {
  LieSolverLimits limits;
  if (cfg.allow_heavy) limits.max_n = std::max(limits.max_n, cfg.n + 1);
  return limits;
}

int cmd_verify_iota(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 1, "verify iota needs --n >= 1");
  check_bound(cfg, cfg.n <= 5, "iota is bounded to n <= 5", err);
  std::vector<VerificationReport> reps{verify_iota(cfg.n, cfg.trials, cfg.seed, lie_limits(cfg))};
  out.reports(reps);
  persist(cfg, reps, err);
  return exit_code_of(reps);
}

Representation parse_rep(const std::string& s) {
  return s == "reflection" ? Representation::reflection : Representation::permutation;
}

int cmd_lie_dim(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 1, "lie dim needs --n >= 1");
  check_bound(cfg, cfg.n <= 6, "the Lie solver is bounded to n <= 6", err);
  const auto space = lie_space(cfg.n, parse_rep(cfg.rep), lie_limits(cfg));
  ojson arr = ojson::array();
  arr.push_back({{"n", cfg.n}, {"rep", cfg.rep}, {"dim", space.dim()}});
  out.records(arr, "dim");
  return exit_pass;
}

ojson element_records(const std::vector<QElement>& elems) {
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < elems.size(); ++i) arr.push_back({{"index", i}, {"element", elems[i].to_string()}});
  return arr;
}

int cmd_lie_basis(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 1, "lie basis needs --n >= 1");
  check_bound(cfg, cfg.n <= 6, "the Lie solver is bounded to n <= 6", err);
  out.records(element_records(lie_space(cfg.n, parse_rep(cfg.rep), lie_limits(cfg)).basis), "element");
  return exit_pass;
}

int cmd_lie_closure(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 2, "lie closure needs --n >= 2");
  check_bound(cfg, cfg.n <= 6, "the closure is bounded to n <= 6", err);
  out.records(element_records(lie_closure(all_kappas(cfg.n), cfg.n, ClosureLimits{lie_limits(cfg).max_n})), "element");
  return exit_pass;
}

int cmd_conjectures(const RunConfig& cfg, Output& out, std::ostream& err) {
  std::vector<int> ns;
  if (cfg.n > 0) {
    require(cfg.n >= 2, "conjectures needs --n >= 2");
    check_bound(cfg, cfg.n <= 5, "conjecture reports are bounded to n <= 5", err);
    ns.push_back(cfg.n);
  } else {
    ns = {2, 3, 4, 5};
  }
  std::vector<VerificationReport> reps;
  bool golden_ok = true;
  for (const int n : ns) {
    RunConfig one = cfg;
    one.n = n;
    reps.push_back(conjecture_report(n, lie_limits(one)));
    golden_ok = check_golden(cfg, reps.back(), err) && golden_ok;
  }
  if (cfg.format == "text") {
    ojson arr = ojson::array();
    for (const auto& r : reps) {
      ojson rec = {{"status", to_string(r.status)}, {"n", r.n}};
      for (const auto& [k, v] : r.details) rec[k] = v;
      arr.push_back(rec);
    }
    out.records(arr);
  } else {
    out.reports(reps);
  }
  const int code = exit_code_of(reps);
  return code != exit_pass ? code : (golden_ok ? exit_pass : exit_failure);
}

SdetLimits sdet_limits(const RunConfig& cfg) {
  SdetLimits limits;
  if (cfg.allow_heavy) {
    limits.max_n = 24;
    limits.max_symbolic_n = 8;
  }
  return limits;
}

int cmd_sdet_eval(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(!cfg.a.empty() && !cfg.b.empty(), "sdet eval needs --a and --b");
  const QMatrix a = parse_matrix(matrix_text(cfg.a));
  const QMatrix b = parse_matrix(matrix_text(cfg.b));
  require(a.is_square() && a.rows() == b.rows() && a.cols() == b.cols(), "sdet eval needs two square matrices of the same size");
  check_bound(cfg, a.rows() <= 16, "sdet is bounded to n <= 16", err);
  ojson rec = {{"n", a.rows()}};
  if (cfg.method != "coeff") rec["sdet"] = sdet(a, b, sdet_limits(cfg)).to_string();
  if (cfg.method != "shuffle") rec["coeff_det_a_plus_bx_squared"] = sdet_via_coeff(a, b, sdet_limits(cfg)).to_string();
  out.records(ojson::array({rec}));
  return exit_pass;
}

PMatrix generic_matrix(int n, char kind) {
  PMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly::variable(Var(kind, {i, j}));
  return m;
}

int cmd_sdet_symbolic(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 1, "sdet symbolic needs --n >= 1");
  check_bound(cfg, cfg.n <= 5, "symbolic sdet is bounded to n <= 5", err);
  const PMatrix a = generic_matrix(cfg.n, 'a');
  const PMatrix b = generic_matrix(cfg.n, 'b');
  const MultiPoly s = cfg.method == "coeff" ? sdet_via_coeff(a, b, sdet_limits(cfg)) : sdet(a, b, sdet_limits(cfg));
  out.records(ojson::array({{{"n", cfg.n}, {"terms", s.size()}, {"sdet", s.to_string()}}}), "sdet");
  return exit_pass;
}

int cmd_sdet_coeff_graph(const RunConfig& cfg, Output& out, std::ostream&) {
  require(cfg.n >= 1, "sdet coeff-graph needs --n >= 1");
  const auto g = monomial_graph(cfg.n, parse_edges(cfg.a_edges), parse_edges(cfg.b_edges));
  const MonomialCoefficient c = monomial_coefficient(g);
  ojson rec = {{"n", cfg.n}, {"value", c.value}, {"components", c.components}, {"cycle_lengths", c.cycle_lengths}};
  out.records(ojson::array({rec}));
  return exit_pass;
}

int cmd_enumerate_trees(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 1, "enumerate trees needs --n >= 1");
  check_bound(cfg, cfg.n <= 7, "tree enumeration is bounded to n <= 7", err);
  ojson arr = ojson::array();
  std::size_t index = 0;
  for_each_tree(
      cfg.n,
      [&](const LabeledTree& t) {
        ojson edges = ojson::array();
        for (const auto& [u, v] : t.edges) edges.push_back({u, v});
        arr.push_back({{"index", index++}, {"prufer", cfg.n >= 2 ? prufer_encode(t) : std::vector<int>{}}, {"edges", edges}});
      },
      cfg.allow_heavy ? std::numeric_limits<int>::max() : 7);
  out.records(arr);
  return exit_pass;
}

int cmd_enumerate_3trees(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 3 && cfg.n % 2 == 1, "enumerate 3trees needs an odd --n >= 3");
  const int m = (cfg.n - 1) / 2;
  check_bound(cfg, m <= 3, "3-tree enumeration is bounded to n <= 7", err);
  ThreeTreeLimits limits;
  if (cfg.allow_heavy) limits.max_m = std::max(limits.max_m, m);
  ojson arr = ojson::array();
  std::size_t index = 0;
  for (const auto& g : enumerate_three_trees(m, limits)) {
    ojson tris = ojson::array();
    for (const auto& t : g.triangles) tris.push_back(t);
    arr.push_back({{"index", index++}, {"triangles", tris}, {"delta", delta_sign(g)}});
  }
  out.records(arr);
  return exit_pass;
}

int cmd_enumerate_4graphs(const RunConfig& cfg, Output& out, std::ostream& err) {
  require(cfg.n >= 4, "enumerate 4graphs needs --n >= 4");
  require(cfg.r >= 1, "enumerate 4graphs needs --r >= 1");
  FourGraphLimits limits;
  const std::uint64_t count = four_graph_count(cfg.r, cfg.n);
  check_bound(cfg, count <= limits.max_count, std::to_string(count) + " 4-graphs exceed the bound " + std::to_string(limits.max_count), err);
  if (cfg.allow_heavy) limits.max_count = std::numeric_limits<std::uint64_t>::max();
  ojson arr = ojson::array();
  std::size_t index = 0;
  for (const auto& g : enumerate_four_graphs(cfg.r, cfg.n, limits)) {
    ojson edges = ojson::array();
    for (const auto& e : g.edges) edges.push_back({e.vertices[0], e.vertices[1], e.vertices[2], e.vertices[3], e.variant});
    const std::int64_t c = g.edges.size() <= static_cast<std::size_t>(cfg.n) ? shuffle_coefficient(g.edge_system()) : 0;
    arr.push_back({{"index", index++}, {"edges", edges}, {"coefficient", c}});
  }
  out.records(arr);
  return exit_pass;
}

void add_common(CLI::App* sc, RunConfig& cfg) {
  sc->add_option("--n", cfg.n, "Degree n of the symmetric group");
  sc->add_option("--seed", cfg.seed, "First random seed");
  sc->add_option("--trials", cfg.trials, "Number of seeds (or random combinations)")->check(CLI::PositiveNumber);
  sc->add_option("--weights", cfg.weights, "Weight file (JSON)");
  sc->add_flag("--symbolic", cfg.symbolic, "Use symbolic weights");
  sc->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sc->add_option("--out", cfg.out, "Write output to this file");
  sc->add_flag("--allow-heavy", cfg.allow_heavy, "Lift the default resource bounds");
  sc->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sc->add_flag("--timing", cfg.timing, "Include elapsed_ms in reports");
  sc->add_option("--results-dir", cfg.results_dir, "Persist reports (and golden conjecture dims) here");
}

}  // namespace

WeightFile parse_weights(const std::string& text, int n) {
  const ojson root = parse_json(text, "weights");
  if (!root.is_object()) throw ParseError("weights: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "pairs" && key != "triples" && key != "quads") throw ParseError("weights: unknown key '" + key + "'");
  }
  WeightFile w{PairWeights<Rational>(n), TripleWeights<Rational>(n), QuadWeights<Rational>(n)};
  read_entries(root, "pairs", 2, [&](const std::vector<int>& i, const Rational& v) { w.pairs.set(i[0], i[1], v); });
  read_entries(root, "triples", 3, [&](const std::vector<int>& i, const Rational& v) { w.triples.set(i[0], i[1], i[2], v); });
  read_entries(root, "quads", 4, [&](const std::vector<int>& i, const Rational& v) { w.quads.set({i[0], i[1], i[2], i[3]}, v); });
  return w;
}

WeightFile load_weights(const std::string& path, int n) { return parse_weights(slurp(path), n); }

QMatrix parse_matrix(const std::string& text) {
  const ojson root = parse_json(text, "matrix");
  if (!root.is_array() || root.empty()) throw ParseError("matrix: expected a non-empty array of rows");
  const std::size_t cols = root.front().is_array() ? root.front().size() : 0;
  QMatrix m(root.size(), cols);
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!root[i].is_array() || root[i].size() != cols) throw ParseError("matrix: row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = json_rational(root[i][j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

ojson report_json(const VerificationReport& rep, bool timing) {
  ojson j;
  j["theorem"] = rep.theorem;
  j["n"] = rep.n;
  j["seed"] = rep.seed;
  j["status"] = to_string(rep.status);
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["elapsed_ms"] = timing ? ojson(rep.elapsed_ms) : ojson(nullptr);
  ojson details = ojson::object();
  for (const auto& [k, v] : rep.details) details[k] = v;
  j["details"] = details;
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lietool: Lie elements in the symmetric group algebra"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  using Handler = int (*)(const RunConfig&, Output&, std::ostream&);
  Handler handler = nullptr;
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sc = parent->add_subcommand(name, help);
    add_common(sc, cfg);
    sc->callback([&handler, h] { handler = h; });
    return sc;
  };

  CLI::App* verify = app.add_subcommand("verify", "Check a theorem against its combinatorial formula");
  verify->require_subcommand(1);
  leaf(verify, "mtt", "Matrix-tree theorem", cmd_verify_mtt);
  leaf(verify, "pft", "Pfaffian-tree theorem", cmd_verify_pft);
  leaf(verify, "main", "Characteristic polynomial of eta sums", cmd_verify_main);
  leaf(verify, "rank2", "Rank-two action of eta", cmd_verify_rank2)->add_option("--indices", cfg.indices, "i,j,k,l");
  leaf(verify, "iota", "Induction of Lie elements", cmd_verify_iota);

  CLI::App* lie = app.add_subcommand("lie", "Lie element spaces");
  lie->require_subcommand(1);
  for (auto* sc : {leaf(lie, "dim", "Dimension of the Lie space", cmd_lie_dim), leaf(lie, "basis", "Basis of the Lie space", cmd_lie_basis)}) {
    sc->add_option("--rep", cfg.rep, "Representation")->check(CLI::IsMember({"permutation", "reflection"}));
  }
  leaf(lie, "closure", "Bracket closure of the Kirchhoff differences", cmd_lie_closure);

  leaf(&app, "conjectures", "Dimensions behind the generation and quotient conjectures", cmd_conjectures);

  CLI::App* sd = app.add_subcommand("sdet", "Shuffle determinants");
  sd->require_subcommand(1);
  CLI::App* eval = leaf(sd, "eval", "sdet of two rational matrices", cmd_sdet_eval);
  eval->add_option("--a", cfg.a, "Matrix A as JSON, or @file");
  eval->add_option("--b", cfg.b, "Matrix B as JSON, or @file");
  eval->add_option("--method", cfg.method, "shuffle, coeff or both")->check(CLI::IsMember({"shuffle", "coeff", "both"}));
  leaf(sd, "symbolic", "sdet of two generic matrices", cmd_sdet_symbolic)
      ->add_option("--method", cfg.method, "shuffle or coeff")
      ->check(CLI::IsMember({"shuffle", "coeff"}));
  CLI::App* cg = leaf(sd, "coeff-graph", "Coefficient of an sdet monomial from its graph", cmd_sdet_coeff_graph);
  cg->add_option("--a-edges", cfg.a_edges, "a-letters as i:j,k:l,...");
  cg->add_option("--b-edges", cfg.b_edges, "b-letters as i:j,k:l,...");

  CLI::App* en = app.add_subcommand("enumerate", "Enumerate combinatorial objects");
  en->require_subcommand(1);
  leaf(en, "trees", "Labelled trees", cmd_enumerate_trees);
  leaf(en, "3trees", "3-trees with their signs", cmd_enumerate_3trees);
  leaf(en, "4graphs", "4-graphs with their coefficients", cmd_enumerate_4graphs)->add_option("--r", cfg.r, "Number of 4-edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    Output output(cfg);
    const int code = handler(cfg, output, err);
    output.flush(out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ConflictError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_usage;
  } catch (const StructureError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace lietool
