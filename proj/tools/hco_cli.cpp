// Command-line front end.  stdout carries results (deterministic for a given
// argv), stderr carries diagnostics.  Exit codes: 0 success/feasible/found,
// 1 infeasible/absent/verification-failure, 2 usage or I/O errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hco/feasibility.hpp"
#include "hco/hamming.hpp"
#include "hco/hco_io.hpp"
#include "hco/kary.hpp"
#include "hco/oracle.hpp"
#include "hco/primitive.hpp"
#include "hco/reductions.hpp"
#include "hco/smallgraph.hpp"
#include "hco/verify.hpp"

namespace {

using namespace hco;

int cmd_feasible(int n, int a, int b, bool all) {
  if (all) {
    for (const auto& f : feas::enumerate_feasible(n))
      std::cout << f.a << ' ' << f.b << ' ' << f.s << ' ' << f.t << '\n';
    return 0;
  }
  auto c = feas::solve_counts(a, b, n);
  if (!c) {
    std::cout << "infeasible\n";
    return 1;
  }
  std::cout << "s=" << c->s << " t=" << c->t;
  if (c->degenerate) std::cout << " (degenerate)";
  std::cout << '\n';
  return 0;
}

int cmd_plan(int n, int a, int b) {
  check_dim(n);
  if (!feas::solve_counts(a, b, n)) {
    std::cout << "infeasible\n";
    return 1;
  }
  auto p = red::plan(a, b, n);
  for (const auto& s : p.steps) std::cout << s.to_string() << '\n';
  return 0;
}

int cmd_construct(int n, int a, int b, const std::string& out) {
  check_dim(n);
  if (!feas::solve_counts(a, b, n)) {
    std::cout << "infeasible\n";
    return 1;
  }
  Orientation o = red::construct(a, b, n);
  auto r = ver::verify(o, a, b);
  check_internal(r.pass, "constructed orientation fails verification");
  if (out.empty()) {
    io::write_hco(std::cout, o, a, b);
  } else {
    io::write_hco_file(out, o, a, b);
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  io::HcoFile f = io::read_hco_file(path);
  auto r = ver::verify(f.o, f.a, f.b);
  if (r.pass) {
    std::cout << "PASS " << r.histogram.to_string() << '\n';
    return 0;
  }
  std::cout << "FAIL " << r.reason << '\n';
  return 1;
}

int cmd_strategy(const std::string& path, int player, const std::string& observed) {
  io::HcoFile f = io::read_hco_file(path);
  const int n = f.o.dim();
  if (player >= 0) {
    require(player < n, "player index out of range");
    require(int(observed.size()) == n - 1, "observed string must have n-1 bits");
    Vertex w = 0;
    for (int c = 0; c < n - 1; ++c) {
      require(observed[c] == '0' || observed[c] == '1', "observed bits must be 0/1");
      w |= Vertex(observed[c] - '0') << c;
    }
    std::cout << guess(f.o, player, w) << '\n';
    return 0;
  }
  require(n <= 5, "full guess tables are printed only for n <= 5");
  for (int p = 0; p < n; ++p) {
    std::cout << "player " << p << ": ";
    for (Vertex w = 0; w < vertex_count(n - 1); ++w) std::cout << guess(f.o, p, w);
    std::cout << '\n';
  }
  return 0;
}

int cmd_simulate(const std::string& path, std::uint64_t trials, std::uint64_t seed) {
  io::HcoFile f = io::read_hco_file(path);
  const int n = f.o.dim();
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> dist(n + 1, 0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Vertex v = Vertex(rng() & (vertex_count(n) - 1));
    ++dist[std::size_t(simulate(f.o, v))];
  }
  DegreeHistogram h{dist};
  std::cout << h.to_string() << '\n';
  return 0;
}

int cmd_oracle(int n) {
  auto prof = ver::oracle_profiles(n);
  for (const auto& [sup, profiles] : prof) {
    std::cout << '{';
    for (std::size_t i = 0; i < sup.size(); ++i)
      std::cout << (i ? "," : "") << sup[i];
    std::cout << "}:";
    for (const auto& counts : profiles) {
      std::cout << " (";
      for (std::size_t i = 0; i < counts.size(); ++i)
        std::cout << (i ? "," : "") << counts[i];
      std::cout << ')';
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_classify(int n, int a, std::uint32_t vertex) {
  auto params = feas::classify_primitive(a, n, n);
  require(params.has_value(), "[a,n]_n is not a primitive spec");
  require(params->k >= 1, "the 1-cube base case has no vertex classes");
  ham::HammingCode code(params->k);
  require(vertex < vertex_count(n), "vertex out of range");
  auto cls = prim::classify(vertex, *params, code);
  Vertex v = vertex & (vertex_count(params->n0) - 1);
  Vertex p = vertex >> params->n0;
  std::cout << prim::class_name(cls) << " (p=" << p << ", v=" << v << ")\n";
  return 0;
}

int cmd_cx_q4() {
  bool impossible = ver::q4_three_degree_impossible();
  check_internal(impossible, "expected the {0:7, 2:2, 4:7} refutation to hold");
  std::cout << "absent: no orientation of the 4-cube has in-degree counts "
               "{0:7, 2:2, 4:7}\n";
  return 1;  // absence
}

int cmd_cx_cubic8() {
  auto sum = ver::cubic_counterexample_scan();
  std::cout << "connected cubic graphs on 8 vertices: " << sum.connected << '\n';
  std::cout << "{0,3}-orientable: " << sum.orientable << '\n';
  std::cout << "not orientable: " << sum.non_orientable << '\n';
  return sum.non_orientable > 0 && sum.orientable > 0 ? 0 : 1;
}

int cmd_cx_graph(const std::string& path, const std::string& allowed_csv,
                 const std::string& counts_csv) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto g = ver::SmallGraph::parse(in);
  std::uint64_t allowed = 0;
  {
    std::istringstream s(allowed_csv);
    std::string tok;
    while (std::getline(s, tok, ',')) {
      int d = std::stoi(tok);
      require(d >= 0 && d < 64, "allowed degree out of range");
      allowed |= std::uint64_t{1} << d;
    }
  }
  std::optional<ver::DegreeCounts> counts;
  if (!counts_csv.empty()) {
    ver::DegreeCounts c;
    std::istringstream s(counts_csv);
    std::string tok;
    while (std::getline(s, tok, ',')) c.want.push_back(std::stoi(tok));
    counts = std::move(c);
  }
  auto dir = ver::search_orientation(g, allowed, counts);
  if (!dir) {
    std::cout << "absent\n";
    return 1;
  }
  std::cout << "found\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if ((*dir)[e]) std::cout << u << " -> " << v << '\n';
    else std::cout << v << " -> " << u << '\n';
  }
  return 0;
}

int cmd_kary_search(int k, int n, int a, int b, const std::string& out,
                    std::uint64_t budget) {
  auto res = kary::kary_search(a, b, n, k, budget);
  switch (res.outcome) {
    case kary::SearchOutcome::Found: {
      std::cout << "found " << kary::mark_degrees(*res.marking).to_string() << '\n';
      if (!out.empty()) kary::write_khm_file(out, *res.marking);
      return 0;
    }
    case kary::SearchOutcome::Absent:
      std::cout << "absent\n";
      return 1;
    case kary::SearchOutcome::Budget:
    default:
      std::cerr << "search budget exhausted after " << res.nodes << " nodes\n";
      return 2;
  }
}

int cmd_kary_cnf(int k, int n, int a, int b, const std::string& out) {
  std::string cnf = kary::export_cnf(a, b, n, k);
  if (out.empty()) {
    std::cout << cnf;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << cnf;
    if (!f) throw std::runtime_error("write failed: " + out);
  }
  return 0;
}

int cmd_kary_verify(const std::string& path, int a, int b) {
  kary::Marking m = kary::read_khm_file(path);
  auto h = kary::mark_degrees(m);
  auto sup = h.support();
  if (a < 0 && b < 0) {
    if (sup.empty() || sup.size() > 2) {
      std::cout << "FAIL mark counts take " << sup.size() << " values\n";
      return 1;
    }
    a = sup.front();
    b = sup.back();
  } else {
    require(a >= 0 && b >= 0, "give both --a and --b or neither");
  }
  if (a > b) std::swap(a, b);
  auto counts = kary::kary_feasible(a, b, m.n, m.k);
  if (!counts) {
    std::cout << "FAIL no marking can realize {" << a << "," << b << "}\n";
    return 1;
  }
  for (int d = 0; d <= m.n; ++d) {
    std::uint64_t want = d == a ? counts->s : d == b ? counts->t : 0;
    if (h.at(d) != want) {
      std::cout << "FAIL count mismatch at mark count " << d << ": have "
                << h.at(d) << ", want " << want << '\n';
      return 1;
    }
  }
  std::cout << "PASS " << h.to_string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-valued in-degree orientations of the n-cube"};
  app.require_subcommand(1);

  int n = 0, a = 0, b = 0, k = 0, player = -1;
  std::uint32_t vertex = 0;
  bool all = false;
  std::string file, out, observed, allowed_csv, counts_csv;
  std::uint64_t trials = 10000, seed = 12345;
  std::uint64_t budget = kary::kDefaultSearchBudget;

  auto* feasible = app.add_subcommand("feasible", "decide a two-valued in-degree spec");
  feasible->add_option("n", n, "cube dimension")->required();
  feasible->add_option("a", a, "smaller in-degree");
  feasible->add_option("b", b, "larger in-degree");
  feasible->add_flag("--all", all, "list every strictly feasible pair as `a b s t`");

  auto* plan = app.add_subcommand("plan", "print the reduction chain for a spec");
  plan->add_option("n", n)->required();
  plan->add_option("a", a)->required();
  plan->add_option("b", b)->required();

  auto* construct = app.add_subcommand("construct", "build an orientation, write HCO v1");
  construct->add_option("n", n)->required();
  construct->add_option("a", a)->required();
  construct->add_option("b", b)->required();
  construct->add_option("-o,--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "check an HCO file against its header spec");
  verify->add_option("file", file)->required();

  auto* strategy = app.add_subcommand("strategy", "hat-game guess tables of an orientation");
  strategy->add_option("file", file)->required();
  strategy->add_option("--player", player, "0-indexed player for a single query");
  strategy->add_option("--observed", observed, "n-1 observed bits, lowest player first");

  auto* simulate = app.add_subcommand("simulate", "random hat placements, count distribution");
  simulate->add_option("file", file)->required();
  simulate->add_option("--trials", trials, "number of placements (default 10000)");
  simulate->add_option("--seed", seed, "RNG seed (default 12345)");

  auto* oracle = app.add_subcommand("oracle", "exhaustive in-degree supports for n <= 3");
  oracle->add_option("n", n)->required();

  auto* classify = app.add_subcommand("classify", "vertex class inside a primitive construction");
  classify->add_option("n", n)->required();
  classify->add_option("a", a)->required();
  classify->add_option("--vertex", vertex, "vertex index")->required();

  auto* cx = app.add_subcommand("counterexample", "orientation searches on small graphs");
  cx->require_subcommand(1);
  auto* cx_q4 = cx->add_subcommand("q4-three-degrees",
                                   "refute {0:7, 2:2, 4:7} on the 4-cube");
  auto* cx_cubic = cx->add_subcommand("cubic8",
                                      "scan connected cubic graphs on 8 vertices for {0,3}");
  auto* cx_graph = cx->add_subcommand("graph", "search a GRAPH file for an orientation");
  cx_graph->add_option("file", file)->required();
  cx_graph->add_option("--allowed", allowed_csv, "comma-separated in-degrees")->required();
  cx_graph->add_option("--counts", counts_csv, "comma-separated counts per degree 0..");

  auto* kcmd = app.add_subcommand("kary", "markings of the k-ary n-cube");
  kcmd->require_subcommand(1);
  auto* ks = kcmd->add_subcommand("search", "backtracking search for a marking");
  ks->add_option("k", k)->required();
  ks->add_option("n", n)->required();
  ks->add_option("a", a)->required();
  ks->add_option("b", b)->required();
  ks->add_option("-o,--out", out, "write the witness as KHM v1");
  ks->add_option("--budget", budget, "node budget before giving up");
  auto* kc = kcmd->add_subcommand("cnf", "DIMACS CNF export of the marking constraints");
  kc->add_option("k", k)->required();
  kc->add_option("n", n)->required();
  kc->add_option("a", a)->required();
  kc->add_option("b", b)->required();
  kc->add_option("-o,--out", out, "output path (default stdout)");
  auto* kv = kcmd->add_subcommand("verify", "check a KHM file's mark counts");
  kv->add_option("file", file)->required();
  int ka = -1, kb = -1;
  kv->add_option("--a", ka, "expected smaller mark count");
  kv->add_option("--b", kb, "expected larger mark count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*feasible) {
      if (!all && feasible->count("a") + feasible->count("b") != 2)
        throw std::invalid_argument("give `a b` or --all");
      return cmd_feasible(n, a, b, all);
    }
    if (*plan) return cmd_plan(n, a, b);
    if (*construct) return cmd_construct(n, a, b, out);
    if (*verify) return cmd_verify(file);
    if (*strategy) {
      if (strategy->count("--player") != strategy->count("--observed"))
        throw std::invalid_argument("--player and --observed go together");
      return cmd_strategy(file, strategy->count("--player") ? player : -1, observed);
    }
    if (*simulate) return cmd_simulate(file, trials, seed);
    if (*oracle) return cmd_oracle(n);
    if (*classify) return cmd_classify(n, a, vertex);
    if (*cx_q4) return cmd_cx_q4();
    if (*cx_cubic) return cmd_cx_cubic8();
    if (*cx_graph) return cmd_cx_graph(file, allowed_csv, counts_csv);
    if (*ks) return cmd_kary_search(k, n, a, b, out, budget);
    if (*kc) return cmd_kary_cnf(k, n, a, b, out);
    if (*kv) return cmd_kary_verify(file, ka, kb);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
