#include "hco/smallgraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hco/bits.hpp"

namespace hco::ver {

// ---- SmallGraph basics ----

void SmallGraph::add_edge(int u, int v) {
  require(u != v, "loops not allowed");
  require(u >= 0 && v >= 0 && u < n && v < n, "edge endpoint out of range");
  if (u > v) std::swap(u, v);
  for (auto [x, y] : edges) require(x != u || y != v, "duplicate edge");
  edges.emplace_back(u, v);
}

std::vector<int> SmallGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool SmallGraph::connected() const {
  if (n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : edges) {
    nbr[u] |= std::uint32_t{1} << v;
    nbr[v] |= std::uint32_t{1} << u;
  }
  while (frontier) {
    int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint32_t fresh = nbr[u] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == (n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

SmallGraph SmallGraph::cube(int dim) {
  require(dim >= 1 && dim <= 5, "explicit cube graphs stop at 32 vertices");
  SmallGraph g;
  g.n = 1 << dim;
  for (int v = 0; v < g.n; ++v)
    for (int i = 0; i < dim; ++i)
      if (!(v >> i & 1)) g.edges.emplace_back(v, v | 1 << i);
  return g;
}

SmallGraph SmallGraph::parse(std::istream& in) {
  std::string magic;
  int n = 0, m = 0;
  if (!(in >> magic >> n >> m) || magic != "GRAPH")
    throw std::invalid_argument("expected `GRAPH <n> <m>` header");
  require(n >= 1 && n <= 32, "vertex count out of range");
  require(m >= 0, "negative edge count");
  SmallGraph g;
  g.n = n;
  for (int e = 0; e < m; ++e) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list ends early at edge " + std::to_string(e));
    g.add_edge(u, v);
  }
  return g;
}

void SmallGraph::print(std::ostream& out) const {
  out << "GRAPH " << n << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

// ---- in-degree constrained orientation search ----

namespace {

struct Searcher {
  int n;
  std::uint64_t allowed;
  std::vector<int> want;       // empty when counts are unconstrained
  std::vector<int> order;      // edge indices sorted by (u, v)
  const std::vector<std::pair<int, int>>* edges;
  std::vector<int> cnt, rem, fin;
  std::vector<int> reach;      // per degree: vertices that can still land on it
  std::vector<int> adeg;       // the allowed degrees, ascending
  std::vector<std::uint8_t> dir;
  bool counted;

  bool vertex_ok(int v) const {
    std::uint64_t span = (std::uint64_t{2} << (cnt[v] + rem[v])) -
                         (std::uint64_t{1} << cnt[v]);
    return (allowed & span) != 0;
  }
  bool can_reach(int v, int d) const {
    return cnt[v] <= d && d <= cnt[v] + rem[v];
  }

  // Applies one endpoint update (in-degree gain g, one fewer open edge).
  void bump(int v, int g) {
    if (counted)
      for (int d : adeg) reach[d] -= can_reach(v, d);
    cnt[v] += g;
    rem[v] -= 1;
    if (counted) {
      for (int d : adeg) reach[d] += can_reach(v, d);
      if (rem[v] == 0) ++fin[cnt[v]];
    }
  }
  void unbump(int v, int g) {
    if (counted) {
      if (rem[v] == 0) --fin[cnt[v]];
      for (int d : adeg) reach[d] -= can_reach(v, d);
    }
    cnt[v] -= g;
    rem[v] += 1;
    if (counted)
      for (int d : adeg) reach[d] += can_reach(v, d);
  }

  bool prune() const {
    if (!counted) return false;
    for (int d : adeg)
      if (fin[d] > want[d] || reach[d] < want[d]) return true;
    return false;
  }

  bool solve(std::size_t at) {
    if (at == order.size()) {
      for (int v = 0; v < n; ++v)
        if (!(allowed >> cnt[v] & 1)) return false;
      if (counted)
        for (int d : adeg)
          if (fin[d] != want[d]) return false;
      return true;
    }
    auto [u, v] = (*edges)[order[at]];
    for (int headv = 0; headv < 2; ++headv) {
      int head = headv ? v : u, tail = headv ? u : v;
      bump(head, 1);
      bump(tail, 0);
      if (vertex_ok(head) && vertex_ok(tail) && !prune() && solve(at + 1)) {
        dir[order[at]] = std::uint8_t(headv);
        return true;
      }
      unbump(tail, 0);
      unbump(head, 1);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint8_t>> search_orientation(
    const SmallGraph& g, std::uint64_t allowed,
    const std::optional<DegreeCounts>& counts) {
  require(g.edges.size() <= 40, "instance too large for exhaustive search");
  require(allowed != 0, "no allowed in-degrees");

  Searcher s;
  s.n = g.n;
  s.allowed = allowed;
  s.edges = &g.edges;
  s.counted = counts.has_value();
  auto deg = g.degrees();
  int maxdeg = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  if (s.counted) {
    s.want = counts->want;
    for (std::size_t d = maxdeg + 1; d < s.want.size(); ++d)
      require(s.want[d] == 0, "counts demand a degree no vertex can reach");
    s.want.resize(maxdeg + 1, 0);
    int total = std::accumulate(s.want.begin(), s.want.end(), 0);
    require(total == g.n, "per-degree counts must cover every vertex");
  }
  for (int d = 0; d <= maxdeg; ++d)
    if (allowed >> d & 1) s.adeg.push_back(d);
  if (s.counted)
    for (int d = 0; d <= maxdeg; ++d)
      require((allowed >> d & 1) || s.want[d] == 0,
              "counts demand a degree outside the allowed set");

  s.order.resize(g.edges.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return g.edges[x] < g.edges[y];
  });
  s.cnt.assign(g.n, 0);
  s.rem = deg;
  s.fin.assign(maxdeg + 1, 0);
  s.reach.assign(maxdeg + 1, 0);
  for (int d : s.adeg)
    for (int v = 0; v < g.n; ++v) s.reach[d] += s.can_reach(v, d);
  s.dir.assign(g.edges.size(), 0);

  // A vertex of degree 0 is stuck at in-degree 0.
  for (int v = 0; v < g.n; ++v)
    if (!s.vertex_ok(v)) return std::nullopt;

  if (!s.solve(0)) return std::nullopt;
  return s.dir;
}

// ---- the two negative results ----

namespace {

// Enumerate both placements of seven pairwise-nonadjacent sinks and seven
// sources on Q4 directly: all other edges are forced, and the two leftover
// vertices must then hit in-degree 2 exactly.
std::uint64_t q4_sink_route_solutions() {
  SmallGraph q4 = SmallGraph::cube(4);
  std::vector<std::uint32_t> nbr(16, 0);
  for (auto [u, v] : q4.edges) {
    nbr[u] |= std::uint32_t{1} << v;
    nbr[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::uint32_t> indep;  // independent 7-subsets of V(Q4)
  for (std::uint32_t set = 0; set < (1u << 16); ++set) {
    if (std::popcount(set) != 7) continue;
    bool ok = true;
    for (std::uint32_t rest = set; rest && ok; rest &= rest - 1)
      ok = (nbr[std::countr_zero(rest)] & set) == 0;
    if (ok) indep.push_back(set);
  }
  // Everything outside the two leftover vertices is forced: edges point into
  // sinks and out of sources, so a leftover vertex's in-degree is its number
  // of source neighbors, plus possibly the one free edge between the two.
  std::uint64_t solutions = 0;
  for (std::uint32_t sinks : indep)
    for (std::uint32_t sources : indep) {
      if (sinks & sources) continue;
      std::uint32_t left = ~(sinks | sources) & 0xffffu;
      int u = std::countr_zero(left);
      int w = std::countr_zero(left & (left - 1));
      int zu = std::popcount(nbr[u] & sources);
      int zw = std::popcount(nbr[w] & sources);
      if (nbr[u] >> w & 1) {
        solutions += zu == 2 && zw == 1;  // free edge u -> w
        solutions += zu == 1 && zw == 2;  // free edge w -> u
      } else {
        solutions += zu == 2 && zw == 2;
      }
    }
  return solutions;
}

}  // namespace

bool q4_three_degree_impossible() {
  SmallGraph q4 = SmallGraph::cube(4);
  DegreeCounts counts;
  counts.want = {7, 0, 2, 0, 7};
  auto witness = search_orientation(
      q4, std::uint64_t{1} << 0 | std::uint64_t{1} << 2 | std::uint64_t{1} << 4,
      counts);
  bool search_absent = !witness.has_value();
  bool route_absent = q4_sink_route_solutions() == 0;
  check_internal(search_absent == route_absent,
                 "refutation routes disagree on Q4 {0:7,2:2,4:7}");
  return search_absent;
}

// ---- labeled cubic graph scan ----

namespace {

struct CubicGen {
  int n;
  std::vector<int> deg;
  std::vector<std::uint32_t> adj;
  std::vector<std::pair<int, int>> edges;
  const std::function<void(const SmallGraph&, bool)>* cb;
  std::uint64_t connected = 0;

  void emit() {
    SmallGraph g;
    g.n = n;
    g.edges = edges;
    if (!g.connected()) return;
    ++connected;
    DegreeCounts counts;
    counts.want = {n / 2, 0, 0, n / 2};
    auto found = search_orientation(g, std::uint64_t{1} << 0 | std::uint64_t{1} << 3,
                                    counts);
    (*cb)(g, found.has_value());
  }

  void rec(int from) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] < 3) {
        u = v;
        break;
      }
    if (u < 0) {
      emit();
      return;
    }
    // Partners of the lowest deficient vertex are chosen in increasing
    // order, which generates every labeled cubic graph exactly once.
    for (int v = std::max(from, u + 1); v < n; ++v) {
      if (deg[v] >= 3 || (adj[u] >> v & 1)) continue;
      deg[u]++;
      deg[v]++;
      adj[u] |= std::uint32_t{1} << v;
      adj[v] |= std::uint32_t{1} << u;
      edges.emplace_back(u, v);
      rec(deg[u] < 3 ? v + 1 : 0);
      edges.pop_back();
      adj[u] &= ~(std::uint32_t{1} << v);
      adj[v] &= ~(std::uint32_t{1} << u);
      deg[u]--;
      deg[v]--;
    }
  }
};

}  // namespace

std::uint64_t scan_cubic(int n,
                         const std::function<void(const SmallGraph&, bool)>& cb) {
  require(n >= 4 && n <= 12 && n % 2 == 0, "cubic scan size out of range");
  CubicGen gen;
  gen.n = n;
  gen.deg.assign(n, 0);
  gen.adj.assign(n, 0);
  gen.cb = &cb;
  gen.rec(0);
  return gen.connected;
}

CubicScanSummary cubic_counterexample_scan() {
  CubicScanSummary s;
  s.connected = scan_cubic(8, [&](const SmallGraph&, bool orientable) {
    if (orientable)
      ++s.orientable;
    else
      ++s.non_orientable;
  });
  return s;
}

}  // namespace hco::ver
