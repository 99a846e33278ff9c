#include "hco/euler.hpp"

#include <algorithm>
#include <stdexcept>

#include "hco/bits.hpp"

namespace hco::eul {

// Greedy closed walks instead of full Hierholzer splicing: drain each vertex
// in ascending order, always leaving along the lowest unused edge id.  With
// all degrees even a walk can only get stuck back at its start, so each walk
// is closed and contributes in = out at every vertex it visits; the union
// covers every edge.
std::vector<std::pair<std::uint32_t, std::uint32_t>> euler_orient(
    const EvenGraph& g) {
  const std::uint32_t nv = std::uint32_t(g.adj.size());
  for (std::uint32_t v = 0; v < nv; ++v)
    if (g.adj[v].size() % 2 != 0)
      throw std::invalid_argument("odd-degree vertex in Euler input");

  // Sort each adjacency by edge id once so "lowest unused" is a cursor sweep.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj = g.adj;
  for (auto& list : adj)
    std::sort(list.begin(), list.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });

  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> oriented(
      g.edge_total, {kUnset, kUnset});
  std::vector<std::uint8_t> used(g.edge_total, 0);
  std::vector<std::uint32_t> cursor(nv, 0);

  auto next_unused = [&](std::uint32_t v) -> int {
    auto& list = adj[v];
    std::uint32_t& c = cursor[v];
    while (c < list.size() && used[list[c].second]) ++c;
    return c < list.size() ? int(c) : -1;
  };

  for (std::uint32_t start = 0; start < nv; ++start) {
    for (;;) {
      int slot = next_unused(start);
      if (slot < 0) break;
      std::uint32_t at = start;
      do {
        int s = next_unused(at);
        check_internal(s >= 0, "walk stuck away from start despite even degrees");
        auto [to, id] = adj[at][s];
        used[id] = 1;
        oriented[id] = {at, to};
        at = to;
      } while (at != start);
    }
  }

  // Post-hoc balance assertion.
  std::vector<std::uint32_t> in(nv, 0), out(nv, 0);
  for (auto [tail, head] : oriented) {
    if (tail == kUnset) throw std::logic_error("edge left unoriented");
    ++out[tail];
    ++in[head];
  }
  for (std::uint32_t v = 0; v < nv; ++v)
    if (in[v] != out[v] || std::size_t{in[v]} * 2 != g.adj[v].size())
      throw std::logic_error("Euler orientation unbalanced");

  return oriented;
}

}  // namespace hco::eul
