#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hco::eul {

// Undirected multigraph with all degrees even.  Edge ids are dense 0..m-1;
// each edge appears once in both endpoints' adjacency lists.
struct EvenGraph {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;
  std::uint32_t edge_total = 0;

  explicit EvenGraph(std::size_t n = 0) : adj(n) {}

  void add_edge(std::uint32_t u, std::uint32_t v) {
    adj[u].emplace_back(v, edge_total);
    adj[v].emplace_back(u, edge_total);
    ++edge_total;
  }
};

// Orients every edge along closed walks (greedy lowest-edge-id-first
// Hierholzer, one drain pass per vertex in ascending order) so that every
// vertex ends with in-degree = out-degree = degree/2; this balance is
// asserted post-hoc.  Isolated vertices are ignored.  Throws on an
// odd-degree vertex.  Returns edge id -> (tail, head).
std::vector<std::pair<std::uint32_t, std::uint32_t>> euler_orient(
    const EvenGraph& g);

}  // namespace hco::eul
