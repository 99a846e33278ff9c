#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hco::ver {

// Explicit simple graph on at most 32 vertices, for the search oracles.
struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no duplicates

  void add_edge(int u, int v);
  std::vector<int> degrees() const;
  bool connected() const;  // all n vertices in one component

  static SmallGraph cube(int dim);

  // GRAPH format: `GRAPH <n> <m>` then m lines `u v`.
  static SmallGraph parse(std::istream& in);
  void print(std::ostream& out) const;
};

// Exact per-degree vertex counts; want[d] vertices must end at in-degree d,
// for every d up to the max degree.
struct DegreeCounts {
  std::vector<int> want;  // sums to the vertex count
};

// Backtracking search for an edge orientation with every in-degree in
// `allowed` (bitmask over 0..31) and, if given, exactly counts.want[d]
// vertices at degree d.  Returns per-edge direction bits (1 = head is the
// larger endpoint) or nullopt after exhausting the pruned tree.
std::optional<std::vector<std::uint8_t>> search_orientation(
    const SmallGraph& g, std::uint64_t allowed,
    const std::optional<DegreeCounts>& counts = std::nullopt);

// Exhaustive proof that Q4 admits no orientation with in-degree counts
// {0:7, 2:2, 4:7}; runs both the backtracking search and an independent
// sink/source-set enumeration and insists they agree.
bool q4_three_degree_impossible();

// Enumerates all connected labeled cubic graphs on `n` vertices (n even) by
// edge-pairing backtracking, invoking cb for each with its {0,3}-orientability
// verdict (counts {0: n/2, 3: n/2}).  Returns the number generated.
std::uint64_t scan_cubic(int n,
                         const std::function<void(const SmallGraph&, bool)>& cb);

struct CubicScanSummary {
  std::uint64_t connected = 0;
  std::uint64_t orientable = 0;
  std::uint64_t non_orientable = 0;
};
CubicScanSummary cubic_counterexample_scan();  // n = 8

}  // namespace hco::ver
