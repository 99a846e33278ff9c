#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace hco {

// Vertices of the n-cube are n-bit words; coordinate i is bit i.
// External texts that number coordinates 1..n map coordinate i to bit i-1.
using Vertex = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Largest supported cube dimension.  Bounded by the dense edge bit array:
// n*2^(n-1) bits is ~470 MB at n=28.
inline constexpr int kMaxDim = 28;

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_internal(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

inline void check_dim(int n) {
  require(n >= 1 && n <= kMaxDim, "dimension out of range");
}

inline std::uint64_t vertex_count(int n) { return std::uint64_t{1} << n; }

// Number of edges of the n-cube.
inline EdgeIndex edge_count(int n) {
  return std::uint64_t(n) << (n - 1);
}

inline int popcount(Vertex v) { return std::popcount(v); }

// P(v): sum of bits mod 2.
inline int parity(Vertex v) { return std::popcount(v) & 1; }

// v with coordinate i toggled; checked variant of v ^ (1 << i).
inline Vertex flip(Vertex v, int i, int n) {
  require(i >= 0 && i < n, "coordinate out of range");
  return v ^ (Vertex{1} << i);
}

// Sum of popcount(u) over u in [0, v).
inline std::uint64_t popcount_below(Vertex v) {
  std::uint64_t total = 0;
  int higher_ones = 0;
  for (int k = 31; k >= 0; --k) {
    if (v >> k & 1) {
      if (k > 0) total += std::uint64_t(k) << (k - 1);
      total += std::uint64_t(higher_ones) << k;
      ++higher_ones;
    }
  }
  return total;
}

// Canonical edge order: v ascending, i ascending, one slot per (v, i) with
// bit i of v zero.  edge_base(v) is the index of v's first slot.
inline EdgeIndex edge_base(int n, Vertex v) {
  return std::uint64_t(n) * v - popcount_below(v);
}

// Index of the canonical edge (v, i); requires bit i of v to be zero.
inline EdgeIndex edge_index(int n, Vertex v, int i) {
  Vertex below = v & ((Vertex{1} << i) - 1);
  return edge_base(n, v) + i - std::popcount(below);
}

// Inverse of edge_index: the (v, i) pair of canonical edge j.
inline void locate_edge(int n, EdgeIndex j, Vertex& v, int& i) {
  Vertex lo = 0, hi = Vertex((vertex_count(n) - 1));
  while (lo < hi) {  // largest v with edge_base(v) <= j
    Vertex mid = lo + (hi - lo + 1) / 2;
    if (edge_base(n, mid) <= j) lo = mid; else hi = mid - 1;
  }
  v = lo;
  std::uint64_t rank = j - edge_base(n, lo);
  for (int b = 0;; ++b) {
    if (!(lo >> b & 1)) {
      if (rank == 0) { i = b; return; }
      --rank;
    }
  }
}

// Walks canonical edges in order from an arbitrary starting index.
// After the final edge, advance() parks at (2^n - 1, n).
struct EdgeCursor {
  int n;
  Vertex v;
  int i;

  EdgeCursor(int dim, EdgeIndex start) : n(dim) {
    locate_edge(dim, start, v, i);
  }

  void advance() {
    for (++i; i < n; ++i)
      if (!(v >> i & 1)) return;
    const Vertex last = Vertex(vertex_count(n) - 1);
    while (v < last) {
      ++v;
      for (i = 0; i < n; ++i)
        if (!(v >> i & 1)) return;
    }
    i = n;  // end sentinel; only the all-ones vertex has no slots
  }
};

}  // namespace hco
