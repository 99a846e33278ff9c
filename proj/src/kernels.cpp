#include "hco/kernels.hpp"

#include <cstring>

namespace hco::kern {

// ---- in-degree accounting ----

void indegree_serial(const Orientation& o, std::uint8_t* out) {
  const int n = o.dim();
  const std::uint64_t nv = vertex_count(n);
  std::memset(out, 0, nv);
  std::vector<std::uint8_t> outdeg(nv, 0);
  EdgeCursor c(n, 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance()) {
    Vertex hi = c.v | Vertex{1} << c.i;
    if (o.bit(j)) {
      ++out[hi];
      ++outdeg[c.v];
    } else {
      ++out[c.v];
      ++outdeg[hi];
    }
  }
  for (std::uint64_t v = 0; v < nv; ++v)
    check_internal(out[v] + outdeg[v] == n, "degree sum mismatch");
}

void indegree_omp(const Orientation& o, std::uint8_t* out) {
  const int n = o.dim();
  const std::uint64_t nv = vertex_count(n);
  std::memset(out, 0, nv);
#ifdef _OPENMP
  const EdgeIndex m = o.edges();
#pragma omp parallel
  {
    std::vector<std::uint8_t> local(nv, 0);
#pragma omp for schedule(static)
    for (std::int64_t w = 0; w < std::int64_t(o.word_count()); ++w) {
      EdgeIndex j0 = EdgeIndex(w) * 64;
      EdgeCursor c(n, j0);
      EdgeIndex stop = std::min(j0 + 64, m);
      for (EdgeIndex j = j0; j < stop; ++j, c.advance()) {
        Vertex head = o.bit(j) ? c.v | Vertex{1} << c.i : c.v;
        ++local[head];
      }
    }
#pragma omp critical
    for (std::uint64_t v = 0; v < nv; ++v) out[v] += local[v];
  }
#else
  EdgeCursor c(n, 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance()) {
    Vertex head = o.bit(j) ? c.v | Vertex{1} << c.i : c.v;
    ++out[head];
  }
#endif
}

// ---- structured fills ----
//
// Each fill writes whole 64-bit words: a block walks edges [64w, 64w+64) with
// one cursor, so parallel iterations never touch the same word.

namespace {

template <class BitFn>
void fill_words(Orientation& o, BitFn bit) {
  const int n = o.dim();
  const EdgeIndex m = o.edges();
  const std::int64_t words = std::int64_t(o.word_count());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t w = 0; w < words; ++w) {
    EdgeIndex j0 = EdgeIndex(w) * 64;
    EdgeCursor c(n, j0);
    std::uint64_t word = 0;
    EdgeIndex stop = std::min(j0 + 64, m);
    for (EdgeIndex j = j0; j < stop; ++j, c.advance())
      if (bit(c.v, c.i)) word |= std::uint64_t{1} << (j - j0);
    o.mutable_words()[w] = word;
  }
}

template <class BitFn>
void fill_serial_loop(Orientation& o, BitFn bit) {
  EdgeCursor c(o.dim(), 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance())
    o.set_bit(j, bit(c.v, c.i));
}

}  // namespace

// Checkerboard: even vertices take their low-a edges inward, odd vertices the
// rest.  Directions are stated in 1-based axis position i = i0 + 1.
static bool checker_bit(Vertex u, int i0, int a) {
  int i = i0 + 1;
  return parity(u) == 0 ? i > a : i <= a;
}

void fill_checkerboard_serial(Orientation& o, int a) {
  require(a >= 0 && a <= o.dim(), "in-degree out of range");
  fill_serial_loop(o, [a](Vertex u, int i0) { return checker_bit(u, i0, a); });
}

void fill_checkerboard_omp(Orientation& o, int a) {
  require(a >= 0 && a <= o.dim(), "in-degree out of range");
  fill_words(o, [a](Vertex u, int i0) { return checker_bit(u, i0, a); });
}

void reverse_serial(Orientation& o) {
  for (auto& w : o.mutable_words()) w = ~w;
  o.mask_tail();
}

void reverse_omp(Orientation& o) {
  auto words = o.mutable_words();
  const std::int64_t count = std::int64_t(words.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t w = 0; w < count; ++w) words[w] = ~words[w];
  o.mask_tail();
}

// Lift: new dimensions n and n+1 carry a directed 4-cycle over the four
// copies, 00 -> 10 -> 11 -> 01 -> 00 in (bit n, bit n+1); old edges copy the
// source orientation.
namespace {

struct LiftBit {
  const Orientation* in;
  int n;  // in->dim()
  bool operator()(Vertex u, int d) const {
    if (d == n) return !(u >> (n + 1) & 1);
    if (d == n + 1) return u >> n & 1;
    return in->bit(u & ((Vertex{1} << n) - 1), d);
  }
};

}  // namespace

void fill_lift_serial(const Orientation& in, Orientation& out) {
  require(out.dim() == in.dim() + 2, "lift target must gain two dimensions");
  fill_serial_loop(out, LiftBit{&in, in.dim()});
}

void fill_lift_omp(const Orientation& in, Orientation& out) {
  require(out.dim() == in.dim() + 2, "lift target must gain two dimensions");
  fill_words(out, LiftBit{&in, in.dim()});
}

// Blow-up: replace each axis of the source with `factor` axes; a vertex maps
// down by per-block parity, and edges flip with the parity of the rest of
// their own block.
namespace {

struct BlowupBit {
  const Orientation* in;
  int factor;
  bool operator()(Vertex u, int d) const {
    const int k = in->dim();
    const int block = d / factor;
    Vertex y = 0;
    for (int b = 0; b < k; ++b) {
      Vertex chunk = u >> (b * factor) & ((Vertex{1} << factor) - 1);
      y |= Vertex(parity(chunk)) << b;
    }
    Vertex y0 = y & ~(Vertex{1} << block);
    Vertex own = u >> (block * factor) & ((Vertex{1} << factor) - 1);
    bool rest = parity(own & ~(Vertex{1} << (d - block * factor)));
    return in->bit(y0, block) ^ rest;
  }
};

}  // namespace

void fill_blowup_serial(const Orientation& in, int factor, Orientation& out) {
  require(factor >= 1, "factor must be positive");
  require(out.dim() == in.dim() * factor, "blow-up target dimension mismatch");
  fill_serial_loop(out, BlowupBit{&in, factor});
}

void fill_blowup_omp(const Orientation& in, int factor, Orientation& out) {
  require(factor >= 1, "factor must be positive");
  require(out.dim() == in.dim() * factor, "blow-up target dimension mismatch");
  fill_words(out, BlowupBit{&in, factor});
}

}  // namespace hco::kern
