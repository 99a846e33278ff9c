#include "hco/primitive.hpp"

#include "hco/euler.hpp"

namespace hco::prim {

namespace {

// Class codes, chosen so that code & 1 is the parity (0 = even = "+") and
// code >> 1 is the letter (0 = H, 1 = Low, 2 = High).
enum : std::uint8_t { kHP, kHM, kLowP, kLowM, kHighP, kHighM };

bool is_sink(std::uint8_t c) { return c == kHP || c == kHighP; }

std::vector<std::uint8_t> class_table(const feas::PrimitiveParams& params,
                                      const ham::HammingCode& code) {
  const int a = params.a;
  const Vertex vmask = (Vertex{1} << params.n0) - 1;
  // Decode position for every low word: 0 codeword, else 1..n0.
  std::vector<std::uint8_t> pos(std::size_t{1} << params.n0);
  for (Vertex v = 0; v <= vmask; ++v) pos[v] = std::uint8_t(code.syndrome(v));

  std::vector<std::uint8_t> cls(vertex_count(params.n));
  for (std::uint64_t x = 0; x < cls.size(); ++x) {
    int p = pos[x & vmask];
    std::uint8_t letter = p == 0 ? 0 : (p <= a ? 1 : 2);
    cls[x] = std::uint8_t(letter * 2 + parity(Vertex(x)));
  }
  return cls;
}

void check_counts(const Orientation& o, int a, int b) {
  auto counts = feas::solve_counts_small(a, b, o.dim());
  check_internal(counts.has_value(), "constructed spec is infeasible");
  auto h = in_degrees(o);
  for (int d = 0; d <= o.dim(); ++d) {
    std::uint64_t want = d == a ? counts->s : d == b ? counts->t : 0;
    check_internal(h.at(d) == want, "construction missed its histogram");
  }
}

// Shared phase-2/3 driver: sinks absorb everything incident, `forced` routes
// the remaining class pairs, whatever is left is Euler-oriented.
template <class ForcedFn>
void orient_with_sinks(Orientation& o, const std::vector<std::uint8_t>& cls,
                       ForcedFn forced) {
  const int n = o.dim();
  eul::EvenGraph leftover(cls.size());
  std::vector<EdgeIndex> leftover_edge;
  EdgeCursor c(n, 0);
  for (EdgeIndex j = 0; j < o.edges(); ++j, c.advance()) {
    const Vertex x = c.v, y = x | Vertex{1} << c.i;
    const std::uint8_t cx = cls[x], cy = cls[y];
    check_internal(!(is_sink(cx) && is_sink(cy)), "two adjacent sinks");
    if (is_sink(cx) || is_sink(cy)) {
      o.set_bit(j, is_sink(cy));
      continue;
    }
    int dir = forced(cx, cy);  // 1 head=y, 0 head=x, -1 leftover
    if (dir >= 0) {
      o.set_bit(j, dir == 1);
    } else {
      leftover.add_edge(x, y);
      leftover_edge.push_back(j);
    }
  }
  auto oriented = eul::euler_orient(leftover);
  for (std::size_t e = 0; e < oriented.size(); ++e) {
    auto [tail, head] = oriented[e];
    o.set_bit(leftover_edge[e], head > tail);
  }
}

}  // namespace

const char* class_name(VertexClass c) {
  switch (c) {
    case VertexClass::HPlus: return "H+";
    case VertexClass::HMinus: return "H-";
    case VertexClass::LowPlus: return "Low+";
    case VertexClass::LowMinus: return "Low-";
    case VertexClass::HighPlus: return "High+";
    case VertexClass::HighMinus: return "High-";
  }
  return "?";
}

VertexClass classify(Vertex x, const feas::PrimitiveParams& params,
                     const ham::HammingCode& code) {
  require(params.k >= 1 && code.length() == params.n0, "mismatched code");
  require(x < vertex_count(params.n), "vertex out of range");
  const Vertex v = x & ((Vertex{1} << params.n0) - 1);
  int p = code.syndrome(v);
  int letter = p == 0 ? 0 : (p <= params.a ? 1 : 2);
  static constexpr VertexClass kTable[6] = {
      VertexClass::HPlus,   VertexClass::HMinus, VertexClass::LowPlus,
      VertexClass::LowMinus, VertexClass::HighPlus, VertexClass::HighMinus};
  return kTable[letter * 2 + parity(x)];
}

Orientation construct_primitive(const feas::PrimitiveParams& params) {
  if (params.k == 0) {  // [0,1]_1: the single edge 0 -> 1
    Orientation o(1);
    o.set_bit(EdgeIndex{0}, true);
    return o;
  }
  const int n = params.n, a = params.a;
  check_internal(a + 1 + params.n0 == n, "split widths must cover n");
  ham::HammingCode code(params.k);
  auto cls = class_table(params, code);

  // The sink count must already equal t.
  auto counts = feas::solve_counts_small(a, n, n);
  check_internal(counts.has_value(), "primitive spec infeasible");
  std::uint64_t sinks = 0;
  for (auto c : cls) sinks += is_sink(c);
  check_internal(sinks == counts->t, "sink classes do not count to t");

  Orientation o(n);
  orient_with_sinks(o, cls, [](std::uint8_t cx, std::uint8_t cy) {
    // Low+ feeds the odd a-degree vertices; Low+/Low- is the Euler leftover.
    if (cx == kLowP && (cy == kHM || cy == kHighM)) return 1;
    if (cy == kLowP && (cx == kHM || cx == kHighM)) return 0;
    check_internal((cx == kLowP && cy == kLowM) || (cx == kLowM && cy == kLowP),
                   "unexpected class adjacency");
    return -1;
  });
  check_counts(o, a, n);
  return o;
}

Orientation special_case_perfect(int n) {
  int k = 0;
  while ((1 << k) - 1 < n) ++k;
  require((1 << k) - 1 == n, "dimension must be 2^k - 1");
  check_dim(n);
  ham::HammingCode code(k);

  // Sinks at every codeword of the length-n code; each non-codeword has
  // exactly one codeword neighbor, so the leftover is (n-1)-regular.
  std::vector<std::uint8_t> cls(vertex_count(n));
  for (std::uint64_t x = 0; x < cls.size(); ++x)
    cls[x] = code.is_codeword(Vertex(x)) ? kHP : kLowM;

  Orientation o(n);
  orient_with_sinks(o, cls, [](std::uint8_t, std::uint8_t) { return -1; });
  check_counts(o, (n - 1) / 2, n);
  return o;
}

}  // namespace hco::prim
