#pragma once

#include "hco/feasibility.hpp"
#include "hco/hamming.hpp"
#include "hco/orientation.hpp"

namespace hco::prim {

// Vertices split as x = (p, v) with v the low n0 bits and p the top 2m bits.
// Letter: H if v is a codeword, Low if v decodes to a position <= a, High
// otherwise.  Sign: + when the whole word has even parity.
enum class VertexClass { HPlus, HMinus, LowPlus, LowMinus, HighPlus, HighMinus };

const char* class_name(VertexClass c);  // "H+", "Low-", ...

VertexClass classify(Vertex x, const feas::PrimitiveParams& params,
                     const ham::HammingCode& code);

// Thickened-ball construction for [a,n]_n, n odd, n = a + 2^k:
//   1. sinks at H+ and High+ (no two adjacent, asserted);
//   2. forced edges from Low+ into H- and High-, closing those at in-degree a;
//   3. leftover Low+/Low- edges form a 2a-regular graph, Euler-oriented.
// The result is verified internally (support {a,n}, exact counts) before
// being returned.  Base case [0,1]_1: the single edge 0 -> 1.
Orientation construct_primitive(const feas::PrimitiveParams& params);

// Direct construction for n = 2^k - 1 with a = (n-1)/2: every codeword of
// the length-n code is a sink, everything else gets its in-degree from an
// Euler orientation of the (n-1)-regular leftover.  Agrees in histogram with
// construct_primitive on the same spec.
Orientation special_case_perfect(int n);

}  // namespace hco::prim
