#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hco/bits.hpp"

namespace hco::feas {

using BigInt = boost::multiprecision::cpp_int;

// Vertex counts for [a,b]_n: s vertices of in-degree a, t of in-degree b,
// from s+t = 2^n and a*s + b*t = n*2^(n-1).
struct Counts {
  BigInt s, t;
  bool degenerate = false;  // s or t is zero (includes the balanced a=b case)
};

// Unordered pair: a > b is normalized by swapping.  Absence = infeasible.
std::optional<Counts> solve_counts(int a, int b, int n);

// Counts as machine words, for dimensions where they fit.
struct SmallCounts {
  std::uint64_t s, t;
  bool degenerate;
};
std::optional<SmallCounts> solve_counts_small(int a, int b, int n);

struct FeasiblePair {
  int a, b;
  BigInt s, t;
};

// All strictly feasible pairs a < b (s > 0 and t > 0), sorted by (a, b).
std::vector<FeasiblePair> enumerate_feasible(int n);

// Irreducible instances [a,n]_n: n odd, n - a = 2^k with a < 2^k.
// The n=1 base case [0,1]_1 is primitive with k=0 (degenerate m, n0).
struct PrimitiveParams {
  int a, n;
  int k;        // 2^k = n - a
  int m;        // 2m = a + 1 (0 in the base case)
  int n0;       // 2^k - 1
  int a_prime;  // n0 - a
};
std::optional<PrimitiveParams> classify_primitive(int a, int b, int n);

}  // namespace hco::feas
