#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hco/orientation.hpp"

namespace hco::kary {

// The k-ary n-cube: vertices are integers < k^n read as base-k digit words
// (digit j = (value / k^j) % k).  A line fixes all digits but one and runs
// that digit through 0..k-1; there are n*k^(n-1) of them.  A marking picks
// one vertex per line.

struct Line {
  int d;          // running direction
  std::uint64_t base;  // vertex value with digit d = 0
};

std::uint64_t pow_u64(std::uint64_t base, int exp);

// Canonical order: d ascending, base ascending.  line_index compresses base
// by deleting digit d.
std::uint64_t line_count(int k, int n);
std::uint64_t line_index(int k, int n, const Line& line);
Line line_at(int k, int n, std::uint64_t index);
Line line_through(int k, int n, std::uint64_t vertex, int d);

struct Marking {
  int k = 0, n = 0;
  std::vector<std::uint8_t> marks;  // marked digit per line, canonical order

  std::uint64_t vertices() const { return pow_u64(k, n); }
  std::uint64_t lines() const { return line_count(k, n); }
};

// Per-vertex mark counts; sums to n*k^(n-1).
DegreeHistogram mark_degrees(const Marking& m);
std::vector<std::uint8_t> mark_count_table(const Marking& m);

// Non-negative integer (s, t) with s+t = k^n, a*s+b*t = n*k^(n-1), or none.
struct KCounts {
  std::uint64_t s, t;
  bool degenerate;
};
std::optional<KCounts> kary_feasible(int a, int b, int n, int k);

// Every vertex marked exactly once: the direction-d line marks its vertex
// with digit sum = d (mod k).  Needs n = k.
Marking perfect_block_marking(int k);

// [a,b]_n -> [a+1,b+1]_(n+k): the first n digits carry m within each slice,
// the last k digits a perfect block, adding one mark to every vertex.
Marking kary_lift(const Marking& m);

// [a,b]_n -> [ell*a, ell*b]_(ell*n): blocks of ell digits map to their digit
// sum mod k; a line marks the vertex over the marked image vertex.
Marking kary_blowup(const Marking& m, int ell);

// k=2 bridge: a marking and an orientation are the same data (the line of
// edge (v, i) is (i, v); marked digit = direction bit).
Marking marking_of_orientation(const Orientation& o);
Orientation orientation_of_marking(const Marking& m);

// Backtracking search: most-constrained-line-first with seeded random
// tie-breaking, restarted on per-segment node budgets.  `Absent` is proven
// (a segment exhausted the whole tree); `Budget` is not.
enum class SearchOutcome { Found, Absent, Budget };
struct SearchResult {
  SearchOutcome outcome;
  std::optional<Marking> marking;
  std::uint64_t nodes = 0;
  int restarts = 0;
};
inline constexpr std::uint64_t kDefaultSearchBudget = 1u << 26;
SearchResult kary_search(int a, int b, int n, int k,
                         std::uint64_t node_budget = kDefaultSearchBudget);

// DIMACS CNF for "some marking realizes [a,b]_n over k": variable L*k+c+1
// is "line L marks digit c" (exactly-one per line); one selector variable
// per vertex chooses between count=a and count=b, enforced by conditioned
// binomial at-most/at-least blocks.
std::string export_cnf(int a, int b, int n, int k);

// KHM v1: `KHM 1 k=<k> n=<n>`, then one marked digit per line in canonical
// order, one per text line.
void write_khm(std::ostream& out, const Marking& m);
Marking read_khm(std::istream& in);  // throws io::ParseError with position info
void write_khm_file(const std::string& path, const Marking& m);
Marking read_khm_file(const std::string& path);

}  // namespace hco::kary
