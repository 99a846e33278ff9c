#include "hco/feasibility.hpp"

#include <algorithm>

namespace hco::feas {

std::optional<Counts> solve_counts(int a, int b, int n) {
  require(n >= 1, "dimension must be positive");
  if (a > b) std::swap(a, b);
  require(a >= 0 && b <= n, "in-degrees out of range");

  const BigInt pow_n = BigInt(1) << n;
  const BigInt half = BigInt(1) << (n - 1);
  if (a == b) {
    // s + t = 2^n and a*2^n = n*2^(n-1) force a = n/2.
    if (2 * a != n) return std::nullopt;
    return Counts{pow_n, 0, true};
  }
  // s = 2^(n-1)(2b-n)/(b-a), t = 2^(n-1)(n-2a)/(b-a).
  const int d = b - a;
  const BigInt s_num = half * (2 * b - n);
  const BigInt t_num = half * (n - 2 * a);
  if (s_num < 0 || t_num < 0) return std::nullopt;
  if (s_num % d != 0 || t_num % d != 0) return std::nullopt;
  Counts c{s_num / d, t_num / d, false};
  c.degenerate = c.s == 0 || c.t == 0;
  return c;
}

std::optional<SmallCounts> solve_counts_small(int a, int b, int n) {
  check_dim(n);
  auto c = solve_counts(a, b, n);
  if (!c) return std::nullopt;
  return SmallCounts{c->s.convert_to<std::uint64_t>(),
                     c->t.convert_to<std::uint64_t>(), c->degenerate};
}

std::vector<FeasiblePair> enumerate_feasible(int n) {
  require(n >= 1, "dimension must be positive");
  std::vector<FeasiblePair> out;
  // Strict feasibility needs a < n/2 < b.
  for (int a = 0; 2 * a < n; ++a)
    for (int b = n; 2 * b > n; --b) {
      auto c = solve_counts(a, b, n);
      if (c && !c->degenerate) out.push_back({a, b, c->s, c->t});
    }
  std::sort(out.begin(), out.end(),
            [](const FeasiblePair& x, const FeasiblePair& y) {
              return x.a != y.a ? x.a < y.a : x.b < y.b;
            });
  return out;
}

std::optional<PrimitiveParams> classify_primitive(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  if (n < 1 || a < 0 || b != n) return std::nullopt;
  if (n == 1 && a == 0) return PrimitiveParams{0, 1, 0, 0, 0, 0};
  if (n % 2 == 0) return std::nullopt;
  const int gap = n - a;
  if (gap <= 0 || (gap & (gap - 1)) != 0) return std::nullopt;  // not 2^k
  if (a >= gap) return std::nullopt;                            // needs a < 2^k
  check_internal(a % 2 == 1, "odd n minus a power of two >= 2 is odd");
  int k = 0;
  while ((1 << k) < gap) ++k;
  return PrimitiveParams{a, n, k, (a + 1) / 2, gap - 1, gap - 1 - a};
}

}  // namespace hco::feas
