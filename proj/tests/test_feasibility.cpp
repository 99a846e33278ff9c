#include <doctest.h>

#include "hco/feasibility.hpp"

using namespace hco;
using feas::solve_counts;

namespace {

struct Row {
  int a, b;
  std::uint64_t s, t;
};

// The strictly feasible pairs for n = 1..8 with their counts.
const std::vector<std::vector<Row>> kTables = {
    /* n=1 */ {{0, 1, 1, 1}},
    /* n=2 */ {{0, 2, 2, 2}},
    /* n=3 */ {{0, 2, 2, 6}, {0, 3, 4, 4}, {1, 2, 4, 4}, {1, 3, 6, 2}},
    /* n=4 */ {{0, 4, 8, 8}, {1, 3, 8, 8}},
    /* n=5 */
    {{0, 4, 12, 20}, {0, 5, 16, 16}, {1, 3, 8, 24}, {1, 4, 16, 16},
     {1, 5, 20, 12}, {2, 3, 16, 16}, {2, 4, 24, 8}},
    /* n=6 */
    {{0, 4, 16, 48}, {0, 6, 32, 32}, {1, 5, 32, 32}, {2, 4, 32, 32},
     {2, 6, 48, 16}},
    /* n=7 */
    {{0, 4, 16, 112}, {0, 7, 64, 64}, {1, 5, 48, 80}, {1, 6, 64, 64},
     {2, 4, 32, 96}, {2, 5, 64, 64}, {2, 6, 80, 48}, {3, 4, 64, 64},
     {3, 5, 96, 32}, {3, 7, 112, 16}},
    /* n=8 */
    {{0, 8, 128, 128}, {1, 5, 64, 192}, {1, 7, 128, 128}, {2, 6, 128, 128},
     {3, 5, 128, 128}, {3, 7, 192, 64}},
};

}  // namespace

TEST_CASE("enumerate_feasible reproduces the small tables exactly") {
  for (int n = 1; n <= 8; ++n) {
    auto got = feas::enumerate_feasible(n);
    const auto& want = kTables[std::size_t(n - 1)];
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].a == want[i].a);
      CHECK(got[i].b == want[i].b);
      CHECK(got[i].s == want[i].s);
      CHECK(got[i].t == want[i].t);
    }
  }
}

TEST_CASE("counts satisfy the two defining equations") {
  for (int n = 1; n <= 16; ++n)
    for (const auto& f : feas::enumerate_feasible(n)) {
      feas::BigInt pow2 = feas::BigInt(1) << n;
      CHECK(f.s + f.t == pow2);
      CHECK(f.a * f.s + f.b * f.t == (pow2 >> 1) * n);
      CHECK(f.s > 0);
      CHECK(f.t > 0);
      CHECK(f.a < f.b);
      CHECK(2 * f.a < n);
      CHECK(2 * f.b > n);
    }
}

TEST_CASE("n=1000 has 3038 strictly feasible pairs") {
  CHECK(feas::enumerate_feasible(1000).size() == 3038);
}

TEST_CASE("solve_counts normalizes order and flags degeneracy") {
  auto c = solve_counts(3, 1, 4);
  REQUIRE(c.has_value());
  CHECK(c->s == 8);
  CHECK(c->t == 8);
  CHECK(!c->degenerate);

  auto d = solve_counts(1, 2, 4);  // b = n/2 -> s = 0
  REQUIRE(d.has_value());
  CHECK(d->degenerate);
  CHECK(d->s == 0);
  CHECK(d->t == 16);

  auto e = solve_counts(2, 2, 4);  // balanced
  REQUIRE(e.has_value());
  CHECK(e->degenerate);
  CHECK(e->s == 16);

  CHECK(!solve_counts(1, 1, 4).has_value());  // a = b != n/2
  CHECK(!solve_counts(0, 3, 4).has_value());  // non-integral split
  CHECK(!solve_counts(0, 1, 3).has_value());  // negative t branch
}

TEST_CASE("solve_counts_small matches the big-integer path") {
  for (int n = 1; n <= 20; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        auto big = solve_counts(a, b, n);
        auto small = feas::solve_counts_small(a, b, n);
        REQUIRE(big.has_value() == small.has_value());
        if (big) {
          CHECK(feas::BigInt(small->s) == big->s);
          CHECK(feas::BigInt(small->t) == big->t);
          CHECK(small->degenerate == big->degenerate);
        }
      }
}

TEST_CASE("classify_primitive accepts exactly the irreducible specs") {
  // over all [a,n]_n with n <= 15: the eight known primitives and nothing else
  std::vector<std::pair<int, int>> accepted;
  for (int n = 1; n <= 15; ++n)
    for (int a = 0; a <= n; ++a)
      if (feas::classify_primitive(a, n, n)) accepted.emplace_back(a, n);
  CHECK(accepted == std::vector<std::pair<int, int>>{{0, 1},
                                                     {1, 3},
                                                     {1, 5},
                                                     {3, 7},
                                                     {1, 9},
                                                     {3, 11},
                                                     {5, 13},
                                                     {7, 15}});
}

TEST_CASE("classify_primitive computes the layout parameters") {
  auto p = feas::classify_primitive(5, 13, 13);
  REQUIRE(p.has_value());
  CHECK(p->a == 5);
  CHECK(p->n == 13);
  CHECK(p->k == 3);       // n - a = 8 = 2^3
  CHECK(p->m == 3);       // 2m = a + 1
  CHECK(p->n0 == 7);      // 2^k - 1
  CHECK(p->a_prime == 2); // n0 - a

  CHECK(!feas::classify_primitive(1, 3, 4).has_value());  // b != n
  CHECK(!feas::classify_primitive(2, 6, 6).has_value());  // n even
  CHECK(!feas::classify_primitive(2, 5, 5).has_value());  // n - a = 3, not a power of two
  CHECK(!feas::classify_primitive(5, 9, 9).has_value());  // a >= n - a
}
