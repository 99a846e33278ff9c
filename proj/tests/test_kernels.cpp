#include <doctest.h>

#include <random>

#include "hco/kernels.hpp"
#include "hco/orientation.hpp"
#include "hco/verify.hpp"

using namespace hco;

namespace {

Orientation random_orientation(int n, std::uint64_t seed) {
  Orientation o(n);
  std::mt19937_64 rng(seed);
  auto w = o.mutable_words();
  for (auto& word : w) word = rng();
  o.mask_tail();
  return o;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  for (int n : {1, 2, 3, 7, 12}) {
    Orientation a(n), b(n);
    int mid = n / 2;
    kern::fill_checkerboard_serial(a, mid);
    kern::fill_checkerboard_omp(b, mid);
    CHECK(a == b);

    std::vector<std::uint8_t> d1(vertex_count(n)), d2(vertex_count(n));
    kern::indegree_serial(a, d1.data());
    kern::indegree_omp(a, d2.data());
    CHECK(d1 == d2);

    kern::reverse_serial(a);
    kern::reverse_omp(b);
    CHECK(a == b);

    if (n + 2 <= 12) {
      Orientation l1(n + 2), l2(n + 2);
      kern::fill_lift_serial(a, l1);
      kern::fill_lift_omp(a, l2);
      CHECK(l1 == l2);
    }
    if (2 * n <= 12) {
      Orientation u1(2 * n), u2(2 * n);
      kern::fill_blowup_serial(a, 2, u1);
      kern::fill_blowup_omp(a, 2, u2);
      CHECK(u1 == u2);
    }
  }
}

TEST_CASE("checkerboard splits in-degrees by parity") {
  for (int n = 1; n <= 8; ++n)
    for (int a = 0; a <= n; ++a) {
      Orientation o(n);
      kern::fill_checkerboard_omp(o, a);
      auto table = in_degree_table(o);
      for (Vertex v = 0; v < vertex_count(n); ++v)
        CHECK(int(table[v]) == (parity(v) == 0 ? a : n - a));
    }
}

TEST_CASE("checkerboard(0) orients everything toward even parity") {
  Orientation o(3);
  kern::fill_checkerboard_serial(o, 0);
  auto h = in_degrees(o);
  CHECK(h.at(0) == 4);
  CHECK(h.at(3) == 4);
}

TEST_CASE("reverse complements every in-degree") {
  auto o = random_orientation(6, 42);
  auto before = in_degree_table(o);
  kern::reverse_omp(o);
  auto after = in_degree_table(o);
  for (Vertex v = 0; v < o.vertices(); ++v)
    CHECK(int(before[v]) + int(after[v]) == 6);
}

TEST_CASE("reverse twice is the identity") {
  auto o = random_orientation(5, 9);
  auto copy = o;
  kern::reverse_serial(o);
  kern::reverse_serial(o);
  CHECK(o == copy);
}

TEST_CASE("lift adds exactly one to every in-degree") {
  for (int n : {1, 3, 6}) {
    auto in = random_orientation(n, 77 + n);
    auto small = in_degree_table(in);
    Orientation out(n + 2);
    kern::fill_lift_omp(in, out);
    auto big = in_degree_table(out);
    for (Vertex v = 0; v < out.vertices(); ++v)
      CHECK(int(big[v]) == int(small[v & (vertex_count(n) - 1)]) + 1);
  }
}

TEST_CASE("lift keeps the base cube's orientation in the low coordinates") {
  auto in = random_orientation(4, 5);
  Orientation out(6);
  kern::fill_lift_serial(in, out);
  for (Vertex v = 0; v < out.vertices(); ++v)
    for (int i = 0; i < 4; ++i) {
      if (v >> i & 1) continue;
      CHECK(out.bit(v, i) == in.bit(v & 0xf, i));
    }
}

TEST_CASE("blow-up multiplies every in-degree by the factor") {
  for (int factor : {1, 2, 3}) {
    const int n = 3;
    auto in = random_orientation(n, 50 + factor);
    auto small = in_degree_table(in);
    Orientation out(factor * n);
    kern::fill_blowup_omp(in, factor, out);
    auto big = in_degree_table(out);
    for (Vertex u = 0; u < out.vertices(); ++u) {
      Vertex img = 0;
      for (int blk = 0; blk < n; ++blk) {
        Vertex chunk = (u >> (blk * factor)) & ((Vertex{1} << factor) - 1);
        img |= Vertex(parity(chunk)) << blk;
      }
      CHECK(int(big[u]) == factor * int(small[img]));
    }
  }
}

TEST_CASE("kernel dimension mismatches are rejected") {
  Orientation in(3), out4(4), out6(6);
  CHECK_THROWS_AS(kern::fill_lift_serial(in, out4), std::invalid_argument);
  CHECK_THROWS_AS(kern::fill_blowup_serial(in, 2, out4), std::invalid_argument);
  CHECK_NOTHROW(kern::fill_blowup_serial(in, 2, out6));
}
