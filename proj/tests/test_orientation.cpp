#include <doctest.h>

#include <random>

#include "hco/kernels.hpp"
#include "hco/orientation.hpp"

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

TEST_CASE("bit/set_bit round-trip across word boundaries") {
  Orientation o(5);  // 80 edges -> two words
  for (EdgeIndex j = 0; j < o.edges(); ++j) {
    CHECK(o.bit(j) == false);
    o.set_bit(j, true);
    CHECK(o.bit(j) == true);
  }
  for (EdgeIndex j = 0; j < o.edges(); j += 3) o.set_bit(j, false);
  for (EdgeIndex j = 0; j < o.edges(); ++j) CHECK(o.bit(j) == (j % 3 != 0));
}

TEST_CASE("head/tail agree with the direction bit") {
  auto o = random_orientation(4, 7);
  for (Vertex v = 0; v < o.vertices(); ++v)
    for (int i = 0; i < 4; ++i) {
      if (v >> i & 1) continue;
      Vertex hi = flip(v, i, 4);
      if (o.bit(v, i)) {
        CHECK(o.head(v, i) == hi);
        CHECK(o.tail(v, i) == v);
      } else {
        CHECK(o.head(v, i) == v);
        CHECK(o.tail(v, i) == hi);
      }
    }
}

TEST_CASE("in_degree_table sums to the edge count and matches in_degree_of") {
  for (int n : {1, 2, 5, 9}) {
    auto o = random_orientation(n, 100 + n);
    auto table = in_degree_table(o);
    std::uint64_t sum = 0;
    for (auto d : table) sum += d;
    CHECK(sum == edge_count(n));
    for (Vertex v = 0; v < o.vertices(); v += 5)
      CHECK(int(table[v]) == in_degree_of(o, v));
  }
}

TEST_CASE("histogram formatting and support") {
  Orientation o(3);
  kern::fill_checkerboard_serial(o, 1);
  auto h = in_degrees(o);
  CHECK(h.to_string() == "{1:4, 2:4}");
  CHECK(h.support() == std::vector<int>{1, 2});
  CHECK(h.vertex_total() == 8);
  CHECK(h.head_total() == 12);
  CHECK(h.at(0) == 0);
  CHECK(h.at(1) == 4);
  CHECK(h.at(99) == 0);  // out-of-range degree reads as zero
}

TEST_CASE("all-zero orientation points every edge at the lower endpoint") {
  Orientation o(3);
  auto h = in_degrees(o);
  // bit 0 = head is the endpoint with a 0 in the varying coordinate
  CHECK(h.at(0) == 1);  // only 111 receives nothing
  CHECK(in_degree_of(o, 0) == 3);
}

TEST_CASE("observed_word deletes the player's own bit") {
  CHECK(observed_word(4, 0, 0b1010) == 0b101);
  CHECK(observed_word(4, 3, 0b1010) == 0b010);
  CHECK(observed_word(4, 1, 0b1010) == 0b100);  // low bit kept, high shifted
  for (int p = 0; p < 6; ++p)
    for (Vertex v = 0; v < 64; ++v) {
      Vertex w = observed_word(6, p, v);
      // restoring the deleted bit with either value recovers v or its flip
      Vertex lo = w & ((Vertex{1} << p) - 1);
      Vertex hi = w >> p;
      Vertex v0 = lo | hi << (p + 1);
      CHECK((v0 == v || v0 == flip(v, p, 6)));
    }
}

TEST_CASE("simulate equals the in-degree at the placement, exhaustively to n=6") {
  for (int n : {1, 2, 3, 6}) {
    auto o = random_orientation(n, 400 + n);
    auto table = in_degree_table(o);
    for (Vertex v = 0; v < o.vertices(); ++v) CHECK(simulate(o, v) == int(table[v]));
  }
}

TEST_CASE("guess depends only on the observed word") {
  // two placements differing only in the player's own bit get the same guess
  auto o = random_orientation(5, 11);
  for (int p = 0; p < 5; ++p)
    for (Vertex v = 0; v < 32; ++v)
      CHECK(guess(o, p, observed_word(5, p, v)) ==
            guess(o, p, observed_word(5, p, flip(v, p, 5))));
}

TEST_CASE("orientation equality is bitwise") {
  auto a = random_orientation(4, 1);
  auto b = a;
  CHECK(a == b);
  b.set_bit(EdgeIndex{17}, !b.bit(EdgeIndex{17}));
  CHECK(!(a == b));
}
