#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hco/bits.hpp"

namespace hco {

// An orientation of the n-cube: one direction bit per edge, stored densely in
// canonical edge order.  Bit 1 means the head of edge (v, i) is the endpoint
// with a 1 in coordinate i; bit 0 means the head is v itself.
//
// Orientations are immutable once built; construction code uses the set_*
// mutators and then hands out const references.
class Orientation {
 public:
  explicit Orientation(int n);

  int dim() const { return n_; }
  EdgeIndex edges() const { return edge_count(n_); }
  std::uint64_t vertices() const { return vertex_count(n_); }

  bool bit(EdgeIndex idx) const {
    return words_[idx >> 6] >> (idx & 63) & 1;
  }
  // Direction of edge (v, i); bit i of v must be zero.
  bool bit(Vertex v, int i) const { return bit(edge_index(n_, v, i)); }

  void set_bit(EdgeIndex idx, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    if (value) words_[idx >> 6] |= mask;
    else words_[idx >> 6] &= ~mask;
  }
  void set_bit(Vertex v, int i, bool value) {
    set_bit(edge_index(n_, v, i), value);
  }

  // Head/tail of canonical edge (v, i).
  Vertex head(Vertex v, int i) const {
    return bit(v, i) ? (v | (Vertex{1} << i)) : v;
  }
  Vertex tail(Vertex v, int i) const {
    return bit(v, i) ? v : (v | (Vertex{1} << i));
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }
  std::uint64_t word_count() const { return words_.size(); }

  // Unused high bits of the final word are kept zero.
  void mask_tail();

  bool operator==(const Orientation& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Vertex counts per in-degree value 0..n.
struct DegreeHistogram {
  std::vector<std::uint64_t> counts;

  std::uint64_t vertex_total() const;
  std::uint64_t head_total() const;  // sum of degree*count
  std::vector<int> support() const;
  std::uint64_t at(int degree) const {
    return degree >= 0 && degree < int(counts.size()) ? counts[degree] : 0;
  }
  // Ascending-degree rendering, e.g. "{1:20, 5:12}".
  std::string to_string() const;

  bool operator==(const DegreeHistogram&) const = default;
};

// Per-vertex in-degrees, one pass over the canonical edges.
std::vector<std::uint8_t> in_degree_table(const Orientation& o);
DegreeHistogram in_degrees(const Orientation& o);
DegreeHistogram histogram_of(std::span<const std::uint8_t> table, int n);

// In-degree of a single vertex, by probing its n incident edges.
int in_degree_of(const Orientation& o, Vertex v);

// The hat-strategy view.  `observed` packs the other n-1 players' bits in
// ascending coordinate order (coordinate c of the placement is bit c for
// c < player, bit c-1 for c > player).  Returns the guessed bit.
int guess(const Orientation& o, int player, Vertex observed);

// Observation word seen by `player` when the placement is `placement`.
Vertex observed_word(int n, int player, Vertex placement);

// Number of players whose guess matches `placement`; equals the in-degree of
// `placement`, which is asserted.
int simulate(const Orientation& o, Vertex placement);

}  // namespace hco
