#include "hco/orientation.hpp"

#include <sstream>

#include "hco/kernels.hpp"

namespace hco {

Orientation::Orientation(int n) : n_(n) {
  check_dim(n);
  words_.assign((edge_count(n) + 63) / 64, 0);
}

void Orientation::mask_tail() {
  int slack = int(words_.size() * 64 - edges());
  if (slack > 0) words_.back() &= ~std::uint64_t{0} >> slack;
}

std::uint64_t DegreeHistogram::vertex_total() const {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::uint64_t DegreeHistogram::head_total() const {
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) total += d * counts[d];
  return total;
}

std::vector<int> DegreeHistogram::support() const {
  std::vector<int> s;
  for (std::size_t d = 0; d < counts.size(); ++d)
    if (counts[d] > 0) s.push_back(int(d));
  return s;
}

std::string DegreeHistogram::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    if (!first) out << ", ";
    out << d << ':' << counts[d];
    first = false;
  }
  out << '}';
  return out.str();
}

std::vector<std::uint8_t> in_degree_table(const Orientation& o) {
  std::vector<std::uint8_t> table(o.vertices());
  kern::indegree_omp(o, table.data());
  return table;
}

DegreeHistogram histogram_of(std::span<const std::uint8_t> table, int n) {
  DegreeHistogram h;
  h.counts.assign(n + 1, 0);
  for (auto d : table) ++h.counts[d];
  return h;
}

DegreeHistogram in_degrees(const Orientation& o) {
  auto table = in_degree_table(o);
  return histogram_of(table, o.dim());
}

int in_degree_of(const Orientation& o, Vertex v) {
  int n = o.dim();
  int deg = 0;
  for (int i = 0; i < n; ++i) {
    Vertex lo = v & ~(Vertex{1} << i);
    deg += o.bit(lo, i) == bool(v >> i & 1);
  }
  return deg;
}

Vertex observed_word(int n, int player, Vertex placement) {
  require(player >= 0 && player < n, "coordinate out of range");
  Vertex low = placement & ((Vertex{1} << player) - 1);
  Vertex high = placement >> (player + 1);
  return low | high << player;
}

int guess(const Orientation& o, int player, Vertex observed) {
  int n = o.dim();
  require(player >= 0 && player < n, "coordinate out of range");
  require(observed < (Vertex{1} << (n - 1)), "malformed observation");
  Vertex low = observed & ((Vertex{1} << player) - 1);
  Vertex high = observed >> player;
  Vertex v0 = low | high << (player + 1);  // placement with player's bit 0
  // The guessed bit is the direction bit itself: head has 1 in `player` iff
  // the edge points to the upper endpoint.
  return o.bit(v0, player);
}

int simulate(const Orientation& o, Vertex placement) {
  int n = o.dim();
  require(placement < (Vertex{1} << n), "placement out of range");
  int correct = 0;
  for (int player = 0; player < n; ++player) {
    int g = guess(o, player, observed_word(n, player, placement));
    correct += g == int(placement >> player & 1);
  }
  check_internal(correct == in_degree_of(o, placement),
                 "correct-guess count disagrees with in-degree");
  return correct;
}

}  // namespace hco
