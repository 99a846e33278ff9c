#include "hco/hamming.hpp"

namespace hco::ham {

HammingCode::HammingCode(int k) : k_(k), n0_((1 << k) - 1) {
  require(k >= 1 && k <= 5, "code parameter out of range");
}

int HammingCode::syndrome(Vertex v) const {
  require(v < (Vertex{1} << n0_), "word too long for this code");
  int s = 0;
  while (v) {
    int bit = std::countr_zero(v);
    s ^= bit + 1;  // parity-check column for position j is binary j
    v &= v - 1;
  }
  return s;
}

HammingCode::Decoded HammingCode::decode(Vertex v) const {
  int s = syndrome(v);
  if (s == 0) return {v, 0};
  return {flip(v, s - 1, n0_), s};
}

std::vector<Vertex> HammingCode::codewords() const {
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << (n0_ - k_));
  for (Vertex v = 0; v < (Vertex{1} << n0_); ++v)
    if (syndrome(v) == 0) out.push_back(v);
  return out;
}

std::vector<int> lemma_permutation(const HammingCode& code, Vertex h, int i) {
  require(code.is_codeword(h), "permutation base must be a codeword");
  const int n0 = code.length();
  require(i >= 1 && i <= n0, "position out of range");
  std::vector<int> f(n0);
  for (int j = 1; j <= n0; ++j) {
    if (j == i) {
      f[j - 1] = i;
      continue;
    }
    Vertex x = flip(flip(h, i - 1, n0), j - 1, n0);
    auto d = code.decode(x);
    check_internal(d.i != 0, "double flip of a codeword cannot stay in the code");
    f[j - 1] = d.i;
  }
  return f;
}

}  // namespace hco::ham
