#pragma once

#include <vector>

#include "hco/bits.hpp"

namespace hco::ham {

// Perfect single-error-correcting code of length n0 = 2^k - 1.  The
// parity-check column for position j (1-based) is the binary representation
// of j, so the syndrome of a received word is the XOR of its set positions
// and decoding flips the syndrome position.
class HammingCode {
 public:
  explicit HammingCode(int k);

  int k() const { return k_; }
  int length() const { return n0_; }

  // XOR of 1-based positions of set bits; 0 means codeword.
  int syndrome(Vertex v) const;
  bool is_codeword(Vertex v) const { return syndrome(v) == 0; }

  struct Decoded {
    Vertex h;  // nearest codeword
    int i;     // 1-based flipped position, 0 when v itself is a codeword
  };
  Decoded decode(Vertex v) const;

  std::vector<Vertex> codewords() const;  // ascending, 2^(n0-k) of them

 private:
  int k_, n0_;
};

// f of the coordinate-exchange lemma: f[j-1] is the unique position such
// that flipping i then j in codeword h lands distance 1 from another
// codeword at that position; f fixes i and permutes {1..n0}.
std::vector<int> lemma_permutation(const HammingCode& code, Vertex h, int i);

}  // namespace hco::ham
