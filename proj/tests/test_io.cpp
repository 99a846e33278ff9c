#include <doctest.h>

#include <random>
#include <sstream>

#include "hco/hco_io.hpp"
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

std::string write_to_string(const Orientation& o, int a, int b) {
  std::ostringstream s;
  io::write_hco(s, o, a, b);
  return s.str();
}

}  // namespace

TEST_CASE("HCO round-trips bit for bit") {
  for (int n : {1, 2, 7, 10}) {
    auto o = random_orientation(n, 1000 + n);
    std::istringstream in(write_to_string(o, 1, n));
    auto f = io::read_hco(in);
    CHECK(f.a == 1);
    CHECK(f.b == n);
    CHECK(f.o == o);
  }
}

TEST_CASE("HCO writer wraps the stream at 120 columns") {
  auto o = random_orientation(9, 3);  // 2304 edges
  auto text = write_to_string(o, 0, 9);
  std::istringstream s(text);
  std::string line;
  std::getline(s, line);
  CHECK(line == "HCO 1 n=9 a=0 b=9");
  std::size_t bits = 0;
  while (std::getline(s, line)) {
    CHECK(line.size() <= 120);
    bits += line.size();
  }
  CHECK(bits == edge_count(9));
}

TEST_CASE("HCO reader reports malformed input with positions") {
  auto read = [](const std::string& text) {
    std::istringstream s(text);
    return io::read_hco(s);
  };
  CHECK_THROWS_WITH_AS(read(""), "line 1, column 1: missing header",
                       io::ParseError);
  CHECK_THROWS_AS(read("HCO 2 n=2 a=0 b=2\n0110"), io::ParseError);
  CHECK_THROWS_AS(read("HCO 1 n=2 a=0 b=2\n01x0"), io::ParseError);
  CHECK_THROWS_AS(read("HCO 1 n=2 a=0 b=2\n011"), io::ParseError);    // short
  CHECK_THROWS_AS(read("HCO 1 n=2 a=0 b=2\n01101"), io::ParseError);  // long
  CHECK_THROWS_AS(read("HCO 1 n=2 a=0\n0110"), io::ParseError);
  CHECK_THROWS_AS(read("HCO 1 n=0 a=0 b=0\n"), io::ParseError);
  CHECK_THROWS_AS(read("HCO 1 n=2 a=0 b=2 junk\n0110"), io::ParseError);
  CHECK_NOTHROW(read("HCO 1 n=2 a=0 b=2\n0110"));
  CHECK_NOTHROW(read("HCO 1 n=2 a=0 b=2\r\n0110\r\n"));  // CRLF tolerated
}

TEST_CASE("HCO reader demands full 120-bit rows before the final one") {
  std::istringstream s("HCO 1 n=2 a=0 b=2\n0\n1\n10\n");
  CHECK_THROWS_AS(io::read_hco(s), io::ParseError);  // short row mid-stream
  std::istringstream ok("HCO 1 n=2 a=0 b=2\n0110\n");
  CHECK_NOTHROW(io::read_hco(ok));
}

TEST_CASE("HCO file round-trip through disk") {
  auto o = random_orientation(6, 99);
  io::write_hco_file("/tmp/hco_io_test.hco", o, 2, 4);
  auto f = io::read_hco_file("/tmp/hco_io_test.hco");
  CHECK(f.o == o);
  CHECK(f.a == 2);
  CHECK(f.b == 4);
  CHECK_THROWS_AS(io::read_hco_file("/tmp/does_not_exist.hco"),
                  std::runtime_error);
}
