#include <doctest.h>

#include "hco/kernels.hpp"
#include "hco/reductions.hpp"
#include "hco/verify.hpp"

using namespace hco;

TEST_CASE("verify accepts the checkerboard rows") {
  auto o = red::checkerboard(1, 3);
  auto r = ver::verify(o, 1, 2);
  CHECK(r.pass);
  CHECK(r.histogram.to_string() == "{1:4, 2:4}");
  CHECK(!r.first_offender.has_value());
}

TEST_CASE("verify rejects a wrong spec with the support reason") {
  auto o = red::checkerboard(1, 3);
  auto r = ver::verify(o, 0, 3);
  CHECK(!r.pass);
  CHECK(r.first_offender.has_value());
  CHECK(*r.first_offender == 0);  // vertex 0 has in-degree 1
  CHECK(r.reason.find("vertex 0 has in-degree 1") != std::string::npos);
}

TEST_CASE("verify rejects specs failing the counting equations") {
  Orientation o(4);
  auto r = ver::verify(o, 0, 3);
  CHECK(!r.pass);
  CHECK(r.reason.find("counting equations") != std::string::npos);
}

TEST_CASE("verify accepts degenerate realizations of a two-valued spec") {
  auto o = red::balanced_euler(4);  // every vertex at in-degree 2
  CHECK(ver::verify(o, 1, 2).pass);   // s = 0: nothing needs to sit at a
  CHECK(ver::verify(o, 2, 4).pass);   // t = 0
  CHECK(!ver::verify(o, 1, 3).pass);  // support {2} outside {1,3}
}

TEST_CASE("verify handles the balanced spec") {
  auto o = red::balanced_euler(4);
  auto r = ver::verify(o, 2, 2);
  CHECK(r.pass);
  CHECK(r.histogram.at(2) == 16);
  CHECK(!ver::verify(o, 1, 1).pass);
}

TEST_CASE("verify normalizes reversed arguments") {
  auto o = red::checkerboard(1, 3);
  CHECK(ver::verify(o, 2, 1).pass);
}
