#include <doctest.h>

#include <set>
#include <string>

#include "hco/feasibility.hpp"
#include "hco/kernels.hpp"
#include "hco/reductions.hpp"
#include "hco/verify.hpp"

using namespace hco;
using red::ReductionStep;

namespace {

std::vector<std::string> plan_strings(int a, int b, int n) {
  std::vector<std::string> out;
  for (const auto& s : red::plan(a, b, n).steps) out.push_back(s.to_string());
  return out;
}

}  // namespace

TEST_CASE("plans for the pinned examples") {
  CHECK(plan_strings(2, 4, 6) ==
        std::vector<std::string>{"checkerboard(2) -> [2,4]_6"});
  CHECK(plan_strings(1, 3, 3) == std::vector<std::string>{"primitive -> [1,3]_3"});
  CHECK(plan_strings(1, 5, 8) ==
        std::vector<std::string>{"primitive -> [1,3]_3", "blow-up(2) -> [2,6]_6",
                                 "lift+2 -> [3,7]_8", "reverse -> [1,5]_8"});
  CHECK(plan_strings(0, 1, 1) ==
        std::vector<std::string>{"checkerboard(0) -> [0,1]_1"});
  CHECK(plan_strings(2, 2, 4) ==
        std::vector<std::string>{"balanced-euler -> [2,2]_4"});
  CHECK(plan_strings(1, 2, 4) ==  // s = 0, degenerate
        std::vector<std::string>{"balanced-euler -> [1,2]_4"});
  CHECK(plan_strings(8, 16, 20) ==
        std::vector<std::string>{"primitive -> [1,3]_3", "blow-up(4) -> [4,12]_12",
                                 "lift+2 -> [5,13]_14", "lift+2 -> [6,14]_16",
                                 "lift+2 -> [7,15]_18", "lift+2 -> [8,16]_20"});
  CHECK(plan_strings(9, 11, 20) ==
        std::vector<std::string>{"checkerboard(9) -> [9,11]_20"});
}

TEST_CASE("plan rejects infeasible specs") {
  CHECK_THROWS_AS(red::plan(0, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(red::plan(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(red::construct(0, 3, 4), std::invalid_argument);
}

TEST_CASE("plan normalizes a > b") {
  CHECK(plan_strings(4, 2, 6) == plan_strings(2, 4, 6));
}

TEST_CASE("every feasible spec to n=10 constructs and verifies exactly") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& f : feas::enumerate_feasible(n)) {
      auto o = red::construct(f.a, f.b, n);
      auto r = ver::verify(o, f.a, f.b);
      REQUIRE_MESSAGE(r.pass, "[", f.a, ",", f.b, "]_", n, ": ", r.reason);
      CHECK(feas::BigInt(r.histogram.at(f.a)) == f.s);
      CHECK(feas::BigInt(r.histogram.at(f.b)) == f.t);
    }
}

TEST_CASE("degenerate and balanced specs construct via the Euler route") {
  auto o = red::construct(2, 2, 4);
  auto h = in_degrees(o);
  CHECK(h.to_string() == "{2:16}");

  auto o2 = red::construct(1, 2, 4);  // degenerate: every vertex lands on b
  auto h2 = in_degrees(o2);
  CHECK(h2.to_string() == "{2:16}");
  CHECK(ver::verify(o2, 1, 2).pass);

  auto o3 = red::construct(1, 1, 2);
  CHECK(in_degrees(o3).to_string() == "{1:4}");

  auto o6 = red::construct(3, 3, 6);
  CHECK(in_degrees(o6).to_string() == "{3:64}");
}

TEST_CASE("transformation wrappers enforce the two-valued precondition") {
  Orientation bad(3);  // all-zero orientation has support {0,1,2,3}
  CHECK_THROWS_AS(red::lift_plus_two(bad), std::invalid_argument);
  CHECK_THROWS_AS(red::blow_up(bad, 2), std::invalid_argument);

  Orientation good(3);
  kern::fill_checkerboard_serial(good, 1);
  auto lifted = red::lift_plus_two(good);
  CHECK(ver::verify(lifted, 2, 3).pass);
  auto blown = red::blow_up(good, 2);
  CHECK(ver::verify(blown, 2, 4).pass);
  auto rev = red::reverse(good);
  CHECK(ver::verify(rev, 1, 2).pass);
}

TEST_CASE("checkerboard wrapper matches the table row") {
  auto o = red::checkerboard(1, 3);
  CHECK(ver::verify(o, 1, 2).pass);
  CHECK(in_degrees(o).to_string() == "{1:4, 2:4}");
}

TEST_CASE("plan terminals over odd n <= 15 are the known primitive list") {
  std::set<std::pair<int, int>> seen;
  for (int n = 1; n <= 15; n += 2)
    for (const auto& f : feas::enumerate_feasible(n)) {
      auto p = red::plan(f.a, f.b, n);
      const auto& first = p.steps.front();
      if (first.kind == ReductionStep::Kind::Primitive)
        seen.insert({first.a, first.n});
    }
  // [0,1]_1 reduces through checkerboard(0) instead; the rest appear.
  CHECK(seen == std::set<std::pair<int, int>>{{1, 3},
                                              {1, 5},
                                              {3, 7},
                                              {1, 9},
                                              {3, 11},
                                              {5, 13},
                                              {7, 15}});
}
