#include <doctest.h>

#include <stdexcept>

#include "hco/feasibility.hpp"
#include "hco/oracle.hpp"

using namespace hco;

// The brute-force map over every orientation must land on exactly the pairs
// the counting equations declare feasible, with the predicted counts -- and
// on nothing else with a small support.
static void cross_check(int n) {
  auto profiles = ver::oracle_profiles(n);

  ver::ProfileMap expected;
  for (const auto& p : feas::enumerate_feasible(n)) {
    expected[{p.a, p.b}].insert(
        {p.s.convert_to<std::uint64_t>(), p.t.convert_to<std::uint64_t>()});
  }
  if (n % 2 == 0)  // the single-valued support: everything balanced at n/2
    expected[{n / 2}].insert({std::uint64_t{1} << n});

  CHECK(profiles == expected);
}

TEST_CASE("exhaustive profiles match the counting equations") {
  cross_check(1);
  cross_check(2);
  cross_check(3);
}

TEST_CASE("profile details at n = 3") {
  auto profiles = ver::oracle_profiles(3);
  REQUIRE(profiles.size() == 4);
  using Key = std::vector<int>;
  CHECK(profiles.at(Key{0, 2}).count({2, 6}) == 1);
  CHECK(profiles.at(Key{0, 3}).count({4, 4}) == 1);
  CHECK(profiles.at(Key{1, 2}).count({4, 4}) == 1);
  CHECK(profiles.at(Key{1, 3}).count({6, 2}) == 1);
  for (const auto& [support, seen] : profiles)
    CHECK(seen.size() == 1);  // counts are forced once the support is fixed
}

TEST_CASE("the enumeration stops at n = 3") {
  CHECK_THROWS_AS(ver::oracle_profiles(4), std::invalid_argument);
  CHECK_THROWS_AS(ver::oracle_profiles(0), std::invalid_argument);
}
