#pragma once

#include <map>
#include <set>
#include <vector>

#include "hco/orientation.hpp"

namespace hco::ver {

// Exhaustive enumeration of all 2^(n*2^(n-1)) orientations, n <= 3.  Keys
// are the achieved in-degree supports of size <= 2 (ascending); values are
// the count profiles seen for that support (counts aligned with the key).
using ProfileMap = std::map<std::vector<int>, std::set<std::vector<std::uint64_t>>>;

ProfileMap oracle_profiles(int n);

}  // namespace hco::ver
