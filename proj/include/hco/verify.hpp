#pragma once

#include <optional>
#include <string>

#include "hco/orientation.hpp"

namespace hco::ver {

// Independent check that an orientation realizes [a,b]_n: reads only the bit
// stream, recounts in-degrees, and compares support and exact counts against
// the two defining equations.
struct Report {
  bool pass = false;
  DegreeHistogram histogram;
  std::optional<Vertex> first_offender;  // first vertex outside {a,b}
  std::string reason;                    // empty on pass
};

Report verify(const Orientation& o, int a, int b);

}  // namespace hco::ver
