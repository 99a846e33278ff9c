#include "hco/verify.hpp"

#include <sstream>

#include "hco/feasibility.hpp"

namespace hco::ver {

Report verify(const Orientation& o, int a, int b) {
  if (a > b) std::swap(a, b);
  const int n = o.dim();
  Report r;
  auto table = in_degree_table(o);
  r.histogram = histogram_of(table, n);

  if (a < 0 || b > n) {
    r.reason = "in-degrees out of range for this dimension";
    return r;
  }
  auto counts = feas::solve_counts_small(a, b, n);
  if (!counts) {
    r.reason = "spec fails the counting equations";
    return r;
  }
  for (std::uint64_t v = 0; v < table.size(); ++v) {
    if (table[v] != a && table[v] != b) {
      r.first_offender = Vertex(v);
      std::ostringstream msg;
      msg << "vertex " << v << " has in-degree " << int(table[v])
          << ", outside {" << a << "," << b << "}";
      r.reason = msg.str();
      return r;
    }
  }
  const std::uint64_t at_a = r.histogram.at(a);
  const std::uint64_t want_a = a == b ? counts->s + counts->t : counts->s;
  if (at_a != want_a) {
    std::ostringstream msg;
    msg << "count mismatch: " << at_a << " vertices of in-degree " << a
        << ", expected " << want_a;
    r.reason = msg.str();
    return r;
  }
  r.pass = true;
  return r;
}

}  // namespace hco::ver
