#include "hco/reductions.hpp"

#include <numeric>
#include <sstream>

#include "hco/euler.hpp"
#include "hco/kernels.hpp"
#include "hco/primitive.hpp"

namespace hco::red {

namespace {

// Transformations accept any orientation whose in-degrees take at most two
// values; that is all they need and all their callers guarantee.
void require_two_valued(const Orientation& o, const char* who) {
  auto support = in_degrees(o).support();
  if (support.size() > 2)
    throw std::invalid_argument(std::string(who) + ": input has more than two in-degrees");
}

}  // namespace

Orientation reverse(const Orientation& o) {
  Orientation out = o;
  kern::reverse_omp(out);
  return out;
}

Orientation checkerboard(int a, int n) {
  check_dim(n);
  Orientation o(n);
  kern::fill_checkerboard_omp(o, a);
  return o;
}

Orientation lift_plus_two(const Orientation& o) {
  check_dim(o.dim() + 2);
  require_two_valued(o, "lift_plus_two");
  Orientation out(o.dim() + 2);
  kern::fill_lift_omp(o, out);
  return out;
}

Orientation blow_up(const Orientation& o, int factor) {
  require(factor >= 1, "blow-up factor must be positive");
  check_dim(o.dim() * factor);
  require_two_valued(o, "blow_up");
  Orientation out(o.dim() * factor);
  kern::fill_blowup_omp(o, factor, out);
  return out;
}

Orientation balanced_euler(int n) {
  check_dim(n);
  require(n % 2 == 0, "balanced orientation needs even dimension");
  eul::EvenGraph g(vertex_count(n));
  EdgeCursor c(n, 0);
  for (EdgeIndex j = 0; j < edge_count(n); ++j, c.advance())
    g.add_edge(c.v, c.v | Vertex{1} << c.i);  // edge id j = canonical index
  auto oriented = eul::euler_orient(g);
  Orientation o(n);
  EdgeCursor c2(n, 0);
  for (EdgeIndex j = 0; j < edge_count(n); ++j, c2.advance())
    o.set_bit(j, oriented[j].second != c2.v);
  return o;
}

std::string ReductionStep::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case BalancedEuler: out << "balanced-euler"; break;
    case Checkerboard: out << "checkerboard(" << arg << ")"; break;
    case Reverse: out << "reverse"; break;
    case LiftPlusTwo: out << "lift+2"; break;
    case BlowUp: out << "blow-up(" << arg << ")"; break;
    case Primitive: out << "primitive"; break;
  }
  out << " -> [" << a << "," << b << "]_" << n;
  return out.str();
}

ReductionPlan plan(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  auto counts = feas::solve_counts(a, b, n);
  if (!counts) throw std::invalid_argument("no orientation realizes this spec");
  check_dim(n);

  ReductionPlan p{a, b, n, {}};
  if (a == b || counts->degenerate) {
    p.steps.push_back({ReductionStep::BalancedEuler, a, b, n, 0});
  } else if (a + b == n) {
    p.steps.push_back({ReductionStep::Checkerboard, a, b, n, a});
  } else if (a + b < n) {
    p = plan(n - b, n - a, n);
    p.steps.push_back({ReductionStep::Reverse, a, b, n, 0});
  } else if (b < n) {
    p = plan(a - 1, b - 1, n - 2);
    p.steps.push_back({ReductionStep::LiftPlusTwo, a, b, n, 0});
  } else if (int g = std::gcd(a, n); g > 1) {
    p = plan(a / g, n / g, n / g);
    p.steps.push_back({ReductionStep::BlowUp, a, b, n, g});
  } else {
    check_internal(feas::classify_primitive(a, b, n).has_value(),
                   "planner reached a non-primitive terminal");
    p.steps.push_back({ReductionStep::Primitive, a, b, n, 0});
  }
  p.a = a;
  p.b = b;
  p.n = n;
  return p;
}

Orientation construct(int a, int b, int n) {
  ReductionPlan pl = plan(a, b, n);
  std::optional<Orientation> o;
  for (const ReductionStep& step : pl.steps) {
    switch (step.kind) {
      case ReductionStep::BalancedEuler:
        o = balanced_euler(step.n);
        break;
      case ReductionStep::Checkerboard:
        o = checkerboard(step.arg, step.n);
        break;
      case ReductionStep::Primitive:
        o = prim::construct_primitive(*feas::classify_primitive(step.a, step.b, step.n));
        break;
      case ReductionStep::Reverse:
        o = reverse(*o);
        break;
      case ReductionStep::LiftPlusTwo:
        o = lift_plus_two(*o);
        break;
      case ReductionStep::BlowUp:
        o = blow_up(*o, step.arg);
        break;
    }
    check_internal(o->dim() == step.n, "plan step produced the wrong dimension");
  }
  return std::move(*o);
}

}  // namespace hco::red
