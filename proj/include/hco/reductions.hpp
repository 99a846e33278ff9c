#pragma once

#include <string>
#include <vector>

#include "hco/feasibility.hpp"
#include "hco/orientation.hpp"

namespace hco::red {

// One constructive step.  A plan lists steps from the terminal construction
// (Primitive / Checkerboard / BalancedEuler) outward to the target, each
// annotated with the (a, b, n) it produces.
struct ReductionStep {
  enum Kind { BalancedEuler, Checkerboard, Reverse, LiftPlusTwo, BlowUp, Primitive };
  Kind kind;
  int a, b, n;     // spec produced by this step
  int arg = 0;     // Checkerboard: a; BlowUp: factor; otherwise unused
  std::string to_string() const;
};

struct ReductionPlan {
  int a, b, n;  // target spec
  std::vector<ReductionStep> steps;  // execution order, terminal step first
};

// Single transformations.
Orientation reverse(const Orientation& o);
Orientation checkerboard(int a, int n);
Orientation lift_plus_two(const Orientation& o);
Orientation blow_up(const Orientation& o, int factor);
Orientation balanced_euler(int n);  // n even

// Deterministic reduction chain for a feasible (a, b, n); throws on
// infeasible input.
ReductionPlan plan(int a, int b, int n);

// Executes plan(a, b, n); the result's histogram is exactly {a:s, b:t}.
Orientation construct(int a, int b, int n);

}  // namespace hco::red
