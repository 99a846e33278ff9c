#pragma once

#include <cstdint>

#include "hco/orientation.hpp"

namespace hco::kern {

// Edge-parallel kernels.  Each has a serial reference implementation and an
// OpenMP variant; results are bit-identical.  The *_omp entry points fall back
// to the serial code when built without OpenMP.

void indegree_serial(const Orientation& o, std::uint8_t* out);
void indegree_omp(const Orientation& o, std::uint8_t* out);

// Checkerboard fill: the head of edge (v, i) is the even-parity endpoint iff
// i+1 <= a.  Even vertices end with in-degree a, odd with n-a.
void fill_checkerboard_serial(Orientation& o, int a);
void fill_checkerboard_omp(Orientation& o, int a);

void reverse_serial(Orientation& o);
void reverse_omp(Orientation& o);

// out has dim in.dim()+2; the two new top coordinates carry directed
// 4-cycles, the rest copy `in` within each of the four slices.
void fill_lift_serial(const Orientation& in, Orientation& out);
void fill_lift_omp(const Orientation& in, Orientation& out);

// out has dim factor*in.dim(); coordinate blocks of `factor` bits map to one
// source coordinate via block parity.
void fill_blowup_serial(const Orientation& in, int factor, Orientation& out);
void fill_blowup_omp(const Orientation& in, int factor, Orientation& out);

}  // namespace hco::kern
