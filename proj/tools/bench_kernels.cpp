// Timing harness: serial reference kernels vs the OpenMP versions.
// Also asserts the two produce bit-identical output, word for word.
#include <chrono>
#include <cstdio>
#include <vector>

#include "hco/kernels.hpp"
#include "hco/orientation.hpp"
#include "hco/reductions.hpp"

using namespace hco;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void row(const char* name, double serial, double omp) {
  std::printf("%-14s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, omp * 1e3,
              serial / omp);
}

bool same(const Orientation& x, const Orientation& y) { return x == y; }

}  // namespace

int main() {
  const int n = 20;
  const int reps = 5;
  std::printf("n=%d: %llu vertices, %llu edges\n", n,
              (unsigned long long)vertex_count(n), (unsigned long long)edge_count(n));
  std::printf("%-14s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  Orientation a(n), b(n);
  double ts, tp;

  ts = time_best_of(reps, [&] { kern::fill_checkerboard_serial(a, 9); });
  tp = time_best_of(reps, [&] { kern::fill_checkerboard_omp(b, 9); });
  if (!same(a, b)) { std::fprintf(stderr, "checkerboard outputs differ\n"); return 1; }
  row("checkerboard", ts, tp);

  std::vector<std::uint8_t> d1(vertex_count(n)), d2(vertex_count(n));
  ts = time_best_of(reps, [&] { kern::indegree_serial(a, d1.data()); });
  tp = time_best_of(reps, [&] { kern::indegree_omp(a, d2.data()); });
  if (d1 != d2) { std::fprintf(stderr, "indegree outputs differ\n"); return 1; }
  row("indegree", ts, tp);

  ts = time_best_of(reps, [&] { kern::reverse_serial(a); });
  tp = time_best_of(reps, [&] { kern::reverse_omp(b); });
  if (!same(a, b)) { std::fprintf(stderr, "reverse outputs differ\n"); return 1; }
  row("reverse", ts, tp);

  Orientation small = red::construct(8, 10, 18);
  Orientation l1(n), l2(n);
  ts = time_best_of(reps, [&] { kern::fill_lift_serial(small, l1); });
  tp = time_best_of(reps, [&] { kern::fill_lift_omp(small, l2); });
  if (!same(l1, l2)) { std::fprintf(stderr, "lift outputs differ\n"); return 1; }
  row("lift", ts, tp);

  Orientation seed = red::construct(4, 6, 10);
  Orientation b1(n), b2(n);
  ts = time_best_of(reps, [&] { kern::fill_blowup_serial(seed, 2, b1); });
  tp = time_best_of(reps, [&] { kern::fill_blowup_omp(seed, 2, b2); });
  if (!same(b1, b2)) { std::fprintf(stderr, "blowup outputs differ\n"); return 1; }
  row("blowup", ts, tp);

  return 0;
}
