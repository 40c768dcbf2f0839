#pragma once

#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcb {

// Execution policy for the data-parallel kernels. Every kernel has a plain
// serial path (the reference) and an OpenMP path. Parallel loops only write
// per-iteration outputs and keep all floating-point reductions in a fixed
// order, so both paths produce bitwise-identical results for any thread
// count.
enum class Exec { serial, parallel };

template <typename F>
void parallel_for(Exec exec, std::int64_t n, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Neumaier compensated accumulator, used where summands span many orders of
// magnitude (Gaussian tails, log-likelihoods).
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace pcb
