#pragma once

#include <cmath>
#include <concepts>

namespace graywyner {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

// Golden-section search for the maximum of a unimodal function on [lo, hi].
//
// The bracket is shrunk until its width is below `tolerance`; the returned
// point is the best of the final interior probe and the two original
// endpoints, so a maximum sitting on the boundary is reported exactly.
// A degenerate interval (hi <= lo) evaluates f at hi only.
template <typename F>
  requires std::invocable<F&, double>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tolerance,
                                      int max_iterations = 500) {
  if (!(hi > lo)) return {hi, f(hi), 0};

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while ((b - a) > tolerance && it < max_iterations) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }

  ScalarOptimum best = fc >= fd ? ScalarOptimum{c, fc, it} : ScalarOptimum{d, fd, it};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe > best.value) best = {edge, fe, it};
  }
  return best;
}

}  // namespace graywyner
