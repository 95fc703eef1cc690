#pragma once

#include <cmath>
#include <stdexcept>

namespace repsel {

struct RootResult {
  double x;
  int iterations;
  double residual;
};

/// Bracketed root finding: bisection with safeguarded secant refinement.
/// Requires f(lo) and f(hi) of opposite sign (or an exact zero at an end).
/// Secant steps are interleaved with plain bisection so the bracket width
/// still halves at least every other iteration; converges to
/// |hi - lo| < x_tol.
template <typename F>
RootResult find_root(F&& f, double lo, double hi, double x_tol, int max_iter = 300) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0, 0.0};
  if (fhi == 0.0) return {hi, 0, 0.0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw std::runtime_error("find_root: interval does not bracket a root");
  }
  for (int it = 1; it <= max_iter; ++it) {
    double x = 0.5 * (lo + hi);
    if (it % 2 == 1) {
      // Secant through the bracket ends; keep only candidates that stay
      // strictly inside the bracket.
      const double denom = fhi - flo;
      if (denom != 0.0) {
        const double sec = lo - flo * (hi - lo) / denom;
        if (sec > lo && sec < hi) x = sec;
      }
    }
    const double fx = f(x);
    if (fx == 0.0) return {x, it, 0.0};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo < x_tol) {
      const double mid = 0.5 * (lo + hi);
      return {mid, it, f(mid)};
    }
  }
  const double mid = 0.5 * (lo + hi);
  return {mid, max_iter, f(mid)};
}

}  // namespace repsel
