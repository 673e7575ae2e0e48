#pragma once

#include <cmath>
#include <string>

#include "coulomb/error.hpp"

namespace coulomb {

struct BisectionResult {
  double root;
  double lo;
  double hi;
  int iterations;
};

inline constexpr int kMaxBisections = 80;

// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs. Stops
// when the bracket is narrower than `tol` or after `max_iter` halvings.
// Only the sign of f is used, so f may return +-inf near poles.
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double tol, int max_iter = kMaxBisections) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, lo, lo, 0};
  if (f_hi == 0.0) return {hi, hi, hi, 0};
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw NumericalError("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] does not straddle a sign change");
  }
  int it = 0;
  while (hi - lo > tol && it < max_iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    ++it;
    if (f_mid == 0.0) return {mid, mid, mid, it};
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {lo + 0.5 * (hi - lo), lo, hi, it};
}

}  // namespace coulomb
