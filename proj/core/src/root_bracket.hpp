#pragma once

#include <cmath>
#include <sstream>

#include "ulb/error.hpp"

namespace ulb::detail {

inline bool opposite_signs(double x, double y) {
  return (x < 0.0 && y > 0.0) || (x > 0.0 && y < 0.0);
}

/// Root of f in [lo, hi] given a sign change: bisection to width
/// bisect_width, then Newton polish while the iterate stays in the bracket.
template <class F, class DF>
double bracketed_root(F&& f, DF&& df, double lo, double hi,
                      double bisect_width = 1e-8) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!opposite_signs(flo, fhi)) {
    std::ostringstream os;
    os << "no sign change in bracket [" << lo << ", " << hi << "]: f(lo)="
       << flo << ", f(hi)=" << fhi;
    throw ConvergenceError(os.str());
  }
  for (int it = 0; it < 200 && hi - lo > bisect_width; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (opposite_signs(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double fx = f(x);
    const double dfx = df(x);
    if (fx == 0.0) return x;
    if (dfx == 0.0 || !std::isfinite(dfx)) break;
    const double step = fx / dfx;
    const double next = x - step;
    if (next < lo || next > hi) break;
    x = next;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) return x;
  }
  // Newton left the bracket or stalled: finish by bisection.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (opposite_signs(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ulb::detail
