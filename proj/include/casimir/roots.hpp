#pragma once

// One-dimensional bracketed solvers shared by the equilibrium code.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "casimir/errors.hpp"

namespace casimir::roots {

struct RootOptions {
  double abs_tol = 1e-12;
  int max_iter = 200;
};

/// Root of f in [lo, hi] where f(lo) and f(hi) differ in sign.
///
/// Secant (false position) steps inside the bracket; any step that fails to
/// halve the bracket is followed by a bisection step, so the bracket width
/// shrinks at least as fast as plain bisection every two iterations.
/// Returns whichever bracket end has the smaller |f| once the width is
/// below abs_tol.
template <class F>
double find_root(F&& f, double lo, double hi, const RootOptions& opt = {}) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw ConvergenceError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  bool force_bisect = false;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    const double width = hi - lo;
    if (width <= opt.abs_tol) return std::abs(flo) < std::abs(fhi) ? lo : hi;

    double x = lo - flo * width / (fhi - flo);
    if (force_bisect || !(x > lo && x < hi)) x = lo + 0.5 * width;
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    force_bisect = !force_bisect && (hi - lo) > 0.5 * width;
  }
  throw ConvergenceError("find_root: bracket width above tolerance after " +
                         std::to_string(opt.max_iter) + " iterations");
}

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Returns (argmax, max).
template <class F>
std::pair<double, double> find_maximum(F&& f, double lo, double hi, double abs_tol = 1e-10,
                                       int max_iter = 500) {
  constexpr double kInvPhi = std::numbers::phi - 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < max_iter && hi - lo > abs_tol; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace casimir::roots
