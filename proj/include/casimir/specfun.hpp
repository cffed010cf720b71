#pragma once

// Polylogarithm of integer order on [0, 1] and the Bose sums built on it.
//
// Every series here is summed until the current term drops below
// rel_tol * |partial sum| on two consecutive terms. Running out of
// max_terms first raises ConvergenceError instead of returning a
// silently truncated value.

#include <numbers>

namespace casimir::specfun {

struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 10000;

  /// Throws DomainError unless rel_tol > 0 and max_terms >= 50.
  void validate() const;
};

inline constexpr double kZeta3 = 1.2020569031595942853997381615114;

/// Riemann zeta at integer r >= 2.
double zeta(int r, const SeriesControl& ctl = {});

/// Li_r(y) = sum_{n>=1} y^n / n^r for 0 <= y <= 1 (y < 1 when r <= 1).
double polylog(int r, double y, const SeriesControl& ctl = {});

/// sum_{n>=1} n^{-r} / (exp(n x) - 1), equal to sum_{n>=1} Li_r(exp(-n x)).
double bose_sum(int r, double x, const SeriesControl& ctl = {});

/// j(x) = bose_sum(3, x).
inline double jfun(double x, const SeriesControl& ctl = {}) { return bose_sum(3, x, ctl); }

/// k(x) = (1 - x d/dx) j(x), strictly positive on x > 0.
double kfun(double x, const SeriesControl& ctl = {});

/// h(x) = x k'(x), strictly negative on x > 0.
double hfun(double x, const SeriesControl& ctl = {});

/// Antiderivative of z^s Li_r(exp(-z)) obtained by repeated partial integration:
///   -s! sum_{n=0}^{s} z^{s-n}/(s-n)! Li_{r+n+1}(exp(-z)).
/// It vanishes as z -> infinity.
double polylog_moment_antiderivative(int s, int r, double z, const SeriesControl& ctl = {});

}  // namespace casimir::specfun
