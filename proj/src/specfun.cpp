#include "casimir/specfun.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::specfun {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// exp(x) overflows past this; 1/(exp(x)-1) is then exactly zero in double.
constexpr double kExpCutoff = 709.0;

// Sums term(1), term(2), ... with the two-consecutive-small-terms rule.
// A term that is exactly zero ends the sum: every series routed through
// here has terms that stay zero once they underflow.
template <class Term>
double sum_series(Term&& term, const SeriesControl& ctl, const char* what) {
  double sum = 0.0;
  int small = 0;
  for (int n = 1; n <= ctl.max_terms; ++n) {
    const double t = term(n);
    sum += t;
    if (t == 0.0) return sum;
    if (std::abs(t) < ctl.rel_tol * std::abs(sum)) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw ConvergenceError(std::string(what) + ": no convergence within " +
                         std::to_string(ctl.max_terms) + " terms");
}

double inv_expm1(double x) { return x > kExpCutoff ? 0.0 : 1.0 / std::expm1(x); }

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": argument must be > 0");
}

// Li_r(e^mu) for r >= 2 and mu = ln y close to zero, from the expansion
//   mu^{r-1}/(r-1)! [H_{r-1} - ln(-mu)] + sum_{k != r-1} zeta(r-k) mu^k / k!
// which converges like (mu / 2 pi)^k. Only odd negative zeta values survive
// beyond k = r, and those follow from zeta at even positive integers.
double polylog_near_one(int r, double y, const SeriesControl& ctl) {
  const double mu = std::log(y);
  double head = 0.0;
  double pow_over_fact = 1.0;  // mu^k / k!
  for (int k = 0; k <= r - 2; ++k) {
    head += zeta(r - k, ctl) * pow_over_fact;
    pow_over_fact *= mu / (k + 1);
  }
  // pow_over_fact is now mu^{r-1} / (r-1)!
  double harmonic = 0.0;
  for (int j = 1; j < r; ++j) harmonic += 1.0 / j;
  head += pow_over_fact * (harmonic - std::log(-mu));
  // k = r: zeta(0) = -1/2
  head -= 0.5 * pow_over_fact * mu / r;

  const double q = (mu / kTwoPi) * (mu / kTwoPi);
  // coeff_m = (-1)^m 2 (2m-1)! / (r-1+2m)! * q^m, so that the k = r-1+2m
  // term equals coeff_m * zeta(2m) * mu^{r-1}
  double inv_fact = 1.0;
  for (int j = 2; j <= r + 1; ++j) inv_fact /= j;
  double coeff = -2.0 * inv_fact * q;
  const double mu_pow = std::pow(mu, r - 1);
  int m = 1;
  const double tail = sum_series(
      [&](int) {
        const double t = coeff * zeta(2 * m, ctl) * mu_pow;
        coeff *= -(2.0 * m) * (2.0 * m + 1.0) / ((r + 2.0 * m) * (r + 2.0 * m + 1.0)) * q;
        ++m;
        return t;
      },
      ctl, "polylog");
  return head + tail;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be > 0");
  if (max_terms < 50) throw DomainError("SeriesControl: max_terms must be >= 50");
}

double zeta(int r, const SeriesControl& ctl) {
  if (r < 2) throw DomainError("zeta: order must be >= 2");
  if (r == 3) return kZeta3;
  ctl.validate();
  // Explicit head up to N-1, Euler-Maclaurin tail from N on.
  constexpr int N = 16;
  double head = 0.0;
  for (int n = N - 1; n >= 1; --n) head += std::pow(static_cast<double>(n), -r);
  const double nd = N;
  double tail = std::pow(nd, 1 - r) / (r - 1) + 0.5 * std::pow(nd, -r);
  // B_{2k} / (2k)!
  static constexpr double kBernoulliOverFact[] = {
      1.0 / 12.0,          -1.0 / 720.0,           1.0 / 30240.0,
      -1.0 / 1209600.0,    1.0 / 47900160.0,       -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
  };
  // rising = r (r+1) ... (r+2k-2), power = N^{-r-2k+1}
  double rising = r;
  double power = std::pow(nd, -r - 1);
  for (std::size_t k = 0; k < std::size(kBernoulliOverFact); ++k) {
    const double t = kBernoulliOverFact[k] * rising * power;
    tail += t;
    if (std::abs(t) < ctl.rel_tol * head) return head + tail;
    rising *= (r + 2.0 * k + 1.0) * (r + 2.0 * k + 2.0);
    power /= nd * nd;
  }
  throw ConvergenceError("zeta: Euler-Maclaurin tail did not converge");
}

double polylog(int r, double y, const SeriesControl& ctl) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("polylog: y must lie in [0, 1]");
  if (r <= 1 && y == 1.0) throw DomainError("polylog: diverges at y = 1 for order <= 1");
  ctl.validate();
  if (y == 0.0) return 0.0;
  if (r == 1) return -std::log1p(-y);
  if (r == 0) return y / (1.0 - y);
  if (y == 1.0) return zeta(r, ctl);
  if (r >= 2 && y > 0.5) return polylog_near_one(r, y, ctl);

  double y_pow = 1.0;
  return sum_series(
      [&](int n) {
        y_pow *= y;
        return y_pow * std::pow(static_cast<double>(n), -r);
      },
      ctl, "polylog");
}

double bose_sum(int r, double x, const SeriesControl& ctl) {
  require_positive(x, "bose_sum");
  ctl.validate();
  return sum_series(
      [&](int n) { return inv_expm1(n * x) * std::pow(static_cast<double>(n), -r); }, ctl,
      "bose_sum");
}

double kfun(double x, const SeriesControl& ctl) {
  require_positive(x, "kfun");
  ctl.validate();
  return sum_series(
      [&](int n) {
        const double nx = n * x;
        const double u = inv_expm1(nx);
        const double n3 = static_cast<double>(n) * n * n;
        return ((1.0 + nx) * u + nx * u * u) / n3;
      },
      ctl, "kfun");
}

double hfun(double x, const SeriesControl& ctl) {
  require_positive(x, "hfun");
  ctl.validate();
  const double sum = sum_series(
      [&](int n) {
        const double u = inv_expm1(n * x);
        return u * (1.0 + u * (3.0 + 2.0 * u)) / n;
      },
      ctl, "hfun");
  return -x * x * sum;
}

double polylog_moment_antiderivative(int s, int r, double z, const SeriesControl& ctl) {
  if (s < 0) throw DomainError("polylog_moment_antiderivative: s must be >= 0");
  require_positive(z, "polylog_moment_antiderivative");
  const double y = std::exp(-z);
  if (y == 0.0) return 0.0;
  // z^{s-n}/(s-n)! for n = s, s-1, ..., 0 built upward from 1
  double acc = 0.0;
  double z_pow_over_fact = 1.0;
  for (int n = s; n >= 0; --n) {
    acc += z_pow_over_fact * polylog(r + n + 1, y, ctl);
    z_pow_over_fact *= z / (s - n + 1);
  }
  return -std::tgamma(s + 1.0) * acc;
}

}  // namespace casimir::specfun
