#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"
#include "oracles.hpp"

using namespace casimir;
using namespace casimir::specfun;
namespace ct = casimir::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values from a 40-digit evaluation, cross-checked below against
// the in-test oracles.
constexpr double kLi2At0p3 = 0.32612951007547606953;
constexpr double kLi2At0p99 = 1.5886254480763753270;
constexpr double kLi3At0p75 = 0.84442580886220444850;
constexpr double kLi4At0p9 = 0.96400537120407803368;
constexpr double kBose1At1 = 0.68432886697688703518;
constexpr double kBose3At0p5 = 1.6284376837177450719;
constexpr double kKAt1 = 1.5774533554827869942;
constexpr double kKAt0p5 = 3.7318969292859436711;
constexpr double kHAt0p8 = -2.6884544050938071188;
constexpr double kHAt1 = -2.1383646770305494817;

TEST(Polylog, ZetaThreeAtOne) {
  EXPECT_NEAR(polylog(3, 1.0), 1.2020569, 1e-7);
  EXPECT_DOUBLE_EQ(polylog(3, 1.0), kZeta3);
}

TEST(Polylog, ClosedForms) {
  EXPECT_NEAR(polylog(1, 0.5), std::log(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(polylog(0, 0.5), 1.0);
  EXPECT_NEAR(polylog(1, 0.9), -std::log(0.1), 1e-14);
}

TEST(Polylog, MatchesBruteForceEnclosure) {
  const auto [lo, hi] = ct::polylog_interval(2, 0.3, 200);
  const double value = polylog(2, 0.3);
  EXPECT_GE(value, lo - 1e-16);
  EXPECT_LE(value, hi + 1e-16);
  EXPECT_NEAR(value, kLi2At0p3, 1e-16);
}

TEST(Polylog, NearOneBranchAgainstOracle) {
  // y > 0.5 goes through the logarithmic expansion; the direct series
  // needs thousands of terms here, which the oracle can afford.
  for (auto [r, y, ref] : {std::tuple{2, 0.99, kLi2At0p99}, std::tuple{3, 0.75, kLi3At0p75},
                           std::tuple{4, 0.9, kLi4At0p9}}) {
    const auto [lo, hi] = ct::polylog_interval(r, y, 20000);
    EXPECT_NEAR(polylog(r, y), ref, 4e-16 * ref) << "r=" << r << " y=" << y;
    EXPECT_GE(ref, lo - 1e-15);
    EXPECT_LE(ref, hi + 1e-15);
  }
}

TEST(Polylog, ContinuousAcrossBranchSwitch) {
  for (int r = 2; r <= 7; ++r) {
    const double below = polylog(r, 0.5);
    const double above = polylog(r, std::nextafter(0.5, 1.0));
    EXPECT_NEAR(below, above, 1e-15) << "r=" << r;
  }
}

TEST(Polylog, ZetaValues) {
  EXPECT_NEAR(zeta(2), kPi * kPi / 6.0, 1e-15);
  EXPECT_NEAR(zeta(4), std::pow(kPi, 4) / 90.0, 1e-15);
  EXPECT_NEAR(zeta(6), std::pow(kPi, 6) / 945.0, 1e-15);
  EXPECT_NEAR(zeta(40), 1.0 + std::pow(2.0, -40), 1e-15);
  for (int r = 2; r <= 12; ++r) EXPECT_DOUBLE_EQ(polylog(r, 1.0), zeta(r));
  EXPECT_THROW(zeta(1), DomainError);
}

TEST(Polylog, DomainErrors) {
  EXPECT_THROW(polylog(2, -0.1), DomainError);
  EXPECT_THROW(polylog(2, 1.1), DomainError);
  EXPECT_THROW(polylog(2, std::nan("")), DomainError);
  EXPECT_THROW(polylog(1, 1.0), DomainError);
  EXPECT_THROW(polylog(0, 1.0), DomainError);
  EXPECT_THROW(polylog(-2, 1.0), DomainError);
}

TEST(Polylog, ConvergenceErrorWhenTermsRunOut) {
  // Li_{-3}(0.99) needs a few thousand terms.
  EXPECT_THROW(polylog(-3, 0.99, {1e-15, 50}), ConvergenceError);
  EXPECT_NO_THROW(polylog(-3, 0.99, {1e-15, 10000}));
}

TEST(SeriesControl, Validation) {
  EXPECT_THROW((SeriesControl{0.0, 100}.validate()), DomainError);
  EXPECT_THROW((SeriesControl{1e-12, 49}.validate()), DomainError);
  EXPECT_NO_THROW((SeriesControl{1e-12, 50}.validate()));
  EXPECT_THROW(polylog(2, 0.3, {1e-12, 10}), DomainError);
}

// A2: non-negative, vanishing at 0, zeta at 1.
TEST(PolylogProperty, BasicRelations) {
  for (int i = 0; i < 300; ++i) {
    const int r = ct::uniform_int(0, 8);
    const double y = ct::uniform(0.0, 0.999);
    EXPECT_GE(polylog(r, y), 0.0) << "r=" << r << " y=" << y;
    EXPECT_EQ(polylog(r, 0.0), 0.0);
  }
}

// A3: y d/dy Li_r(y) = Li_{r-1}(y).
TEST(PolylogProperty, DerivativeRecursion) {
  for (int r = 1; r <= 4; ++r) {
    for (double y : ct::linear_grid(0.06, 0.94, 45)) {
      const double lhs =
          y * ct::richardson_difference([r](double t) { return polylog(r, t); }, y);
      EXPECT_NEAR(lhs, polylog(r - 1, y), 1e-7) << "r=" << r << " y=" << y;
    }
  }
}

// A7 with s = 1, and its inverse A8.
TEST(PolylogProperty, ExponentialArgumentDerivativeAndIntegral) {
  for (int r = 1; r <= 5; ++r) {
    for (double z : {0.1, 0.4, 1.0, 2.5, 6.0}) {
      auto li_r = [r](double t) { return polylog(r, std::exp(-t)); };
      auto minus_li_next = [r](double t) { return -polylog(r + 1, std::exp(-t)); };
      EXPECT_NEAR(ct::richardson_difference(li_r, z), -polylog(r - 1, std::exp(-z)), 1e-7);
      EXPECT_NEAR(ct::richardson_difference(minus_li_next, z), li_r(z), 1e-8);
    }
  }
}

TEST(BoseSum, DirectSummation) {
  EXPECT_NEAR(bose_sum(1, 1.0), ct::direct_bose_sum(1, 1.0), 1e-15);
  EXPECT_NEAR(bose_sum(1, 1.0), 0.68433, 5e-6);
  EXPECT_NEAR(bose_sum(1, 1.0), kBose1At1, 2e-16);
  EXPECT_NEAR(jfun(0.5), kBose3At0p5, 4e-16);
}

TEST(BoseSum, LargeArgumentDecay) {
  for (int r : {-2, 0, 1, 3}) {
    for (double x : {30.0, 50.0, 200.0, 1000.0}) {
      const double value = bose_sum(r, x);
      EXPECT_LT(value, 1e-12);
      EXPECT_NEAR(value, std::exp(-x), 1e-3 * std::exp(-x) + 1e-300);
    }
  }
}

double first_form(int r, double x) {
  double sum = 0.0;
  for (int n = 1; n < 2000; ++n) {
    const double t = polylog(r, std::exp(-n * x));
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return sum;
}

TEST(BoseSum, EqualsSumOfPolylogs) {
  EXPECT_NEAR(bose_sum(3, 0.5), first_form(3, 0.5), 1e-12);
}

// A10 dual forms.
TEST(BoseSumProperty, DualFormsAgree) {
  for (int r = 1; r <= 3; ++r) {
    for (double x : ct::log_grid(0.5, 10.0, 25)) {
      EXPECT_NEAR(bose_sum(r, x), first_form(r, x), 1e-10) << "r=" << r << " x=" << x;
    }
  }
}

TEST(BoseSum, DomainErrors) {
  EXPECT_THROW(bose_sum(1, 0.0), DomainError);
  EXPECT_THROW(bose_sum(1, -1.0), DomainError);
  EXPECT_THROW(kfun(0.0), DomainError);
  EXPECT_THROW(hfun(-0.5), DomainError);
  EXPECT_THROW(kfun(std::nan("")), DomainError);
}

TEST(BoseSum, ConvergenceErrorAtTinyArgument) {
  // terms decay only once n x ~ 35, far past 10000 terms
  EXPECT_THROW(bose_sum(1, 1e-5), ConvergenceError);
}

TEST(KFun, DirectSummation) {
  EXPECT_NEAR(kfun(1.0), ct::direct_k(1.0), 1e-14);
  EXPECT_NEAR(kfun(1.0), 1.5775, 5e-5);
  EXPECT_NEAR(kfun(1.0), kKAt1, 4e-16);
  EXPECT_NEAR(kfun(0.5), kKAt0p5, 4e-15);
}

TEST(KFun, ExponentialDecay) {
  for (double x : {40.0, 60.0, 300.0, 800.0}) {
    EXPECT_LT(kfun(x), 1e-12);
    EXPECT_GE(kfun(x), 0.0);
  }
}

TEST(KFun, FiniteDifferenceOfJ) {
  const double x = 0.5;
  const double dj = ct::central_difference([](double t) { return bose_sum(3, t); }, x);
  EXPECT_NEAR(kfun(x), bose_sum(3, x) - x * dj, 1e-8);
}

TEST(HFun, DirectSummation) {
  EXPECT_NEAR(hfun(0.8), ct::direct_h(0.8), 1e-14);
  EXPECT_NEAR(hfun(0.8), kHAt0p8, 4e-15);
  EXPECT_NEAR(hfun(1.0), kHAt1, 4e-15);
}

TEST(HFun, ExponentialDecay) {
  for (double x : {40.0, 60.0, 300.0, 800.0}) {
    EXPECT_LT(std::abs(hfun(x)), 1e-12);
    EXPECT_LE(hfun(x), 0.0);
  }
}

TEST(HFun, FiniteDifferenceOfK) {
  const double x = 1.0;
  EXPECT_NEAR(hfun(x), x * ct::central_difference([](double t) { return kfun(t); }, x), 1e-8);
}

TEST(KHProperty, Signs) {
  for (double x : ct::log_grid(1e-3, 700.0, 120)) {
    EXPECT_GT(kfun(x), 0.0) << x;
    EXPECT_LT(hfun(x), 0.0) << x;
  }
}

// A12/A13 consistency on [0.3, 5].
TEST(KHProperty, DerivativeConsistency) {
  for (double x : ct::linear_grid(0.3, 5.0, 40)) {
    const double dj = ct::richardson_difference([](double t) { return bose_sum(3, t); }, x);
    const double dk = ct::richardson_difference([](double t) { return kfun(t); }, x);
    EXPECT_NEAR(kfun(x), bose_sum(3, x) - x * dj, 1e-7) << x;
    EXPECT_NEAR(hfun(x), x * dk, 1e-7) << x;
  }
}

TEST(SeriesProperty, MaxTermsDoesNotChangeConvergedResult) {
  for (double x : ct::log_grid(0.05, 50.0, 30)) {
    const SeriesControl small{1e-15, 2000};
    const SeriesControl large{1e-15, 200000};
    EXPECT_EQ(kfun(x, small), kfun(x, large));
    EXPECT_EQ(hfun(x, small), hfun(x, large));
    EXPECT_EQ(bose_sum(2, x, small), bose_sum(2, x, large));
  }
  for (double y : ct::linear_grid(0.01, 0.99, 30)) {
    EXPECT_EQ(polylog(2, y, {1e-15, 100}), polylog(2, y, {1e-15, 100000}));
  }
}

TEST(SeriesProperty, LooserToleranceStaysWithinIt) {
  for (double x : ct::log_grid(0.1, 20.0, 20)) {
    const double tight = kfun(x);
    const double loose = kfun(x, {1e-9, 10000});
    EXPECT_NEAR(loose, tight, 1e-8 * tight) << x;
  }
}

TEST(MomentAntiderivative, ReducesToPolylogForZeroMoment) {
  for (int r : {-1, 0, 1, 2, 3})
    for (double z : {0.2, 1.0, 3.0})
      EXPECT_DOUBLE_EQ(polylog_moment_antiderivative(0, r, z), -polylog(r + 1, std::exp(-z)));
}

TEST(MomentAntiderivative, ImproperIntegralEqualsTwoZetaFour) {
  // F(infinity) = 0, so the integral over (0, inf) is -F(0+).
  const double upper = polylog_moment_antiderivative(2, 1, 800.0);
  const double lower = polylog_moment_antiderivative(2, 1, 1e-12);
  const double by_antiderivative = upper - lower;
  const double by_quadrature =
      ct::integrate_to_infinity(
          [](double z) {
            if (z <= 0.0 || std::exp(-z) == 0.0) return 0.0;
            return -z * z * std::log(-std::expm1(-z));
          },
          0.0);
  EXPECT_NEAR(by_antiderivative, std::pow(kPi, 4) / 45.0, 1e-8);
  EXPECT_NEAR(by_quadrature, std::pow(kPi, 4) / 45.0, 1e-10);
  EXPECT_NEAR(by_antiderivative, by_quadrature, 1e-8);
}

TEST(MomentAntiderivative, DefiniteIntegralsMatchQuadrature) {
  for (int s = 0; s <= 4; ++s) {
    for (int r : {0, 1, 2, 3}) {
      auto integrand = [s, r](double z) { return std::pow(z, s) * polylog(r, std::exp(-z)); };
      const double quad = ct::integrate(integrand, 0.5, 3.0);
      const double exact =
          polylog_moment_antiderivative(s, r, 3.0) - polylog_moment_antiderivative(s, r, 0.5);
      EXPECT_NEAR(exact, quad, 1e-10 * std::max(1.0, std::abs(quad))) << s << " " << r;
    }
  }
}

TEST(MomentAntiderivative, DerivativeRecoversIntegrand) {
  for (int s = 0; s <= 4; ++s) {
    for (int r : {1, 2, 3}) {
      auto f = [s, r](double z) { return polylog_moment_antiderivative(s, r, z); };
      EXPECT_NEAR(ct::central_difference(f, 1.0), polylog(r, std::exp(-1.0)), 1e-8)
          << s << " " << r;
    }
  }
}

TEST(MomentAntiderivative, DomainErrors) {
  EXPECT_THROW(polylog_moment_antiderivative(-1, 1, 1.0), DomainError);
  EXPECT_THROW(polylog_moment_antiderivative(1, 1, 0.0), DomainError);
  EXPECT_THROW(polylog_moment_antiderivative(1, 1, -2.0), DomainError);
  EXPECT_EQ(polylog_moment_antiderivative(3, 1, 1000.0), 0.0);
}

}  // namespace
