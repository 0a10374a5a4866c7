#include "cfforge/special_fn.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"

namespace cfforge {
namespace {

using testing::central_difference;
using testing::relative_error;

TEST(Gamma, ClassicalValues) {
  EXPECT_DOUBLE_EQ(cfforge::gamma(1.0).value, 1.0);
  EXPECT_NEAR(cfforge::gamma(0.5).value, std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_NEAR(cfforge::gamma(5.0).value, 24.0, 24.0 * 1e-14);
}

TEST(Gamma, MatchesLibmOverFullRange) {
  for (double u = 0.01; u <= 170.0; u += 0.37) {
    EXPECT_LT(relative_error(cfforge::gamma(u).value, std::tgamma(u)), 1e-13) << "u=" << u;
  }
  EXPECT_LT(relative_error(cfforge::gamma(170.0).value, std::tgamma(170.0)), 1e-13);
}

TEST(Gamma, Recurrence) {
  for (double u : {0.1, 0.5, 1.5, 10.3}) {
    const double ratio = cfforge::gamma(u + 1.0).value / (u * cfforge::gamma(u).value);
    EXPECT_LT(std::abs(ratio - 1.0), 1e-12) << "u=" << u;
  }
}

TEST(Gamma, OverflowAndDomain) {
  EXPECT_EQ(cfforge::gamma(170.5).status, EvalStatus::Overflow);
  EXPECT_THROW(cfforge::gamma(0.0), std::domain_error);
  EXPECT_THROW(cfforge::gamma(-1.5), std::domain_error);
  EXPECT_THROW(cfforge::gamma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST(BesselI, HalfOrderClosedForm) {
  const auto r = bessel_i(0.5, 1.0);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r.value, 0.9376748882454876, 1e-12);
  EXPECT_LT(relative_error(r.value, testing::i_half_closed_form(1.0)), 1e-10);
}

TEST(BesselI, SmallArgumentLeadingTerms) {
  for (double x : {1e-3, 1e-2, 0.05}) {
    // Next series term is x^4/64.
    EXPECT_NEAR(bessel_i(0.0, x).value, 1.0 + x * x / 4.0, std::pow(x, 4) / 32.0);
  }
  EXPECT_NEAR(bessel_i(0.0, 1e-12).value, 1.0, 1e-15);
}

TEST(BesselI, MatchesBruteForceSeries) {
  EXPECT_LT(relative_error(bessel_i(2.0, 3.0).value, testing::i_series_bruteforce(2.0, 3.0)),
            1e-10);
  for (double mu : {0.0, 0.3, 0.5, 1.0, 2.7, 6.0}) {
    for (double x : {0.01, 0.5, 1.0, 4.0, 12.0, 29.0}) {
      EXPECT_LT(relative_error(bessel_i(mu, x).value, testing::i_series_bruteforce(mu, x)), 1e-10)
          << "mu=" << mu << " x=" << x;
    }
  }
}

TEST(BesselI, LargeArgumentBranch) {
  // libstdc++'s cyl_bessel_i is an independent implementation.
  for (double mu : {0.0, 0.5, 1.0, 2.7}) {
    for (double x : {30.5, 50.0, 120.0, 400.0, 699.0}) {
      EXPECT_LT(relative_error(bessel_i(mu, x).value, std::cyl_bessel_i(mu, x)), 1e-10)
          << "mu=" << mu << " x=" << x;
    }
  }
  // Continuity across the series/asymptotic switch.
  EXPECT_LT(relative_error(bessel_i(1.5, 30.0).value, bessel_i(1.5, 30.0 + 1e-9).value), 1e-9);
}

TEST(BesselI, DomainAndOverflow) {
  EXPECT_THROW(bessel_i(-0.5, 1.0), std::domain_error);
  EXPECT_THROW(bessel_i(1.0, 0.0), std::domain_error);
  EXPECT_THROW(bessel_i(1.0, -2.0), std::domain_error);
  const auto r = bessel_i(1.0, 701.0);
  EXPECT_EQ(r.status, EvalStatus::Overflow);
  EXPECT_TRUE(std::isinf(r.value));
}

TEST(BesselK, HalfIntegerClosedForms) {
  EXPECT_NEAR(bessel_k(0.5, 1.0).value, 0.4610685044478946, 1e-12);
  EXPECT_LT(relative_error(bessel_k(0.5, 1.0).value, testing::k_half_closed_form(1.0)), 1e-10);
  const double x = std::sqrt(3.0);
  EXPECT_LT(relative_error(bessel_k(1.5, x).value, testing::k_three_halves_closed_form(x)), 1e-10);
}

TEST(BesselK, NegativeOrderIsBitIdentical) {
  EXPECT_EQ(bessel_k(-0.5, 1.0).value, bessel_k(0.5, 1.0).value);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> order(0.0, 6.0);
  std::uniform_real_distribution<double> arg(-6.0, 2.5);
  for (int n = 0; n < 200; ++n) {
    const double mu = order(rng);
    const double x = std::pow(10.0, arg(rng));
    EXPECT_EQ(bessel_k(-mu, x).value, bessel_k(mu, x).value);
  }
}

TEST(BesselK, MatchesRawIntegralQuadrature) {
  for (double mu : {0.0, 0.15, 0.5, 0.9, 1.0, 2.5, 4.0}) {
    for (double x : {0.05, 0.3, 1.0, 3.0, 10.0, 40.0}) {
      EXPECT_LT(relative_error(bessel_k(mu, x).value, testing::k_integral_quadrature(mu, x)), 1e-10)
          << "mu=" << mu << " x=" << x;
    }
  }
}

TEST(BesselK, ExtremeArguments) {
  for (double mu : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (double x : {1e-8, 1e-5, 100.0, 600.0}) {
      EXPECT_LT(relative_error(bessel_k(mu, x).value, std::cyl_bessel_k(mu, x)), 1e-10)
          << "mu=" << mu << " x=" << x;
    }
  }
  const auto big_order = bessel_k(60.0, 1e-3);
  EXPECT_TRUE(big_order.ok());
  EXPECT_LT(relative_error(big_order.value, std::cyl_bessel_k(60.0, 1e-3)), 1e-10);
}

TEST(BesselK, UnderflowAndOverflow) {
  const auto beyond = bessel_k(1.0, 750.0);
  EXPECT_EQ(beyond.status, EvalStatus::Underflow);
  EXPECT_EQ(beyond.value, 0.0);
  EXPECT_TRUE(bessel_k(1.0, 700.0).ok());
  EXPECT_GT(bessel_k(1.0, 700.0).value, 0.0);
  EXPECT_EQ(bessel_k(200.0, 1e-5).status, EvalStatus::Overflow);
  EXPECT_THROW(bessel_k(1.0, 0.0), std::domain_error);
}

TEST(BesselK, ScaledFormStaysFinitePastUnderflow) {
  const auto s = bessel_k_scaled(0.5, 2000.0);
  ASSERT_TRUE(s.ok());
  EXPECT_LT(relative_error(s.value, std::sqrt(std::numbers::pi / 4000.0)), 1e-12);
}

TEST(BesselKWeightedDerivative, HalfOrder) {
  const auto r = bessel_k_weighted_derivative(0.5, 1.0);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r.value, -0.4610685044478946, 1e-12);
}

TEST(BesselKWeightedDerivative, DefinitionalConsistency) {
  for (double mu : {0.2, 0.5, 1.3, 3.0}) {
    for (double x : {0.1, 1.0, 7.0}) {
      EXPECT_EQ(bessel_k_weighted_derivative(mu, x).value,
                -std::pow(x, mu) * bessel_k(mu - 1.0, x).value);
    }
  }
}

TEST(BesselKWeightedDerivative, FiniteDifference) {
  auto weighted = [](double mu) {
    return [mu](double x) { return std::pow(x, mu) * bessel_k(mu, x).value; };
  };
  for (auto [mu, x] : {std::pair{1.5, 2.0}, std::pair{0.3, 0.7}, std::pair{2.7, 5.0}}) {
    const double fd = central_difference(weighted(mu), x, 1e-5 * x);
    EXPECT_LT(relative_error(bessel_k_weighted_derivative(mu, x).value, fd), 1e-6)
        << "mu=" << mu << " x=" << x;
  }
}

TEST(LimitingForms, Examples) {
  EXPECT_NEAR(limiting_form_ratio(1.0, LimitingForm::KsmallX, 1e-4), 1.0, 1e-3);
  EXPECT_NEAR(limiting_form_ratio(0.5, LimitingForm::IlargeX, 50.0), 1.0, 1e-2);
}

TEST(LimitingForms, KRatioApproachesOneMonotonically) {
  const double r3 = limiting_form_ratio(2.0, LimitingForm::KsmallX, 1e-3);
  const double r4 = limiting_form_ratio(2.0, LimitingForm::KsmallX, 1e-4);
  const double r5 = limiting_form_ratio(2.0, LimitingForm::KsmallX, 1e-5);
  EXPECT_GT(std::abs(r3 - 1.0), std::abs(r4 - 1.0));
  EXPECT_GT(std::abs(r4 - 1.0), std::abs(r5 - 1.0));
  EXPECT_LT(std::abs(r5 - 1.0), 1e-9);
}

TEST(LimitingForms, RegimeBounds) {
  EXPECT_THROW(limiting_form_ratio(1.0, LimitingForm::KsmallX, 0.1), std::domain_error);
  EXPECT_THROW(limiting_form_ratio(1.0, LimitingForm::IlargeX, 10.0), std::domain_error);
  EXPECT_THROW(limiting_form_ratio(0.0, LimitingForm::KsmallX, 1e-4), std::domain_error);
}

TEST(Monotonicity, KDecreasingIIncreasing) {
  for (double mu : {0.0, 0.3, 1.0, 2.7}) {
    double prev_k = std::numeric_limits<double>::infinity();
    double prev_i = 0.0;
    for (double x = 0.05; x < 40.0; x *= 1.1) {
      const double k = bessel_k(mu, x).value;
      const double i = bessel_i(mu, x).value;
      EXPECT_LT(k, prev_k);
      EXPECT_GT(i, prev_i);
      prev_k = k;
      prev_i = i;
    }
  }
}

}  // namespace
}  // namespace cfforge
