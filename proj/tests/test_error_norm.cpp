#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"

namespace {

using foq::FourierWeight;

TEST(ErrorNorm, FrozenValues) {
  EXPECT_NEAR(foq::norm_squared_closed(FourierWeight(1.0), 10), 0.00082162582005813747733, 1e-17);
  EXPECT_NEAR(foq::norm_squared_closed(FourierWeight(0.0), 1), 0.075765685479980482995, 1e-15);
  EXPECT_NEAR(foq::norm_squared_closed(FourierWeight(2.7), 5), 0.0022783651165456372119, 1e-16);
  EXPECT_NEAR(foq::norm_squared_closed(FourierWeight(10.0), 50), 0.000031626112609738228115,
              1e-17);
}

TEST(ErrorNorm, EvenInOmega) {
  for (double w : {0.3, 1.0, 2.7, 50.0}) {
    for (std::size_t n : {1u, 10u, 1000u}) {
      EXPECT_EQ(foq::norm_squared_closed(FourierWeight(w), n),
                foq::norm_squared_closed(FourierWeight(-w), n));
    }
  }
}

TEST(ErrorNorm, NonNegative) {
  for (double w : {0.0, 0.3, 1.0, 7.5, 50.0, 1000.0}) {
    for (std::size_t n : {1u, 2u, 10u, 100u, 10000u, 1000000u}) {
      EXPECT_GE(foq::norm_squared_closed(FourierWeight(w), n), 0.0) << w << " " << n;
    }
  }
}

TEST(ErrorNorm, AsymptoticExpansion) {
  const FourierWeight w(1.0);
  const double exact = foq::norm_squared_closed(w, 10);
  EXPECT_NEAR(exact, foq::norm_squared_asymptotic(w, 0.1), 1e-6);
  for (std::size_t n : {100u, 200u, 1000u}) {
    const double h = 1.0 / static_cast<double>(n);
    EXPECT_LE(std::abs(foq::norm_squared_closed(w, n) - foq::norm_squared_asymptotic(w, h)), 5e-12);
  }
}

TEST(ErrorNorm, AsymptoticDomain) {
  EXPECT_EQ(foq::norm_squared_asymptotic(FourierWeight(3.0), 0.0), 0.0);
  EXPECT_THROW((void)foq::norm_squared_asymptotic(FourierWeight(1.0), -0.1), foq::ArgumentError);
  EXPECT_THROW((void)foq::norm_squared_asymptotic(FourierWeight(1.0), INFINITY),
               foq::ArgumentError);
  EXPECT_THROW((void)foq::norm_squared_closed(FourierWeight(1.0), 0), foq::ArgumentError);
}

TEST(ErrorNorm, DecreasesLikeStep) {
  const FourierWeight w(1.0);
  const double r = std::sqrt(foq::norm_squared_closed(w, 160) / foq::norm_squared_closed(w, 80));
  EXPECT_NEAR(r, 0.5, 0.01);
}

TEST(ErrorNorm, BruteForceAgreesWithClosedForm) {
  for (double w : {0.0, 0.3, 1.0, 2.7, 10.0}) {
    for (std::size_t n : {2u, 5u, 10u}) {
      const auto c = foq::optimal_coefficients_unit(FourierWeight(w), n);
      EXPECT_NEAR(foq::norm_squared_bruteforce(c), foq::norm_squared_closed(FourierWeight(w), n),
                  1e-8)
          << w << " " << n;
    }
  }
}

TEST(ErrorNorm, BruteForceIntegralsMatchReference) {
  // J at omega = 1 in 40-digit arithmetic.
  const foq::BruteForceNorm bf(FourierWeight(1.0), 4);
  EXPECT_NEAR(bf.double_integral(), -0.052302825778076254481, 1e-12);
  EXPECT_EQ(bf.node_moments().size(), 5u);
}

TEST(ErrorNorm, TrapezoidWeightsAttainZeroFrequencyNorm) {
  const std::size_t n = 8;
  const auto t = foq::trapezoid_coefficients(n);
  const foq::BruteForceNorm bf(FourierWeight(0.0), n);
  std::vector<foq::complex> tv(t.begin(), t.end());
  const double opt = foq::norm_squared_closed(FourierWeight(0.0), n);
  EXPECT_NEAR(bf(tv), opt, 1e-10);
}

TEST(ErrorNorm, BruteForceNeedsUnitGrid) {
  const auto c = foq::optimal_coefficients(FourierWeight(1.0), foq::UniformGrid(0.0, 2.0, 4));
  EXPECT_THROW((void)foq::norm_squared_bruteforce(c), foq::ArgumentError);
}

TEST(ErrorNorm, ReportOnInterval) {
  const auto rep = foq::error_norm_report(FourierWeight(0.5), foq::UniformGrid(-1.0, 1.0, 8), true);
  EXPECT_EQ(rep.norm_squared, foq::norm_squared_closed(FourierWeight(1.0), 8));
  ASSERT_TRUE(rep.brute_force_value.has_value());
  EXPECT_NEAR(*rep.brute_force_value, rep.norm_squared, 1e-8);
  EXPECT_GT(rep.asymptotic_estimate, 0.0);
}

}  // namespace
