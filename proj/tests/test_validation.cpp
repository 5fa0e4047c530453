#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "foq/validation.hpp"

namespace {

using foq::FourierWeight;

bool has_check(const foq::CaseReport& c, const std::string& name) {
  return std::any_of(c.checks.begin(), c.checks.end(),
                     [&](const foq::CheckResult& r) { return r.name == name; });
}

TEST(Validation, SingleCasePasses) {
  const auto tol = foq::tolerances(foq::ToleranceProfile::standard);
  const auto rep = foq::certify_case(FourierWeight(2.7), 10, tol);
  EXPECT_TRUE(rep.passed()) << foq::to_json(rep).dump(2);
  EXPECT_TRUE(rep.error.empty());
  for (const char* name : {"coefficients_vs_oracle", "lagrange_d", "exactness_exp_neg",
                           "conjugate_symmetry", "real_imag_forms", "norm_vs_bruteforce",
                           "constrained_minimality", "discrete_identities"}) {
    EXPECT_TRUE(has_check(rep, name)) << name;
  }
  EXPECT_FALSE(has_check(rep, "extremal_pairing"));
}

TEST(Validation, ZeroFrequencyHasTrapezoidCheck) {
  const auto rep =
      foq::certify_case(FourierWeight(0.0), 5, foq::tolerances(foq::ToleranceProfile::standard));
  EXPECT_TRUE(has_check(rep, "trapezoid_limit"));
  EXPECT_TRUE(rep.passed());
}

TEST(Validation, ExtremalOption) {
  foq::ValidationOptions opt;
  opt.extremal = true;
  const auto rep = foq::certify_case(FourierWeight(1.0), 5,
                                     foq::tolerances(foq::ToleranceProfile::standard), opt);
  EXPECT_TRUE(has_check(rep, "extremal_pairing"));
  EXPECT_TRUE(rep.passed());
}

TEST(Validation, ImpossibleToleranceFails) {
  auto tol = foq::tolerances(foq::ToleranceProfile::standard);
  tol.coefficient = 0.0;
  tol.lagrange_d = 0.0;
  const auto rep = foq::certify_case(FourierWeight(10.0), 50, tol);
  EXPECT_FALSE(rep.passed());
}

TEST(Validation, StrictIsTighter) {
  const auto s = foq::tolerances(foq::ToleranceProfile::standard);
  const auto t = foq::tolerances(foq::ToleranceProfile::strict);
  EXPECT_LE(t.coefficient, s.coefficient);
  EXPECT_LE(t.norm_bruteforce, s.norm_bruteforce);
  EXPECT_LE(t.continuity, s.continuity);
}

TEST(Validation, ProfileFromEnvironment) {
  ::unsetenv("FOQ_TOLERANCE_PROFILE");
  EXPECT_EQ(foq::profile_from_env(), foq::ToleranceProfile::standard);
  ::setenv("FOQ_TOLERANCE_PROFILE", "strict", 1);
  EXPECT_EQ(foq::profile_from_env(), foq::ToleranceProfile::strict);
  ::setenv("FOQ_TOLERANCE_PROFILE", "loose", 1);
  EXPECT_THROW((void)foq::profile_from_env(), foq::ArgumentError);
  ::unsetenv("FOQ_TOLERANCE_PROFILE");
}

TEST(Validation, GridAndReportJson) {
  EXPECT_EQ(foq::certification_omegas().size(), 11u);
  EXPECT_EQ(foq::certification_intervals().size(), 6u);
  const auto rep = foq::certify({0.0, -1.0}, {1, 2}, foq::ToleranceProfile::standard);
  ASSERT_EQ(rep.cases.size(), 4u);
  EXPECT_EQ(rep.cases[2].omega, -1.0);
  EXPECT_EQ(rep.cases[2].n_intervals, 1u);
  EXPECT_TRUE(rep.passed());
  const auto j = foq::to_json(rep);
  EXPECT_EQ(j.at("profile"), "default");
  EXPECT_TRUE(j.at("failing_cases").empty());
  EXPECT_EQ(j.at("global").at(0).at("name"), "omega_to_zero_continuity");
}

}  // namespace
