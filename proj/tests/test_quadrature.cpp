#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numbers>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"
#include "foq/quadrature.hpp"

namespace {

using foq::complex;
using foq::FourierWeight;
using foq::SampledFunction;
using foq::UniformGrid;

SampledFunction sample(const foq::Sampler& f, const UniformGrid& g) {
  std::vector<complex> v;
  for (double x : g.nodes()) v.push_back(f(x));
  return SampledFunction(std::move(v), g);
}

TEST(Quadrature, SampledFunctionValidation) {
  const UniformGrid g(0.0, 1.0, 2);
  EXPECT_THROW(SampledFunction({1.0, 2.0}, g), foq::ArgumentError);
  EXPECT_THROW(SampledFunction({1.0, NAN, 2.0}, g), foq::DataError);
  EXPECT_THROW(SampledFunction({1.0, 1.0, 1.0}, g, std::vector<complex>{1.0}), foq::ArgumentError);
}

TEST(Quadrature, ApplyIsLinear) {
  const UniformGrid g = UniformGrid::unit(9);
  const auto c = foq::optimal_coefficients(FourierWeight(1.3), g);
  auto f1 = [](double x) { return complex{std::cos(3.0 * x), x}; };
  auto f2 = [](double x) { return complex{x * x, -1.0}; };
  const complex alpha{0.4, -2.0};
  const complex lhs =
      foq::apply(c, sample([&](double x) { return alpha * f1(x) + f2(x); }, g)).value;
  const complex rhs = alpha * foq::apply(c, sample(f1, g)).value + foq::apply(c, sample(f2, g)).value;
  EXPECT_LE(std::abs(lhs - rhs), 1e-14);
}

TEST(Quadrature, ApplyRejectsGridMismatch) {
  const auto c = foq::optimal_coefficients_unit(FourierWeight(1.0), 4);
  EXPECT_THROW((void)foq::apply(c, sample([](double) { return complex{1.0}; }, UniformGrid::unit(5))),
               foq::ArgumentError);
  EXPECT_THROW(
      (void)foq::apply(c, sample([](double) { return complex{1.0}; }, UniformGrid(0.0, 2.0, 4))),
      foq::ArgumentError);
}

TEST(Quadrature, SeminormExponential) {
  const UniformGrid g = UniformGrid::unit(2000);
  std::vector<complex> v, d;
  for (double x : g.nodes()) {
    v.emplace_back(std::exp(x));
    d.emplace_back(std::exp(x));
  }
  const double exact = std::sqrt(2.0 * (std::exp(2.0) - 1.0));
  EXPECT_NEAR(exact, 3.5746485418655217, 1e-15);
  EXPECT_NEAR(foq::seminorm_w210(SampledFunction(v, g, d)), exact, 1e-6);
  EXPECT_NEAR(foq::seminorm_w210(SampledFunction(v, g)), exact, 1e-5);
}

TEST(Quadrature, SeminormConstantAndKernel) {
  const UniformGrid g(2.0, 5.0, 6);
  const complex c{1.5, -2.0};
  EXPECT_NEAR(foq::seminorm_w210(sample([&](double) { return c; }, g)), std::abs(c) * std::sqrt(3.0),
              1e-14);
  std::vector<complex> v, d;
  for (double x : g.nodes()) {
    v.emplace_back(std::exp(-x));
    d.emplace_back(-std::exp(-x));
  }
  EXPECT_EQ(foq::seminorm_w210(SampledFunction(v, g, d)), 0.0);
  EXPECT_THROW((void)foq::seminorm_w210(sample([](double) { return complex{1.0}; },
                                               UniformGrid::unit(1))),
               foq::ArgumentError);
}

TEST(Quadrature, ExactForKernelFunctions) {
  const double w = 1.0;
  const auto r = foq::integrate_fourier([](double x) { return complex{std::exp(-x)}; },
                                        FourierWeight(w), UniformGrid::unit(10));
  const complex z{-1.0, 2.0 * std::numbers::pi * w};
  const complex exact = (std::exp(z) - 1.0) / z;
  EXPECT_LE(std::abs(r.value - exact), 1e-14);
  EXPECT_FALSE(r.error_bound.has_value());
}

TEST(Quadrature, BoundHoldsForBuiltins) {
  for (const auto& fn : foq::builtin_functions()) {
    for (double w : {1.0, 3.0}) {
      for (std::size_t n : {10u, 40u}) {
        foq::IntegrateOptions opt;
        opt.with_bound = true;
        opt.derivative = fn.derivative;
        const auto r = foq::integrate_fourier(fn.value, FourierWeight(w), UniformGrid::unit(n), opt);
        const complex ref = foq::reference_fourier_integral(fn.value, FourierWeight(w), 0.0, 1.0);
        ASSERT_TRUE(r.error_bound && r.norm_used);
        EXPECT_LE(std::abs(ref - r.value), 1.05 * *r.error_bound + 1e-14) << fn.name;
      }
    }
  }
}

TEST(Quadrature, BoundOnIntervalUsesPulledBackNorm) {
  const auto& fn = foq::builtin_function("runge");
  foq::IntegrateOptions opt;
  opt.with_bound = true;
  opt.derivative = fn.derivative;
  const UniformGrid g(-1.0, 1.0, 64);
  const auto r = foq::integrate_fourier(fn.value, FourierWeight(0.75), g, opt);
  const complex ref = foq::reference_fourier_integral(fn.value, FourierWeight(0.75), -1.0, 1.0);
  ASSERT_TRUE(r.error_bound.has_value());
  EXPECT_LE(std::abs(ref - r.value), *r.error_bound);
  EXPECT_NEAR(*r.error_bound,
              *r.norm_used * std::sqrt(foq::norm_squared_closed(FourierWeight(1.5), 64)), 1e-15);
}

TEST(Quadrature, ParallelSamplingMatchesSerial) {
  const UniformGrid g = UniformGrid::unit(20000);
  auto f = [](double x) { return complex{std::sin(7.0 * x), std::cos(x)}; };
  std::atomic<int> calls{0};
  foq::IntegrateOptions par;
  par.pure_sampler = true;
  const auto a = foq::integrate_fourier(
      [&](double x) {
        calls.fetch_add(1, std::memory_order_relaxed);
        return f(x);
      },
      FourierWeight(3.0), g, par);
  const auto b = foq::integrate_fourier(f, FourierWeight(3.0), g);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(calls.load(), 20001);
}

TEST(Quadrature, NonFiniteSamplerRejected) {
  EXPECT_THROW((void)foq::integrate_fourier([](double x) { return complex{1.0 / (x - 0.5)}; },
                                            FourierWeight(1.0), UniformGrid::unit(2)),
               foq::DataError);
}

TEST(Quadrature, ConvergesForSmoothIntegrand) {
  const auto& fn = foq::builtin_function("sin_pi");
  const complex ref = foq::reference_fourier_integral(fn.value, FourierWeight(2.0), 0.0, 1.0);
  const double e1 = std::abs(
      foq::integrate_fourier(fn.value, FourierWeight(2.0), UniformGrid::unit(50)).value - ref);
  const double e2 = std::abs(
      foq::integrate_fourier(fn.value, FourierWeight(2.0), UniformGrid::unit(100)).value - ref);
  EXPECT_LT(e2, 0.6 * e1);
}

TEST(Quadrature, BuiltinLookup) {
  EXPECT_EQ(foq::builtin_function("x2").formula, "x^2");
  EXPECT_THROW((void)foq::builtin_function("nope"), foq::ArgumentError);
}

TEST(Quadrature, ReferenceIntegral) {
  const complex r = foq::reference_fourier_integral([](double) { return complex{1.0}; },
                                                    FourierWeight(0.0), 0.0, 2.0);
  EXPECT_NEAR(r.real(), 2.0, 1e-14);
  EXPECT_THROW((void)foq::reference_fourier_integral([](double) { return complex{1.0}; },
                                                     FourierWeight(0.0), 1.0, 1.0),
               foq::ArgumentError);
}

}  // namespace
