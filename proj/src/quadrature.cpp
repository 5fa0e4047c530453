#include "foq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"
#include "foq/integration.hpp"

namespace foq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this many nodes threads cost more than they save.
constexpr std::size_t kParallelThreshold = 4096;

bool finite(const complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::vector<complex> sample(const Sampler& f, const UniformGrid& grid, bool pure) {
  const std::size_t m = grid.size();
  std::vector<complex> out(m);
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) out[k] = f(grid.node(k));
  };

  const std::size_t threads = pure ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (threads == 1 || m < kParallelThreshold) {
    fill(0, m);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (m + threads - 1) / threads;
    for (std::size_t lo = 0; lo < m; lo += chunk) {
      pool.emplace_back(fill, lo, std::min(m, lo + chunk));
    }
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (!finite(out[k])) {
      std::ostringstream msg;
      msg << "sampler returned a non-finite value at x=" << grid.node(k);
      throw DataError(msg.str());
    }
  }
  return out;
}

std::vector<complex> finite_differences(const std::vector<complex>& v, double h) {
  const std::size_t n = v.size() - 1;
  std::vector<complex> d(v.size());
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  for (std::size_t k = 1; k < n; ++k) d[k] = (v[k + 1] - v[k - 1]) / (2.0 * h);
  d[n] = (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
  return d;
}

}  // namespace

SampledFunction::SampledFunction(std::vector<complex> v, UniformGrid g,
                                 std::optional<std::vector<complex>> d)
    : values(std::move(v)), grid(g), derivatives(std::move(d)) {
  if (values.size() != grid.size()) {
    throw ArgumentError("sample count does not match grid node count");
  }
  if (derivatives && derivatives->size() != grid.size()) {
    throw ArgumentError("derivative count does not match grid node count");
  }
  if (!std::all_of(values.begin(), values.end(), finite) ||
      (derivatives && !std::all_of(derivatives->begin(), derivatives->end(), finite))) {
    throw DataError("samples must be finite");
  }
}

QuadratureResult apply(const CoefficientSet& coeffs, const SampledFunction& samples) {
  if (!(coeffs.grid == samples.grid)) {
    throw ArgumentError("coefficient grid and sample grid differ");
  }
  complex sum{};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    sum += coeffs.values[k] * samples.values[k];
  }
  return {sum, std::nullopt, std::nullopt};
}

double seminorm_w210(const SampledFunction& samples) {
  const double h = samples.grid.step();
  const std::size_t n = samples.grid.intervals();
  std::vector<complex> deriv;
  if (samples.derivatives) {
    deriv = *samples.derivatives;
  } else {
    if (n < 2) {
      throw ArgumentError("finite-difference semi-norm needs at least 2 intervals");
    }
    deriv = finite_differences(samples.values, h);
  }

  double acc = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    acc += w * std::norm(deriv[k] + samples.values[k]);
  }
  return std::sqrt(h * acc);
}

QuadratureResult integrate_samples(const SampledFunction& samples, FourierWeight weight,
                                   bool with_bound) {
  QuadratureResult res = apply(optimal_coefficients(weight, samples.grid), samples);
  if (!with_bound) {
    return res;
  }

  // Pull back to y in [0, 1]: psi(y) = phi(a + L y), psi'(y) = L phi'(x).
  const double len = samples.grid.length();
  std::optional<std::vector<complex>> unit_deriv = samples.derivatives;
  if (unit_deriv) {
    for (auto& z : *unit_deriv) z *= len;
  }
  const SampledFunction pulled(samples.values, UniformGrid::unit(samples.grid.intervals()),
                               std::move(unit_deriv));

  const double norm = len * seminorm_w210(pulled);
  const double ell = std::sqrt(std::max(
      0.0, norm_squared_closed(FourierWeight(weight.omega() * len), samples.grid.intervals())));
  res.norm_used = norm;
  res.error_bound = norm * ell;
  return res;
}

QuadratureResult integrate_fourier(const Sampler& f, FourierWeight weight, const UniformGrid& grid,
                                   const IntegrateOptions& opt) {
  std::vector<complex> values = sample(f, grid, opt.pure_sampler);
  std::optional<std::vector<complex>> deriv;
  if (opt.with_bound && opt.derivative) {
    deriv = sample(opt.derivative, grid, opt.pure_sampler);
  }
  return integrate_samples(SampledFunction(std::move(values), grid, std::move(deriv)), weight,
                           opt.with_bound);
}

complex reference_fourier_integral(const Sampler& f, FourierWeight weight, double a, double b,
                                   double abs_tol) {
  if (!(b > a)) {
    throw ArgumentError("reference integral requires b > a");
  }
  const double w = weight.omega();
  const auto panels = static_cast<std::size_t>(std::max(4.0, std::ceil(std::abs(w) * (b - a))));
  const std::vector<double> breaks = integration::uniform_breaks(a, b, panels);
  integration::Options opt;
  opt.abs_tol = abs_tol;
  opt.min_levels = 4;
  return integration::romberg([&](double x) { return std::polar(1.0, kTwoPi * w * x) * f(x); },
                              breaks, opt)
      .value;
}

const std::vector<TestFunction>& builtin_functions() {
  static const std::vector<TestFunction> fns = [] {
    const double pi = std::numbers::pi;
    return std::vector<TestFunction>{
        {"exp_neg", "exp(-x)", [](double x) { return complex{std::exp(-x)}; },
         [](double x) { return complex{-std::exp(-x)}; }},
        {"exp", "exp(x)", [](double x) { return complex{std::exp(x)}; },
         [](double x) { return complex{std::exp(x)}; }},
        {"one", "1", [](double) { return complex{1.0}; }, [](double) { return complex{0.0}; }},
        {"x", "x", [](double x) { return complex{x}; }, [](double) { return complex{1.0}; }},
        {"x2", "x^2", [](double x) { return complex{x * x}; },
         [](double x) { return complex{2.0 * x}; }},
        {"sin_pi", "sin(pi x)", [pi](double x) { return complex{std::sin(pi * x)}; },
         [pi](double x) { return complex{pi * std::cos(pi * x)}; }},
        {"runge", "1/(1+25x^2)", [](double x) { return complex{1.0 / (1.0 + 25.0 * x * x)}; },
         [](double x) {
           const double q = 1.0 + 25.0 * x * x;
           return complex{-50.0 * x / (q * q)};
         }},
    };
  }();
  return fns;
}

const TestFunction& builtin_function(std::string_view name) {
  for (const auto& f : builtin_functions()) {
    if (f.name == name) return f;
  }
  throw ArgumentError("unknown builtin function '" + std::string(name) + "'");
}

}  // namespace foq
