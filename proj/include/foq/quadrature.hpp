#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foq/types.hpp"

namespace foq {

/// Function values at the nodes of a grid, optionally with derivative values.
struct SampledFunction {
  std::vector<complex> values;
  UniformGrid grid;
  std::optional<std::vector<complex>> derivatives;

  /// Throws ArgumentError on length mismatch and DataError on non-finite values.
  SampledFunction(std::vector<complex> v, UniformGrid g,
                  std::optional<std::vector<complex>> d = std::nullopt);
};

struct QuadratureResult {
  complex value;
  std::optional<double> error_bound;
  std::optional<double> norm_used;
};

/// sum_k C_k phi(x_k), accumulated in index order. Grids must match exactly.
[[nodiscard]] QuadratureResult apply(const CoefficientSet& coeffs, const SampledFunction& samples);

/// (int_a^b |phi' + phi|^2 dx)^{1/2} by the trapezoid rule on node values.
/// Missing derivatives are replaced by second-order finite differences
/// (central inside, one-sided at the ends), which needs N >= 2.
[[nodiscard]] double seminorm_w210(const SampledFunction& samples);

using Sampler = std::function<complex(double)>;

struct IntegrateOptions {
  bool with_bound = false;
  /// Sampler may be called concurrently from several threads.
  bool pure_sampler = false;
  /// Exact derivative of the integrand, used for the bound when present.
  Sampler derivative;
};

/// Applies the optimal weights for the samples' grid. With `with_bound`,
/// attaches error_bound = norm_used * ||l||. On [a, b] the rule is the unit
/// rule at frequency omega (b - a) pulled back through x = a + (b - a) y, so
/// norm_used is (b - a) times the semi-norm of y -> phi(a + (b - a) y) and
/// ||l|| is the unit-interval norm; on [0, 1] this is the plain semi-norm.
/// Derivative samples, if present, are d phi / dx; otherwise finite
/// differences are used (N >= 2).
[[nodiscard]] QuadratureResult integrate_samples(const SampledFunction& samples,
                                                 FourierWeight weight, bool with_bound = false);

/// Samples phi at the nodes of `grid` and applies the optimal weights.
///
/// The bound is the one of integrate_samples, using `derivative` when set.
/// Throws DataError if the sampler returns a non-finite value.
[[nodiscard]] QuadratureResult integrate_fourier(const Sampler& f, FourierWeight weight,
                                                 const UniformGrid& grid,
                                                 const IntegrateOptions& opt = {});

/// High-accuracy reference for int_a^b exp(2 pi i omega x) f(x) dx by
/// Romberg integration; f must be smooth on [a, b].
[[nodiscard]] complex reference_fourier_integral(const Sampler& f, FourierWeight weight, double a,
                                                 double b, double abs_tol = 1e-13);

/// Smooth test integrands shipped with exact derivatives.
struct TestFunction {
  std::string name;
  std::string formula;
  Sampler value;
  Sampler derivative;
};

[[nodiscard]] const std::vector<TestFunction>& builtin_functions();

/// Throws ArgumentError for an unknown name.
[[nodiscard]] const TestFunction& builtin_function(std::string_view name);

}  // namespace foq
