#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "foq/types.hpp"

namespace foq {

/// Squared norm of the optimal error functional on [0, 1] (dual of W2^(1,0)).
[[nodiscard]] double norm_squared_closed(FourierWeight weight, std::size_t n_intervals);

/// Two-term small-h expansion h^2/12 - (4 pi^2 omega^2 + 3) h^4 / 360.
/// h == 0 gives 0; negative or non-finite h throws ArgumentError.
[[nodiscard]] double norm_squared_asymptotic(FourierWeight weight, double h);

/// Squared error-functional norm of arbitrary unit-interval weights, evaluated
/// from the quadratic form in the weights with every integral done
/// numerically. Only meaningful for weights that are exact on exp(-x).
///
/// The integrals depend on (omega, N) alone, so they are computed once at
/// construction and reused for any number of weight vectors.
class BruteForceNorm {
 public:
  BruteForceNorm(FourierWeight weight, std::size_t n_intervals);

  [[nodiscard]] double operator()(const CoefficientSet& coeffs) const;
  [[nodiscard]] double operator()(const std::vector<complex>& values) const;

  /// int_0^1 exp(2 pi i omega x) G(x - h k) dx, k = 0..N.
  [[nodiscard]] const std::vector<complex>& node_moments() const noexcept { return moments_; }
  /// int_0^1 int_0^1 cos(2 pi omega (x - y)) G(x - y) dx dy.
  [[nodiscard]] double double_integral() const noexcept { return double_integral_; }

  [[nodiscard]] FourierWeight weight() const noexcept { return weight_; }
  [[nodiscard]] std::size_t intervals() const noexcept { return n_; }

 private:
  FourierWeight weight_;
  std::size_t n_;
  std::vector<complex> moments_;
  double double_integral_ = 0.0;
};

/// BruteForceNorm for the coefficients' own (omega, N). Coefficients must be on [0, 1].
/// Throws NumericalError if an integral fails to converge within 20 dyadic levels.
[[nodiscard]] double norm_squared_bruteforce(const CoefficientSet& coeffs);

struct ErrorNormReport {
  double norm_squared = 0.0;
  double asymptotic_estimate = 0.0;
  std::optional<double> brute_force_value;
  FourierWeight weight;
  UniformGrid grid;
};

/// Norm report for the optimal rule on `grid`. For grids other than [0, 1] the
/// values refer to the unit-interval problem at frequency omega (b - a), which
/// is what the transported rule minimises.
[[nodiscard]] ErrorNormReport error_norm_report(FourierWeight weight, const UniformGrid& grid,
                                                bool with_bruteforce);

}  // namespace foq
