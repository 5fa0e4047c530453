#pragma once

#include <cstddef>
#include <vector>

#include "foq/types.hpp"

namespace foq {

/// Optimal weights for int_0^1 exp(2 pi i omega x) phi(x) dx on the grid k/N.
///
/// The same closed form serves omega == 0, where it collapses to the
/// exponentially fitted trapezoid rule. Quantities of the form exp(t) - 1 are
/// evaluated with expm1 and every phase is reduced modulo one cycle before the
/// trig call, so the result stays accurate for N well beyond 10^4.
///
/// Throws ArgumentError if n_intervals == 0.
[[nodiscard]] CoefficientSet optimal_coefficients_unit(FourierWeight weight,
                                                       std::size_t n_intervals);

/// Optimal weights for int_a^b exp(2 pi i omega x) phi(x) dx on an arbitrary
/// uniform grid, obtained through the substitution x = (b - a) y + a.
///
/// Pointwise, C_k[a,b] = (b - a) exp(2 pi i omega a) C_k(omega (b - a)) where the
/// right factor is the unit-interval weight.
[[nodiscard]] CoefficientSet optimal_coefficients(FourierWeight weight, const UniformGrid& grid);

/// Real parts of the unit-interval weights: the rule for the cosine transform.
[[nodiscard]] std::vector<double> cosine_coefficients(FourierWeight weight, std::size_t n_intervals);

/// Imaginary parts of the unit-interval weights: the rule for the sine transform.
[[nodiscard]] std::vector<double> sine_coefficients(FourierWeight weight, std::size_t n_intervals);

/// Weights of the optimal rule for int_0^1 phi(x) dx: tanh(h/2) at the ends,
/// 2 tanh(h/2) inside.
[[nodiscard]] std::vector<double> trapezoid_coefficients(std::size_t n_intervals);

}  // namespace foq
