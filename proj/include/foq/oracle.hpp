#pragma once

// Independent certification route for the closed-form weights.
//
// Nothing here calls into coefficients.hpp: the optimality system is assembled
// from the kernel G, the moments f(h k) and g0, and solved densely. The
// discrete operator D and the extremal function give two further checks.

#include <array>
#include <cstddef>
#include <vector>

#include "foq/types.hpp"

namespace foq {

/// G(x) = sign(x) sinh(x) / 2. Even, G(0) = 0.
[[nodiscard]] double kernel_G(double x) noexcept;

/// f(h k) = int_0^1 exp(2 pi i omega x) G(x - h k) dx, in closed form.
/// Requires h > 0 and 0 <= h k <= 1 (up to rounding).
[[nodiscard]] complex rhs_f(FourierWeight weight, double h, long k);

/// g0 = int_0^1 exp(2 pi i omega x) exp(-x) dx.
[[nodiscard]] complex rhs_g0(FourierWeight weight) noexcept;

/// int_0^1 exp(2 pi i omega x) exp(x) dx.
[[nodiscard]] complex rhs_g0_plus(FourierWeight weight) noexcept;

/// Bordered system [G E; E^T 0] [C; d] = [f; g0] of size (N + 2).
struct OptimalitySystem {
  FourierWeight weight;
  std::size_t n_intervals;
  std::vector<complex> matrix;  // row-major, dim() x dim()
  std::vector<complex> rhs;

  [[nodiscard]] std::size_t dim() const noexcept { return n_intervals + 2; }
  [[nodiscard]] const complex& at(std::size_t row, std::size_t col) const {
    return matrix[row * dim() + col];
  }
};

struct OracleSolution {
  CoefficientSet coefficients;
  complex lagrange_d;
  double residual_norm = 0.0;  // ||A x - b||_inf
  double matrix_norm = 0.0;    // ||A||_inf
  double solution_norm = 0.0;  // ||x||_inf
  double rcond = 0.0;          // reciprocal condition estimate from the factorization
};

[[nodiscard]] OptimalitySystem build_system(FourierWeight weight, std::size_t n_intervals);

/// Dense LU with partial pivoting. Throws NumericalError when the matrix is
/// numerically singular, which would contradict uniqueness of the solution.
[[nodiscard]] OracleSolution solve_system(const OptimalitySystem& system);

/// build_system + solve_system on [0, 1].
[[nodiscard]] OracleSolution oracle_solution(FourierWeight weight, std::size_t n_intervals);

/// Oracle weights on an arbitrary interval: the unit solution at frequency
/// omega (b - a), scaled by (b - a) exp(2 pi i omega a).
[[nodiscard]] CoefficientSet oracle_coefficients(FourierWeight weight, const UniformGrid& grid);

/// Three-point discrete analogue of d^2/dx^2 - 1; zero for |k| >= 2.
[[nodiscard]] double discrete_operator_D(double h, long k);

enum class DiscreteIdentity { kernel_delta = 0, exp_plus = 1, exp_minus = 2 };

struct DiscreteIdentityReport {
  double h = 0.0;
  long k_min = 0;
  long k_max = 0;
  // Indexed by DiscreteIdentity.
  std::array<double, 3> max_abs_violation{};
  // Violation divided by max(1, sum of |terms|) of the three-point convolution.
  std::array<double, 3> max_scaled_violation{};
  std::array<long, 3> worst_k{};

  [[nodiscard]] double worst_scaled() const;
};

/// Checks D*G = delta, D*exp(h k) = 0 and D*exp(-h k) = 0 for k in [k_min, k_max].
[[nodiscard]] DiscreteIdentityReport verify_discrete_identities(double h, long k_min, long k_max);

struct ExtremalCheck {
  complex pairing;           // (l, psi_l) by quadrature
  double norm_squared = 0.0;  // closed-form reference value it is compared against
  double relative_discrepancy = 0.0;
};

/// Builds psi_l(x) = -(conj(l) * G)(x) (the exp(-x) term vanishes since d = 0)
/// by numerical convolution, pairs it with l and compares against
/// `norm_squared`. Coefficients must live on [0, 1].
[[nodiscard]] ExtremalCheck extremal_function_check(const CoefficientSet& coeffs,
                                                    double norm_squared);

/// Same, against the closed-form squared norm for the coefficients' (omega, N).
[[nodiscard]] ExtremalCheck extremal_function_check(const CoefficientSet& coeffs);

}  // namespace foq
