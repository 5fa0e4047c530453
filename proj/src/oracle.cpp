#include "foq/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "foq/error_norm.hpp"
#include "foq/integration.hpp"

namespace foq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this reciprocal condition estimate the system is treated as singular.
constexpr double kSingularRcond = 1e-14;

complex exp_i(double angle) { return std::polar(1.0, angle); }

void require_unit_grid(const CoefficientSet& coeffs) {
  if (!coeffs.grid.is_unit()) {
    throw ArgumentError("coefficients must be defined on the unit interval [0, 1]");
  }
}

}  // namespace

double kernel_G(double x) noexcept { return 0.5 * std::sinh(std::abs(x)); }

complex rhs_f(FourierWeight weight, double h, long k) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("rhs_f requires a positive finite step");
  }
  const double c = h * static_cast<double>(k);
  if (k < 0 || c > 1.0 + 1e-12) {
    throw ArgumentError("rhs_f node index out of range");
  }
  const double a = kTwoPi * weight.omega();
  const complex zp{1.0, a};
  const complex zm{-1.0, a};
  return std::exp(-c) / 4.0 * (std::exp(zp) + 1.0) / zp -
         std::exp(c) / 4.0 * (std::exp(zm) + 1.0) / zm + exp_i(a * c) / (zp * zm);
}

complex rhs_g0(FourierWeight weight) noexcept {
  const complex zm{-1.0, kTwoPi * weight.omega()};
  return (std::exp(zm) - 1.0) / zm;
}

complex rhs_g0_plus(FourierWeight weight) noexcept {
  const complex zp{1.0, kTwoPi * weight.omega()};
  return (std::exp(zp) - 1.0) / zp;
}

OptimalitySystem build_system(FourierWeight weight, std::size_t n_intervals) {
  if (n_intervals < 1) {
    throw ArgumentError("number of intervals must be at least 1");
  }
  const std::size_t n = n_intervals;
  const std::size_t dim = n + 2;
  const double h = 1.0 / static_cast<double>(n);

  OptimalitySystem sys{weight, n, std::vector<complex>(dim * dim), std::vector<complex>(dim)};
  auto entry = [&](std::size_t r, std::size_t c) -> complex& { return sys.matrix[r * dim + c]; };

  for (std::size_t r = 0; r <= n; ++r) {
    for (std::size_t c = 0; c <= n; ++c) {
      const long diff = static_cast<long>(r) - static_cast<long>(c);
      entry(r, c) = kernel_G(h * static_cast<double>(diff));
    }
    const double decay = std::exp(-h * static_cast<double>(r));
    entry(r, n + 1) = decay;
    entry(n + 1, r) = decay;
    sys.rhs[r] = rhs_f(weight, h, static_cast<long>(r));
  }
  entry(n + 1, n + 1) = 0.0;
  sys.rhs[n + 1] = rhs_g0(weight);
  return sys;
}

OracleSolution solve_system(const OptimalitySystem& system) {
  const auto dim = static_cast<Eigen::Index>(system.dim());
  using RowMajor = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> a(system.matrix.data(), dim, dim);
  const Eigen::Map<const Eigen::VectorXcd> b(system.rhs.data(), dim);

  const Eigen::MatrixXcd dense = a;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(dense);
  const double rcond = lu.rcond();
  if (!(rcond > kSingularRcond)) {
    std::ostringstream msg;
    msg << "optimality system is numerically singular (omega=" << system.weight.omega()
        << ", N=" << system.n_intervals << ", rcond=" << rcond << ")";
    throw NumericalError(msg.str());
  }
  const Eigen::VectorXcd x = lu.solve(b);

  OracleSolution out{
      CoefficientSet(std::vector<complex>(x.data(), x.data() + dim - 1), system.weight,
                     UniformGrid::unit(system.n_intervals), Generator::oracle),
      x(dim - 1)};
  out.residual_norm = (dense * x - b).lpNorm<Eigen::Infinity>();
  out.matrix_norm = dense.cwiseAbs().rowwise().sum().maxCoeff();
  out.solution_norm = x.lpNorm<Eigen::Infinity>();
  out.rcond = rcond;
  return out;
}

OracleSolution oracle_solution(FourierWeight weight, std::size_t n_intervals) {
  return solve_system(build_system(weight, n_intervals));
}

CoefficientSet oracle_coefficients(FourierWeight weight, const UniformGrid& grid) {
  const double len = grid.length();
  const OracleSolution unit = oracle_solution(FourierWeight(weight.omega() * len),
                                              grid.intervals());
  const complex scale = len * exp_i(kTwoPi * weight.omega() * grid.a());
  std::vector<complex> values(unit.coefficients.values);
  for (auto& v : values) v *= scale;
  return CoefficientSet(std::move(values), weight, grid, Generator::oracle);
}

double discrete_operator_D(double h, long k) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ArgumentError("discrete operator requires a positive finite step");
  }
  // 1 - e^{2h} = -expm1(2h)
  const double e2m1 = std::expm1(2.0 * h);
  switch (std::abs(k)) {
    case 0:
      return -2.0 * (1.0 + std::exp(2.0 * h)) / e2m1;
    case 1:
      return 2.0 * std::exp(h) / e2m1;
    default:
      return 0.0;
  }
}

double DiscreteIdentityReport::worst_scaled() const {
  return *std::max_element(max_scaled_violation.begin(), max_scaled_violation.end());
}

DiscreteIdentityReport verify_discrete_identities(double h, long k_min, long k_max) {
  if (k_max < k_min) {
    throw ArgumentError("empty index range");
  }
  DiscreteIdentityReport rep;
  rep.h = h;
  rep.k_min = k_min;
  rep.k_max = k_max;

  const std::array<double, 3> stencil{discrete_operator_D(h, -1), discrete_operator_D(h, 0),
                                      discrete_operator_D(h, 1)};
  auto seq = [h](DiscreteIdentity which, long m) {
    const double x = h * static_cast<double>(m);
    switch (which) {
      case DiscreteIdentity::kernel_delta: return kernel_G(x);
      case DiscreteIdentity::exp_plus: return std::exp(x);
      case DiscreteIdentity::exp_minus: return std::exp(-x);
    }
    return 0.0;
  };

  for (int id = 0; id < 3; ++id) {
    const auto which = static_cast<DiscreteIdentity>(id);
    for (long k = k_min; k <= k_max; ++k) {
      double sum = 0.0;
      double scale = 0.0;
      for (long j = -1; j <= 1; ++j) {
        const double term = stencil[static_cast<std::size_t>(j + 1)] * seq(which, k - j);
        sum += term;
        scale += std::abs(term);
      }
      const double expected = (which == DiscreteIdentity::kernel_delta && k == 0) ? 1.0 : 0.0;
      const double abs_v = std::abs(sum - expected);
      const double scaled_v = abs_v / std::max(1.0, scale);
      rep.max_abs_violation[id] = std::max(rep.max_abs_violation[id], abs_v);
      if (scaled_v >= rep.max_scaled_violation[id]) {
        rep.max_scaled_violation[id] = scaled_v;
        rep.worst_k[id] = k;
      }
    }
  }
  return rep;
}

ExtremalCheck extremal_function_check(const CoefficientSet& coeffs, double norm_squared) {
  require_unit_grid(coeffs);
  const double a = kTwoPi * coeffs.weight.omega();
  const std::vector<double> nodes = coeffs.grid.nodes();
  const std::size_t n = coeffs.grid.intervals();

  integration::Options inner_opt;
  inner_opt.abs_tol = 1e-13;
  inner_opt.min_levels = std::max(3, integration::levels_for_frequency(1.0, coeffs.weight.omega()));

  // Continuous part of conj(l) * G, split at the kink t = x.
  auto continuous = [&](double x) {
    auto integrand = [&](double t) { return exp_i(-a * t) * kernel_G(x - t); };
    std::vector<double> breaks{0.0};
    if (x > 0.0 && x < 1.0) breaks.push_back(x);
    breaks.push_back(1.0);
    return integration::romberg(integrand, breaks, inner_opt).value;
  };
  auto psi = [&](double x) {
    complex discrete{};
    for (std::size_t k = 0; k <= n; ++k) {
      discrete += std::conj(coeffs.values[k]) * kernel_G(x - nodes[k]);
    }
    return -continuous(x) + discrete;
  };

  integration::Options outer_opt;
  outer_opt.abs_tol = 1e-12;
  outer_opt.min_levels =
      std::max(3, integration::levels_for_frequency(coeffs.grid.step(), coeffs.weight.omega()));
  const complex integral =
      integration::romberg([&](double x) { return exp_i(a * x) * psi(x); }, nodes, outer_opt)
          .value;

  complex node_sum{};
  for (std::size_t k = 0; k <= n; ++k) {
    node_sum += coeffs.values[k] * psi(nodes[k]);
  }

  ExtremalCheck out;
  out.pairing = integral - node_sum;
  out.norm_squared = norm_squared;
  out.relative_discrepancy = std::abs(out.pairing - norm_squared) / std::abs(norm_squared);
  return out;
}

ExtremalCheck extremal_function_check(const CoefficientSet& coeffs) {
  return extremal_function_check(coeffs,
                                 norm_squared_closed(coeffs.weight, coeffs.grid.intervals()));
}

}  // namespace foq
