#include "foq/error_norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "foq/coefficients.hpp"
#include "foq/integration.hpp"
#include "foq/oracle.hpp"

namespace foq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBruteForceTol = 1e-10;

void require_intervals(std::size_t n) {
  if (n < 1) {
    throw ArgumentError("number of intervals must be at least 1");
  }
}

}  // namespace

double norm_squared_closed(FourierWeight weight, std::size_t n_intervals) {
  require_intervals(n_intervals);
  const double w = weight.omega();
  const double h = 1.0 / static_cast<double>(n_intervals);
  const double kappa = kTwoPi * kTwoPi * w * w + 1.0;

  // 1 + e^{2h} - 2 e^h cos(2 pi w h) = (e^h - 1)^2 + 4 e^h sin^2(pi w h)
  const double cycles = w * h;
  const double half_sin = std::sin(std::numbers::pi * (cycles - std::nearbyint(cycles)));
  const double em1 = std::expm1(h);
  const double common = em1 * em1 + 4.0 * std::exp(h) * half_sin * half_sin;

  const double fitted = 2.0 * common / (h * std::expm1(2.0 * h));
  return (kappa - fitted) / (kappa * kappa);
}

double norm_squared_asymptotic(FourierWeight weight, double h) {
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw ArgumentError("step must be a finite non-negative number");
  }
  const double w = weight.omega();
  const double h2 = h * h;
  return h2 / 12.0 - (kTwoPi * kTwoPi * w * w + 3.0) / 360.0 * h2 * h2;
}

BruteForceNorm::BruteForceNorm(FourierWeight weight, std::size_t n_intervals)
    : weight_(weight), n_(n_intervals) {
  require_intervals(n_intervals);
  const double w = weight.omega();
  const double h = 1.0 / static_cast<double>(n_);
  const std::vector<double> nodes = UniformGrid::unit(n_).nodes();

  // G(x - h k) has its kink at a node, so node-aligned panels are smooth.
  integration::Options opt;
  opt.abs_tol = kBruteForceTol;
  opt.min_levels = std::max(3, integration::levels_for_frequency(h, w));

  moments_.resize(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) {
    const double xk = nodes[k];
    auto integrand = [&](double x) {
      return std::polar(1.0, kTwoPi * w * x) * kernel_G(x - xk);
    };
    moments_[k] = integration::romberg(integrand, nodes, opt).value;
  }

  // Double integral of a function of x - y: reduces to weight (1 - |t|) on [-1, 1].
  integration::Options dopt;
  dopt.abs_tol = kBruteForceTol;
  dopt.min_levels = std::max(3, integration::levels_for_frequency(1.0, w));
  const double breaks[] = {-1.0, 0.0, 1.0};
  double_integral_ = integration::romberg(
                         [&](double t) {
                           return (1.0 - std::abs(t)) * std::cos(kTwoPi * w * t) * kernel_G(t);
                         },
                         breaks, dopt)
                         .value;
}

double BruteForceNorm::operator()(const std::vector<complex>& c) const {
  if (c.size() != n_ + 1) {
    throw ArgumentError("weight count does not match grid node count");
  }
  const double h = 1.0 / static_cast<double>(n_);

  // sum_{k,j} Re(C_k conj(C_j)) G(h(k - j)); G is even with G(0) = 0.
  double quad = 0.0;
  for (std::size_t k = 0; k <= n_; ++k) {
    double row = 0.0;
    for (std::size_t j = 0; j <= n_; ++j) {
      const double g = kernel_G(h * (static_cast<double>(k) - static_cast<double>(j)));
      row += (c[k].real() * c[j].real() + c[k].imag() * c[j].imag()) * g;
    }
    quad += row;
  }

  double cross = 0.0;
  for (std::size_t k = 0; k <= n_; ++k) {
    cross += c[k].real() * moments_[k].real() + c[k].imag() * moments_[k].imag();
  }

  return -(quad - 2.0 * cross + double_integral_);
}

double BruteForceNorm::operator()(const CoefficientSet& coeffs) const {
  if (!coeffs.grid.is_unit() || coeffs.grid.intervals() != n_ || !(coeffs.weight == weight_)) {
    throw ArgumentError("coefficients do not match this brute-force evaluator");
  }
  return (*this)(coeffs.values);
}

double norm_squared_bruteforce(const CoefficientSet& coeffs) {
  if (!coeffs.grid.is_unit()) {
    throw ArgumentError("brute-force norm requires coefficients on [0, 1]");
  }
  return BruteForceNorm(coeffs.weight, coeffs.grid.intervals())(coeffs);
}

ErrorNormReport error_norm_report(FourierWeight weight, const UniformGrid& grid,
                                  bool with_bruteforce) {
  const FourierWeight unit_weight(weight.omega() * grid.length());
  const std::size_t n = grid.intervals();
  ErrorNormReport rep{norm_squared_closed(unit_weight, n),
                      norm_squared_asymptotic(unit_weight, 1.0 / static_cast<double>(n)),
                      std::nullopt, weight, grid};
  if (with_bruteforce) {
    rep.brute_force_value = norm_squared_bruteforce(optimal_coefficients_unit(unit_weight, n));
  }
  return rep;
}

}  // namespace foq
