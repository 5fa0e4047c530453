#include "foq/coefficients.hpp"

#include <cmath>
#include <numbers>

namespace foq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pieces shared by every weight, for scaled frequency w and unit step s = 1/N.
//   common   = 1 + e^{2s} - 2 e^s cos(2 pi w s)
//   end_imag = 2 pi w (e^{2s} - 1) - 2 e^s sin(2 pi w s)
//   denom    = (e^{2s} - 1) ((2 pi w)^2 + 1)
// `cycles` is w s, passed separately so callers control how it is rounded.
struct Shape {
  double common;
  double end_imag;
  double denom;
};

Shape shape(double w, std::size_t n, double cycles) {
  const double s = 1.0 / static_cast<double>(n);
  const double em1 = std::expm1(s);
  const double e2m1 = std::expm1(2.0 * s);
  const double es = std::exp(s);

  const double r = cycles - std::nearbyint(cycles);
  const double half_sin = std::sin(std::numbers::pi * r);
  const double sin_theta = std::sin(kTwoPi * r);

  const double kw = kTwoPi * w;
  Shape out{};
  out.common = em1 * em1 + 4.0 * es * half_sin * half_sin;
  out.end_imag = kw * e2m1 - 2.0 * es * sin_theta;
  out.denom = e2m1 * (kw * kw + 1.0);
  return out;
}

void require_intervals(std::size_t n) {
  if (n < 1) {
    throw ArgumentError("number of intervals must be at least 1");
  }
}

}  // namespace

CoefficientSet optimal_coefficients_unit(FourierWeight weight, std::size_t n_intervals) {
  require_intervals(n_intervals);
  const double w = weight.omega();
  const std::size_t n = n_intervals;
  const double nd = static_cast<double>(n);
  const Shape sh = shape(w, n, w / nd);

  std::vector<complex> c(n + 1);
  const complex first{sh.common / sh.denom, sh.end_imag / sh.denom};
  const double interior = 2.0 * sh.common / sh.denom;

  c[0] = first;
  for (std::size_t k = 1; k < n; ++k) {
    c[k] = interior * unit_phase(w * static_cast<double>(k) / nd);
  }
  // Last weight: e^{2 pi i w} times the conjugate of the first numerator.
  c[n] = unit_phase(w) * std::conj(first);

  return CoefficientSet(std::move(c), weight, UniformGrid::unit(n), Generator::closed_form);
}

CoefficientSet optimal_coefficients(FourierWeight weight, const UniformGrid& grid) {
  if (grid.is_unit()) return optimal_coefficients_unit(weight, grid.intervals());
  const double w = weight.omega();
  const double len = grid.length();
  const std::size_t n = grid.intervals();
  const double h = grid.step();
  const Shape sh = shape(w * len, n, w * h);

  std::vector<complex> c(n + 1);
  const double scale = len / sh.denom;
  c[0] = scale * unit_phase(w * grid.a()) * complex{sh.common, sh.end_imag};
  for (std::size_t k = 1; k < n; ++k) {
    c[k] = 2.0 * scale * sh.common * unit_phase(w * grid.node(k));
  }
  c[n] = scale * unit_phase(w * grid.b()) * complex{sh.common, -sh.end_imag};

  return CoefficientSet(std::move(c), weight, grid, Generator::closed_form);
}

std::vector<double> cosine_coefficients(FourierWeight weight, std::size_t n_intervals) {
  return optimal_coefficients_unit(weight, n_intervals).real_parts();
}

std::vector<double> sine_coefficients(FourierWeight weight, std::size_t n_intervals) {
  return optimal_coefficients_unit(weight, n_intervals).imag_parts();
}

std::vector<double> trapezoid_coefficients(std::size_t n_intervals) {
  require_intervals(n_intervals);
  const double h = 1.0 / static_cast<double>(n_intervals);
  const double end = std::tanh(0.5 * h);
  std::vector<double> c(n_intervals + 1, 2.0 * end);
  c.front() = end;
  c.back() = end;
  return c;
}

}  // namespace foq
