#pragma once

// Composite Romberg integration over panels with fixed breakpoints.
//
// Callers place breakpoints at every kink of the integrand; inside a panel the
// integrand must be smooth. All panels are refined dyadically together, the
// trapezoid sums are Richardson-extrapolated (the first column is composite
// Simpson) and iteration stops once two successive diagonal entries agree to
// `abs_tol`. Summation order is fixed so results are bit-reproducible.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <span>
#include <type_traits>
#include <vector>

#include "foq/types.hpp"

namespace foq::integration {

struct Options {
  double abs_tol = 1e-10;
  int min_levels = 4;
  int max_levels = 20;
};

template <class T>
struct Result {
  T value{};
  int levels = 0;
  double last_change = 0.0;
  std::size_t evaluations = 0;
};

/// Smallest refinement level that puts at least `samples_per_cycle` points on
/// every oscillation of exp(2 pi i omega x) across a panel of width `panel_width`.
inline int levels_for_frequency(double panel_width, double omega, int samples_per_cycle = 8) {
  const double cycles = std::abs(omega) * panel_width;
  const double needed = std::max(1.0, cycles * samples_per_cycle);
  return static_cast<int>(std::ceil(std::log2(needed)));
}

/// Evenly spaced breakpoints lo, lo + (hi - lo)/n, ..., hi.
inline std::vector<double> uniform_breaks(double lo, double hi, std::size_t n) {
  std::vector<double> x(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    x[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
  }
  x.back() = hi;
  return x;
}

template <class F>
auto romberg(F&& f, std::span<const double> breaks, const Options& opt = {})
    -> Result<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  if (breaks.size() < 2) {
    throw ArgumentError("integration needs at least two breakpoints");
  }
  for (std::size_t p = 1; p < breaks.size(); ++p) {
    if (!(breaks[p] > breaks[p - 1])) {
      throw ArgumentError("integration breakpoints must be strictly increasing");
    }
  }

  const std::size_t panels = breaks.size() - 1;
  Result<T> out;

  T trap{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double w = breaks[p + 1] - breaks[p];
    trap += 0.5 * w * (f(breaks[p]) + f(breaks[p + 1]));
  }
  out.evaluations = 2 * panels;

  std::vector<T> prev{trap};
  std::vector<T> row;
  for (int level = 1; level <= opt.max_levels; ++level) {
    const std::size_t sub = std::size_t{1} << level;
    T mid{};
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = breaks[p];
      const double w = breaks[p + 1] - lo;
      const double dx = w / static_cast<double>(sub);
      T panel_sum{};
      for (std::size_t j = 1; j < sub; j += 2) {
        panel_sum += f(lo + dx * static_cast<double>(j));
      }
      mid += dx * panel_sum;
    }
    out.evaluations += panels * (sub / 2);

    row.assign(static_cast<std::size_t>(level) + 1, T{});
    row[0] = 0.5 * prev[0] + mid;
    double factor = 1.0;
    for (int j = 1; j <= level; ++j) {
      factor *= 4.0;
      row[j] = row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0);
    }

    const double change = std::abs(row[level] - prev[level - 1]);
    out.value = row[level];
    out.levels = level;
    out.last_change = change;
    if (level >= opt.min_levels && change < opt.abs_tol) {
      return out;
    }
    prev.swap(row);
  }

  std::ostringstream msg;
  msg << "integration did not converge after " << opt.max_levels << " dyadic levels over "
      << panels << " panel(s) on [" << breaks.front() << ", " << breaks.back()
      << "]; last change " << out.last_change << " > tolerance " << opt.abs_tol;
  throw NumericalError(msg.str());
}

}  // namespace foq::integration
