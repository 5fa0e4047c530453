#include "foq/types.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace foq {

FourierWeight::FourierWeight(double omega) : omega_(omega) {
  if (!std::isfinite(omega)) {
    throw ArgumentError("omega must be finite");
  }
}

UniformGrid::UniformGrid(double a, double b, std::size_t n_intervals)
    : a_(a), b_(b), n_(n_intervals) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ArgumentError("interval endpoints must be finite");
  }
  if (!(b > a)) {
    throw ArgumentError("interval requires b > a");
  }
  if (n_intervals < 1) {
    throw ArgumentError("number of intervals must be at least 1");
  }
}

double UniformGrid::node(std::size_t k) const {
  if (k > n_) {
    throw ArgumentError("node index out of range");
  }
  if (k == n_) {
    return b_;
  }
  return a_ + step() * static_cast<double>(k);
}

std::vector<double> UniformGrid::nodes() const {
  std::vector<double> x(size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = node(k);
  }
  return x;
}

std::string to_string(Generator g) {
  return g == Generator::oracle ? "oracle" : "closed-form";
}

Generator generator_from_string(const std::string& s) {
  if (s == "closed-form") return Generator::closed_form;
  if (s == "oracle") return Generator::oracle;
  throw ArgumentError("unknown generator '" + s + "'");
}

CoefficientSet::CoefficientSet(std::vector<complex> v, FourierWeight w, UniformGrid g,
                               Generator gen)
    : values(std::move(v)), weight(w), grid(g), generator(gen) {
  if (values.size() != grid.size()) {
    throw ArgumentError("coefficient count does not match grid node count");
  }
}

std::vector<double> CoefficientSet::real_parts() const {
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = values[k].real();
  return out;
}

std::vector<double> CoefficientSet::imag_parts() const {
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = values[k].imag();
  return out;
}

complex unit_phase(double cycles) noexcept {
  const double r = cycles - std::nearbyint(cycles);
  const double angle = 2.0 * std::numbers::pi * r;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace foq
