#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace foq {

using complex = std::complex<double>;

/// Raised when an argument violates a documented precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure (adaptive integration, factorization)
/// cannot deliver a result within its budget. The message carries diagnostics.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when user-supplied data (samples, sampler output) is unusable.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frequency of the oscillatory weight exp(2 pi i omega x).
class FourierWeight {
 public:
  explicit FourierWeight(double omega);

  [[nodiscard]] double omega() const noexcept { return omega_; }
  [[nodiscard]] FourierWeight operator-() const { return FourierWeight(-omega_); }

  friend bool operator==(const FourierWeight&, const FourierWeight&) = default;

 private:
  double omega_;
};

/// Equally spaced nodes x_k = a + k h, k = 0..N, with h = (b - a) / N.
class UniformGrid {
 public:
  UniformGrid(double a, double b, std::size_t n_intervals);

  static UniformGrid unit(std::size_t n_intervals) { return UniformGrid(0.0, 1.0, n_intervals); }

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double length() const noexcept { return b_ - a_; }
  [[nodiscard]] std::size_t intervals() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_ + 1; }
  [[nodiscard]] double step() const noexcept { return (b_ - a_) / static_cast<double>(n_); }
  [[nodiscard]] bool is_unit() const noexcept { return a_ == 0.0 && b_ == 1.0; }

  /// Node k; node(0) == a and node(N) == b exactly.
  [[nodiscard]] double node(std::size_t k) const;
  [[nodiscard]] std::vector<double> nodes() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
};

enum class Generator { closed_form, oracle };

[[nodiscard]] std::string to_string(Generator g);
[[nodiscard]] Generator generator_from_string(const std::string& s);

/// Quadrature weights C_0..C_N together with the weight and grid they belong to.
struct CoefficientSet {
  std::vector<complex> values;
  FourierWeight weight;
  UniformGrid grid;
  Generator generator = Generator::closed_form;

  CoefficientSet(std::vector<complex> v, FourierWeight w, UniformGrid g,
                 Generator gen = Generator::closed_form);

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] const complex& operator[](std::size_t k) const { return values[k]; }

  [[nodiscard]] std::vector<double> real_parts() const;
  [[nodiscard]] std::vector<double> imag_parts() const;
};

/// exp(2 pi i t), with t reduced to [-1/2, 1/2] before the trig call.
[[nodiscard]] complex unit_phase(double cycles) noexcept;

}  // namespace foq
