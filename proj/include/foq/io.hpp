#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "foq/error_norm.hpp"
#include "foq/quadrature.hpp"
#include "foq/types.hpp"

namespace foq::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal rendering with 17 significant digits (round-trips binary64).
[[nodiscard]] std::string format_double(double v);

/// {omega, a, b, n_intervals, coefficients: [{re, im}, ...], generator}
[[nodiscard]] nlohmann::json to_json(const CoefficientSet& coeffs);
[[nodiscard]] CoefficientSet coefficients_from_json(const nlohmann::json& j);

/// Header `index,x,re,im`, one row per node.
void write_coefficients_csv(std::ostream& os, const CoefficientSet& coeffs);

[[nodiscard]] nlohmann::json to_json(const ErrorNormReport& rep);
[[nodiscard]] nlohmann::json to_json(const QuadratureResult& res);

/// Sample files: header `x,re,im`, N + 1 rows, x strictly increasing and
/// uniform to 1e-12 relative to b - a. Anything else throws DataError.
[[nodiscard]] SampledFunction read_samples_csv(std::istream& is);
/// As above; throws IoError if the file cannot be opened.
[[nodiscard]] SampledFunction load_samples_csv(const std::filesystem::path& path);
void write_samples_csv(std::ostream& os, const SampledFunction& samples);

}  // namespace foq::io
