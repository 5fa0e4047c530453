#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace foq::cli {

enum class Command { coeffs, norm, integrate, validate, convergence };
enum class Format { json, csv };

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kIo = 3 };

struct Sweep {
  std::size_t min_nodes = 10;
  std::size_t max_nodes = 160;
  std::size_t factor = 2;
};

struct RunConfig {
  Command command = Command::coeffs;
  std::optional<double> omega;
  std::optional<std::size_t> nodes;
  std::pair<double, double> interval{0.0, 1.0};
  Format format = Format::json;
  std::optional<std::string> function;
  std::optional<std::string> samples_path;
  std::optional<Sweep> sweep;

  bool oracle_generator = false;  // coeffs: solve the linear system instead
  bool bruteforce = false;        // norm: add the brute-force value
  bool bound = false;             // integrate: attach the error bound
  bool extremal = false;          // validate: include the extremal-function pairing
};

/// Throws foq::ArgumentError describing the first violated constraint.
void validate_config(const RunConfig& cfg);

/// Executes a validated configuration; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv, validates and runs. Usage problems return kUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace foq::cli
