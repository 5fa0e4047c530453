#pragma once

// Certification sweeps: every closed form is checked against its independent
// route (oracle solve, brute-force norm, numerical moments, the separate real
// and imaginary forms) and against the structural invariants of the weights.

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "foq/types.hpp"

namespace foq {

enum class ToleranceProfile { standard, strict };

struct Tolerances {
  double coefficient = 1e-10;       // max |closed - oracle|
  double lagrange_d = 1e-10;        // |d|
  double residual = 1e-10;          // ||Ax - b|| / (||A|| ||x||)
  double exactness = 1e-12;         // relative, on exp(-x) and exp(x)
  double symmetry = 1e-15;          // conjugate symmetry, relative to max |C|
  double modulation = 1e-12;        // interior phase pattern, relative to |C_1|
  double real_imag = 1e-11;         // real/imag closed forms, absolute
  double norm_bruteforce = 1e-8;    // |closed - brute force|
  double moments = 1e-10;           // closed-form f(hk) vs numerical integral
  double discrete = 1e-12;          // scaled discrete-identity violation
  double continuity = 1e-6;         // omega -> 0 limit against the trapezoid weights
};

[[nodiscard]] Tolerances tolerances(ToleranceProfile profile);

/// Reads FOQ_TOLERANCE_PROFILE ("strict" or "default"; unset means default).
/// Throws ArgumentError for any other value.
[[nodiscard]] ToleranceProfile profile_from_env();
[[nodiscard]] std::string to_string(ToleranceProfile p);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CaseReport {
  double omega = 0.0;
  std::size_t n_intervals = 0;
  std::vector<CheckResult> checks;
  std::string error;  // non-empty if a stage threw

  [[nodiscard]] bool passed() const;
};

struct ValidationReport {
  ToleranceProfile profile = ToleranceProfile::standard;
  std::vector<CaseReport> cases;
  std::vector<CheckResult> global;

  [[nodiscard]] bool passed() const;
};

struct ValidationOptions {
  bool extremal = false;       // also run the extremal-function pairing (slow for large N)
  unsigned perturbations = 3;  // random feasible perturbations for the minimality check
  unsigned seed = 20191203;
};

/// The certification grid: omega in {0, +-0.3, +-1, +-2.7, +-10, +-50}.
[[nodiscard]] std::vector<double> certification_omegas();
/// N in {1, 2, 5, 10, 50, 200}.
[[nodiscard]] std::vector<std::size_t> certification_intervals();

[[nodiscard]] CaseReport certify_case(FourierWeight weight, std::size_t n_intervals,
                                      const Tolerances& tol, const ValidationOptions& opt = {});

/// Every (omega, N) pair plus the global omega -> 0 continuity check. Case
/// order in the report follows the input order.
[[nodiscard]] ValidationReport certify(const std::vector<double>& omegas,
                                       const std::vector<std::size_t>& intervals,
                                       ToleranceProfile profile, const ValidationOptions& opt = {});

[[nodiscard]] nlohmann::json to_json(const CheckResult& c);
[[nodiscard]] nlohmann::json to_json(const CaseReport& c);
[[nodiscard]] nlohmann::json to_json(const ValidationReport& r);

}  // namespace foq
