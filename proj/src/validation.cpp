#include "foq/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"
#include "foq/oracle.hpp"

namespace foq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPerturbationSize = 1e-3;
constexpr long kDiscreteRange = 50;
constexpr double kContinuityOmega = 1e-8;

CheckResult check_le(std::string name, double value, double tol) {
  const bool ok = std::isfinite(value) && value <= tol;
  return {std::move(name), value, tol, ok};
}

double max_abs_diff(const std::vector<complex>& x, const std::vector<complex>& y) {
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

double max_abs(const std::vector<complex>& x) {
  double m = 0.0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

// Real and imaginary weights written out separately, as in the cosine and
// sine rules; deliberately independent of the complex closed form. The last
// weight uses the angle 2 pi omega (1 - h), matching exp((1 - 2 pi i omega) h).
std::vector<complex> real_imag_weights(double w, std::size_t n) {
  const double h = 1.0 / static_cast<double>(n);
  const double t = kTwoPi * w;
  const double e2 = std::exp(2.0 * h);
  const double eh = std::exp(h);
  const double denom = (e2 - 1.0) * (t * t + 1.0);
  const double mid = 2.0 * (1.0 + e2 - 2.0 * eh * std::cos(t * h)) / denom;

  std::vector<complex> c(n + 1);
  c[0] = {(1.0 + e2 - 2.0 * eh * std::cos(t * h)) / denom,
          (t * (e2 - 1.0) - 2.0 * eh * std::sin(t * h)) / denom};
  for (std::size_t k = 1; k < n; ++k) {
    const double arg = t * h * static_cast<double>(k);
    c[k] = {mid * std::cos(arg), mid * std::sin(arg)};
  }
  c[n] = {(-2.0 * eh * std::cos(t - t * h) + (1.0 + e2) * std::cos(t) + t * std::sin(t) * (e2 - 1.0)) /
              denom,
          (-2.0 * eh * std::sin(t - t * h) + (1.0 + e2) * std::sin(t) - t * std::cos(t) * (e2 - 1.0)) /
              denom};
  return c;
}

// Random perturbation orthogonal (in the bilinear sense) to exp(-hk) and exp(hk),
// so both exactness constraints stay satisfied. Empty if the manifold is a point.
std::vector<complex> feasible_perturbation(std::size_t n, std::mt19937_64& rng) {
  const std::size_t m = n + 1;
  if (m <= 2) return {};
  const double h = 1.0 / static_cast<double>(n);

  std::vector<std::vector<double>> basis;
  for (double sign : {-1.0, 1.0}) {
    std::vector<double> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = std::exp(sign * h * static_cast<double>(k));
    for (const auto& q : basis) {
      double dot = 0.0;
      for (std::size_t k = 0; k < m; ++k) dot += v[k] * q[k];
      for (std::size_t k = 0; k < m; ++k) v[k] -= dot * q[k];
    }
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;
    basis.push_back(std::move(v));
  }

  std::normal_distribution<double> gauss;
  auto project = [&](std::vector<double> v) {
    for (const auto& q : basis) {
      double dot = 0.0;
      for (std::size_t k = 0; k < m; ++k) dot += v[k] * q[k];
      for (std::size_t k = 0; k < m; ++k) v[k] -= dot * q[k];
    }
    return v;
  };
  std::vector<double> re(m), im(m);
  for (auto& x : re) x = gauss(rng);
  for (auto& x : im) x = gauss(rng);
  re = project(std::move(re));
  im = project(std::move(im));

  std::vector<complex> p(m);
  for (std::size_t k = 0; k < m; ++k) p[k] = {re[k], im[k]};
  const double scale = kPerturbationSize / max_abs(p);
  for (auto& z : p) z *= scale;
  return p;
}

}  // namespace

Tolerances tolerances(ToleranceProfile profile) {
  Tolerances t;
  if (profile == ToleranceProfile::strict) {
    t.coefficient = 1e-12;
    t.lagrange_d = 1e-12;
    t.residual = 1e-13;
    t.exactness = 1e-13;
    t.modulation = 1e-13;
    t.real_imag = 1e-12;
    t.norm_bruteforce = 1e-9;
    t.moments = 1e-11;
    t.discrete = 1e-14;
    t.continuity = 1e-7;
  }
  return t;
}

ToleranceProfile profile_from_env() {
  const char* v = std::getenv("FOQ_TOLERANCE_PROFILE");
  if (v == nullptr || std::string(v).empty() || std::string(v) == "default") {
    return ToleranceProfile::standard;
  }
  if (std::string(v) == "strict") {
    return ToleranceProfile::strict;
  }
  throw ArgumentError("FOQ_TOLERANCE_PROFILE must be 'strict' or 'default', got '" +
                      std::string(v) + "'");
}

std::string to_string(ToleranceProfile p) {
  return p == ToleranceProfile::strict ? "strict" : "default";
}

bool CaseReport::passed() const {
  return error.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool ValidationReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.passed(); }) &&
         std::all_of(global.begin(), global.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<double> certification_omegas() {
  return {0.0, 0.3, -0.3, 1.0, -1.0, 2.7, -2.7, 10.0, -10.0, 50.0, -50.0};
}

std::vector<std::size_t> certification_intervals() { return {1, 2, 5, 10, 50, 200}; }

CaseReport certify_case(FourierWeight weight, std::size_t n, const Tolerances& tol,
                        const ValidationOptions& opt) {
  CaseReport rep;
  rep.omega = weight.omega();
  rep.n_intervals = n;
  auto& out = rep.checks;

  try {
    const double w = weight.omega();
    const double h = 1.0 / static_cast<double>(n);
    const CoefficientSet closed = optimal_coefficients_unit(weight, n);
    const auto& c = closed.values;

    // Oracle solve of the bordered system.
    const OracleSolution sol = oracle_solution(weight, n);
    out.push_back(check_le("coefficients_vs_oracle", max_abs_diff(c, sol.coefficients.values),
                           tol.coefficient));
    out.push_back(check_le("lagrange_d", std::abs(sol.lagrange_d), tol.lagrange_d));
    out.push_back(check_le("oracle_residual",
                           sol.residual_norm / (sol.matrix_norm * sol.solution_norm),
                           tol.residual));

    // Exactness on exp(-x) and exp(x).
    complex minus{}, plus{};
    for (std::size_t k = 0; k <= n; ++k) {
      minus += c[k] * std::exp(-h * static_cast<double>(k));
      plus += c[k] * std::exp(h * static_cast<double>(k));
    }
    const complex g_minus = rhs_g0(weight);
    const complex g_plus = rhs_g0_plus(weight);
    out.push_back(
        check_le("exactness_exp_neg", std::abs(minus - g_minus) / std::abs(g_minus), tol.exactness));
    out.push_back(
        check_le("exactness_exp_pos", std::abs(plus - g_plus) / std::abs(g_plus), tol.exactness));

    // Structure of the weights.
    {
      const CoefficientSet mirrored = optimal_coefficients_unit(-weight, n);
      std::vector<complex> conj(c.size());
      std::transform(c.begin(), c.end(), conj.begin(), [](complex z) { return std::conj(z); });
      out.push_back(check_le("conjugate_symmetry",
                             max_abs_diff(mirrored.values, conj) / max_abs(c), tol.symmetry));
    }
    {
      double dev = 0.0;
      for (std::size_t k = 2; k < n; ++k) {
        const complex expected =
            c[1] * std::polar(1.0, kTwoPi * w * h * static_cast<double>(k - 1));
        dev = std::max(dev, std::abs(c[k] - expected) / std::abs(c[1]));
      }
      out.push_back(check_le("interior_modulation", dev, tol.modulation));
    }
    out.push_back(check_le("real_imag_forms", max_abs_diff(c, real_imag_weights(w, n)),
                           tol.real_imag));
    if (w == 0.0) {
      const std::vector<double> trap = trapezoid_coefficients(n);
      double dev = 0.0;
      const double e = std::exp(h);
      for (std::size_t k = 0; k <= n; ++k) {
        const double expected = (k == 0 || k == n ? 1.0 : 2.0) * (e - 1.0) / (e + 1.0);
        dev = std::max({dev, std::abs(c[k] - expected), std::abs(trap[k] - expected)});
      }
      out.push_back(check_le("trapezoid_limit", dev, tol.real_imag));
    }

    // Error-functional norm.
    const double ns = norm_squared_closed(weight, n);
    out.push_back({"norm_nonnegative", ns, 0.0, ns >= 0.0});
    out.push_back(check_le("norm_even", std::abs(ns - norm_squared_closed(-weight, n)), 0.0));

    const BruteForceNorm brute(weight, n);
    const double bf = brute(closed);
    out.push_back(check_le("norm_vs_bruteforce", std::abs(ns - bf), tol.norm_bruteforce));

    {
      double dev = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        dev = std::max(dev, std::abs(rhs_f(weight, h, static_cast<long>(k)) -
                                     brute.node_moments()[k]));
      }
      out.push_back(check_le("moments_vs_quadrature", dev, tol.moments));
    }

    if (n + 1 > 2 && opt.perturbations > 0) {
      std::mt19937_64 rng(opt.seed + n * 1000003u);
      double min_gain = std::numeric_limits<double>::infinity();
      for (unsigned t = 0; t < opt.perturbations; ++t) {
        const std::vector<complex> p = feasible_perturbation(n, rng);
        std::vector<complex> moved(c);
        for (std::size_t k = 0; k < moved.size(); ++k) moved[k] += p[k];
        min_gain = std::min(min_gain, brute(moved) - bf);
      }
      out.push_back({"constrained_minimality", min_gain, 0.0, min_gain > 0.0});
    }

    const DiscreteIdentityReport disc = verify_discrete_identities(h, -kDiscreteRange, kDiscreteRange);
    out.push_back(check_le("discrete_identities", disc.worst_scaled(), tol.discrete));

    if (opt.extremal) {
      const ExtremalCheck ex = extremal_function_check(closed, ns);
      out.push_back(check_le("extremal_pairing", ex.relative_discrepancy, 1e-6));
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  return rep;
}

ValidationReport certify(const std::vector<double>& omegas,
                         const std::vector<std::size_t>& intervals, ToleranceProfile profile,
                         const ValidationOptions& opt) {
  const Tolerances tol = tolerances(profile);
  ValidationReport rep;
  rep.profile = profile;
  for (double w : omegas) {
    for (std::size_t n : intervals) {
      rep.cases.push_back(certify_case(FourierWeight(w), n, tol, opt));
    }
  }

  double dev = 0.0;
  for (std::size_t n : intervals) {
    const std::vector<double> trap = trapezoid_coefficients(n);
    for (double w : {kContinuityOmega, -kContinuityOmega}) {
      const CoefficientSet c = optimal_coefficients_unit(FourierWeight(w), n);
      for (std::size_t k = 0; k <= n; ++k) dev = std::max(dev, std::abs(c[k] - trap[k]));
    }
  }
  rep.global.push_back(check_le("omega_to_zero_continuity", dev, tol.continuity));
  return rep;
}

nlohmann::json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}};
}

nlohmann::json to_json(const CaseReport& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ch : c.checks) checks.push_back(to_json(ch));
  nlohmann::json j{{"omega", c.omega},
                   {"n_intervals", c.n_intervals},
                   {"passed", c.passed()},
                   {"checks", std::move(checks)}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& c : r.cases) {
    cases.push_back(to_json(c));
    if (!c.passed()) failing.push_back({{"omega", c.omega}, {"n_intervals", c.n_intervals}});
  }
  nlohmann::json global = nlohmann::json::array();
  for (const auto& g : r.global) global.push_back(to_json(g));
  return {{"profile", to_string(r.profile)},
          {"passed", r.passed()},
          {"failing_cases", std::move(failing)},
          {"global", std::move(global)},
          {"cases", std::move(cases)}};
}

}  // namespace foq
