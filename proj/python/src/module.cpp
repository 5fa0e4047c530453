#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"
#include "foq/oracle.hpp"
#include "foq/quadrature.hpp"
#include "foq/validation.hpp"

namespace py = pybind11;

namespace {

using foq::complex;

py::array_t<complex> to_array(const std::vector<complex>& v) {
  py::array_t<complex> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

foq::UniformGrid make_grid(std::size_t n, double a, double b) { return foq::UniformGrid(a, b, n); }

py::dict quadrature_dict(const foq::QuadratureResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["error_bound"] = r.error_bound ? py::cast(*r.error_bound) : py::none();
  d["norm_used"] = r.norm_used ? py::cast(*r.norm_used) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal quadrature for Fourier integrals in W2^(1,0)";

  py::register_exception<foq::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<foq::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<foq::DataError>(m, "DataError", PyExc_ValueError);

  m.def(
      "optimal_coefficients",
      [](double omega, std::size_t n, double a, double b) {
        return to_array(foq::optimal_coefficients(foq::FourierWeight(omega), make_grid(n, a, b)).values);
      },
      py::arg("omega"), py::arg("n_intervals"), py::arg("a") = 0.0, py::arg("b") = 1.0,
      "Weights C_0..C_N for int_a^b exp(2 pi i omega x) phi(x) dx on N equal intervals.");

  m.def(
      "oracle_coefficients",
      [](double omega, std::size_t n, double a, double b) {
        return to_array(foq::oracle_coefficients(foq::FourierWeight(omega), make_grid(n, a, b)).values);
      },
      py::arg("omega"), py::arg("n_intervals"), py::arg("a") = 0.0, py::arg("b") = 1.0,
      "Same weights obtained by solving the optimality system directly.");

  m.def("trapezoid_coefficients", &foq::trapezoid_coefficients, py::arg("n_intervals"));

  m.def(
      "norm_squared",
      [](double omega, std::size_t n) { return foq::norm_squared_closed(foq::FourierWeight(omega), n); },
      py::arg("omega"), py::arg("n_intervals"));

  m.def(
      "norm_squared_asymptotic",
      [](double omega, double h) { return foq::norm_squared_asymptotic(foq::FourierWeight(omega), h); },
      py::arg("omega"), py::arg("h"));

  m.def(
      "norm_squared_bruteforce",
      [](double omega, std::size_t n, std::optional<std::vector<complex>> weights) {
        const foq::BruteForceNorm bf(foq::FourierWeight(omega), n);
        if (weights) return bf(*weights);
        return bf(foq::optimal_coefficients_unit(foq::FourierWeight(omega), n));
      },
      py::arg("omega"), py::arg("n_intervals"), py::arg("weights") = py::none(),
      "Squared error-functional norm by numerical integration; defaults to the optimal weights.");

  m.def(
      "integrate",
      [](py::object f, double omega, std::optional<std::size_t> n, double a, double b, bool bound,
         std::optional<std::function<complex(double)>> derivative) {
        const foq::FourierWeight w(omega);
        if (py::isinstance<py::function>(f)) {
          if (!n) throw foq::ArgumentError("n_intervals is required when f is callable");
          const auto fn = f.cast<std::function<complex(double)>>();
          foq::IntegrateOptions opt;
          opt.with_bound = bound;
          if (derivative) opt.derivative = *derivative;
          return quadrature_dict(foq::integrate_fourier(fn, w, make_grid(*n, a, b), opt));
        }
        auto values = f.cast<std::vector<complex>>();
        if (values.size() < 2) throw foq::ArgumentError("need at least two samples");
        const foq::UniformGrid grid(a, b, values.size() - 1);
        if (n && *n != grid.intervals()) {
          throw foq::ArgumentError("n_intervals does not match the number of samples");
        }
        const foq::SampledFunction s(std::move(values), grid);
        const auto r = foq::integrate_samples(s, w, bound);
        return quadrature_dict(r);
      },
      py::arg("f"), py::arg("omega"), py::arg("n_intervals") = py::none(), py::arg("a") = 0.0,
      py::arg("b") = 1.0, py::arg("bound") = false, py::arg("derivative") = py::none(),
      "Integrate a callable sampled at the nodes, or an array of N + 1 node values.");

  m.def(
      "builtin_functions",
      [] {
        std::vector<std::string> names;
        for (const auto& f : foq::builtin_functions()) names.push_back(f.name);
        return names;
      });

  m.def(
      "discrete_identity_violation",
      [](double h, long k_min, long k_max) {
        return foq::verify_discrete_identities(h, k_min, k_max).worst_scaled();
      },
      py::arg("h"), py::arg("k_min") = -50, py::arg("k_max") = 50);

  m.def(
      "extremal_discrepancy",
      [](double omega, std::size_t n) {
        const auto c = foq::optimal_coefficients_unit(foq::FourierWeight(omega), n);
        return foq::extremal_function_check(c).relative_discrepancy;
      },
      py::arg("omega"), py::arg("n_intervals"));

  m.def(
      "certify",
      [](std::optional<std::vector<double>> omegas, std::optional<std::vector<std::size_t>> ns,
         bool strict) {
        const auto rep = foq::certify(omegas.value_or(foq::certification_omegas()),
                                      ns.value_or(foq::certification_intervals()),
                                      strict ? foq::ToleranceProfile::strict
                                             : foq::ToleranceProfile::standard);
        py::dict d;
        d["passed"] = rep.passed();
        d["report"] = py::module_::import("json").attr("loads")(foq::to_json(rep).dump());
        return d;
      },
      py::arg("omegas") = py::none(), py::arg("n_intervals") = py::none(), py::arg("strict") = false);
}
