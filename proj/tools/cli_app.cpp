#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "foq/coefficients.hpp"
#include "foq/error_norm.hpp"
#include "foq/io.hpp"
#include "foq/oracle.hpp"
#include "foq/quadrature.hpp"
#include "foq/validation.hpp"

namespace foq::cli {
namespace {

using nlohmann::json;
using io::format_double;

UniformGrid grid_of(const RunConfig& cfg) {
  return UniformGrid(cfg.interval.first, cfg.interval.second, *cfg.nodes);
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int run_coeffs(const RunConfig& cfg, std::ostream& out) {
  const FourierWeight w(*cfg.omega);
  const UniformGrid grid = grid_of(cfg);
  const CoefficientSet c =
      cfg.oracle_generator ? oracle_coefficients(w, grid) : optimal_coefficients(w, grid);
  if (cfg.format == Format::csv) {
    io::write_coefficients_csv(out, c);
  } else {
    emit_json(out, io::to_json(c));
  }
  return kOk;
}

int run_norm(const RunConfig& cfg, std::ostream& out) {
  const ErrorNormReport rep = error_norm_report(FourierWeight(*cfg.omega), grid_of(cfg), cfg.bruteforce);
  if (cfg.format == Format::csv) {
    out << "omega,a,b,n_intervals,h,norm_squared,norm,asymptotic_estimate,brute_force_value\n"
        << format_double(rep.weight.omega()) << ',' << format_double(rep.grid.a()) << ','
        << format_double(rep.grid.b()) << ',' << rep.grid.intervals() << ','
        << format_double(rep.grid.step()) << ',' << format_double(rep.norm_squared) << ','
        << format_double(std::sqrt(std::max(0.0, rep.norm_squared))) << ','
        << format_double(rep.asymptotic_estimate) << ','
        << (rep.brute_force_value ? format_double(*rep.brute_force_value) : "") << '\n';
  } else {
    emit_json(out, io::to_json(rep));
  }
  return kOk;
}

int run_integrate(const RunConfig& cfg, std::ostream& out) {
  const FourierWeight w(*cfg.omega);
  json meta{{"omega", w.omega()}};
  QuadratureResult res;
  std::optional<complex> reference;

  if (cfg.samples_path) {
    const SampledFunction s = io::load_samples_csv(*cfg.samples_path);
    res = integrate_samples(s, w, cfg.bound);
    meta["samples"] = *cfg.samples_path;
    meta["a"] = s.grid.a();
    meta["b"] = s.grid.b();
    meta["n_intervals"] = s.grid.intervals();
  } else {
    const TestFunction& f = builtin_function(*cfg.function);
    const UniformGrid grid = grid_of(cfg);
    IntegrateOptions opt;
    opt.with_bound = cfg.bound;
    opt.derivative = f.derivative;
    opt.pure_sampler = true;
    res = integrate_fourier(f.value, w, grid, opt);
    reference = reference_fourier_integral(f.value, w, grid.a(), grid.b());
    meta["function"] = f.name;
    meta["a"] = grid.a();
    meta["b"] = grid.b();
    meta["n_intervals"] = grid.intervals();
  }

  if (cfg.format == Format::csv) {
    out << "re,im,error_bound,norm_used,reference_re,reference_im\n"
        << format_double(res.value.real()) << ',' << format_double(res.value.imag()) << ','
        << (res.error_bound ? format_double(*res.error_bound) : "") << ','
        << (res.norm_used ? format_double(*res.norm_used) : "") << ','
        << (reference ? format_double(reference->real()) : "") << ','
        << (reference ? format_double(reference->imag()) : "") << '\n';
  } else {
    json j = io::to_json(res);
    j.update(meta);
    if (reference) {
      j["reference"] = {{"re", reference->real()}, {"im", reference->imag()}};
      j["observed_error"] = std::abs(*reference - res.value);
    }
    emit_json(out, j);
  }
  return kOk;
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<double> omegas =
      cfg.omega ? std::vector<double>{*cfg.omega} : certification_omegas();
  const std::vector<std::size_t> nodes =
      cfg.nodes ? std::vector<std::size_t>{*cfg.nodes} : certification_intervals();
  ValidationOptions opt;
  opt.extremal = cfg.extremal;
  const ValidationReport rep = certify(omegas, nodes, profile_from_env(), opt);

  if (cfg.format == Format::csv) {
    out << "omega,n_intervals,check,value,tolerance,passed\n";
    for (const auto& c : rep.cases) {
      for (const auto& ch : c.checks) {
        out << format_double(c.omega) << ',' << c.n_intervals << ',' << ch.name << ','
            << format_double(ch.value) << ',' << format_double(ch.tolerance) << ','
            << (ch.passed ? "true" : "false") << '\n';
      }
      if (!c.error.empty()) {
        out << format_double(c.omega) << ',' << c.n_intervals << ",error,,,false\n";
      }
    }
    for (const auto& g : rep.global) {
      out << ",," << g.name << ',' << format_double(g.value) << ',' << format_double(g.tolerance)
          << ',' << (g.passed ? "true" : "false") << '\n';
    }
  } else {
    emit_json(out, to_json(rep));
  }

  if (!rep.passed()) {
    for (const auto& c : rep.cases) {
      if (c.passed()) continue;
      err << "validation failed for omega=" << c.omega << " N=" << c.n_intervals;
      for (const auto& ch : c.checks) {
        if (!ch.passed) err << " [" << ch.name << "=" << ch.value << " > " << ch.tolerance << "]";
      }
      if (!c.error.empty()) err << " [error: " << c.error << "]";
      err << '\n';
    }
    for (const auto& g : rep.global) {
      if (!g.passed) err << "validation failed: " << g.name << "=" << g.value << '\n';
    }
    return kValidationFailed;
  }
  return kOk;
}

int run_convergence(const RunConfig& cfg, std::ostream& out) {
  const FourierWeight w(*cfg.omega);
  const Sweep sw = *cfg.sweep;
  const auto [a, b] = cfg.interval;
  const FourierWeight unit_w(w.omega() * (b - a));
  const auto& fns = builtin_functions();

  std::vector<complex> refs;
  for (const auto& f : fns) refs.push_back(reference_fourier_integral(f.value, w, a, b));

  struct Row {
    std::size_t n;
    double h;
    double norm;
    std::vector<double> errors;
  };
  std::vector<Row> rows;
  for (std::size_t n = sw.min_nodes; n <= sw.max_nodes; n *= sw.factor) {
    const UniformGrid grid(a, b, n);
    Row r{n, grid.step(), std::sqrt(std::max(0.0, norm_squared_closed(unit_w, n))), {}};
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const QuadratureResult q = integrate_fourier(fns[i].value, w, grid);
      r.errors.push_back(std::abs(q.value - refs[i]));
    }
    rows.push_back(std::move(r));
  }

  std::vector<double> lh, ln;
  for (const auto& r : rows) {
    lh.push_back(std::log(r.h));
    ln.push_back(std::log(r.norm));
  }
  const double slope = rows.size() >= 2 ? fit_slope(lh, ln) : std::nan("");

  // Error slopes are only meaningful when no error sits at rounding level.
  std::vector<std::optional<double>> err_slopes;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    std::vector<double> le;
    bool usable = rows.size() >= 2;
    for (const auto& r : rows) {
      usable = usable && r.errors[i] > 1e-13;
      le.push_back(std::log(std::max(r.errors[i], 1e-300)));
    }
    err_slopes.push_back(usable ? std::optional<double>(fit_slope(lh, le)) : std::nullopt);
  }

  if (cfg.format == Format::csv) {
    out << "n_intervals,h,norm";
    for (const auto& f : fns) out << ",err_" << f.name;
    out << '\n';
    for (const auto& r : rows) {
      out << r.n << ',' << format_double(r.h) << ',' << format_double(r.norm);
      for (double e : r.errors) out << ',' << format_double(e);
      out << '\n';
    }
    out << "# norm_slope," << format_double(slope) << '\n';
  } else {
    json jrows = json::array();
    for (const auto& r : rows) {
      json errs;
      for (std::size_t i = 0; i < fns.size(); ++i) errs[fns[i].name] = r.errors[i];
      jrows.push_back({{"n_intervals", r.n}, {"h", r.h}, {"norm", r.norm}, {"errors", errs}});
    }
    json slopes;
    for (std::size_t i = 0; i < fns.size(); ++i) {
      slopes[fns[i].name] = err_slopes[i] ? json(*err_slopes[i]) : json(nullptr);
    }
    emit_json(out, {{"omega", w.omega()},
                    {"a", a},
                    {"b", b},
                    {"rows", jrows},
                    {"norm_slope", slope},
                    {"error_slopes", slopes}});
  }
  return kOk;
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  const bool needs_omega = cfg.command != Command::validate;
  if (needs_omega && !cfg.omega) throw ArgumentError("--omega is required");
  if (cfg.omega && !std::isfinite(*cfg.omega)) throw ArgumentError("--omega must be finite");
  if (cfg.nodes && *cfg.nodes < 1) throw ArgumentError("--nodes must be at least 1");
  if (!(cfg.interval.second > cfg.interval.first)) throw ArgumentError("interval needs b > a");

  switch (cfg.command) {
    case Command::coeffs:
    case Command::norm:
      if (!cfg.nodes) throw ArgumentError("--nodes is required");
      break;
    case Command::integrate:
      if (cfg.function.has_value() == cfg.samples_path.has_value()) {
        throw ArgumentError("integrate needs exactly one of --function or --samples");
      }
      if (cfg.function && !cfg.nodes) throw ArgumentError("--nodes is required with --function");
      if (cfg.function) (void)builtin_function(*cfg.function);
      break;
    case Command::convergence:
      if (!cfg.sweep) throw ArgumentError("convergence needs a sweep");
      if (cfg.sweep->min_nodes < 1) throw ArgumentError("--min-nodes must be at least 1");
      if (!(cfg.sweep->min_nodes < cfg.sweep->max_nodes)) {
        throw ArgumentError("--min-nodes must be smaller than --max-nodes");
      }
      if (cfg.sweep->factor < 2) throw ArgumentError("--factor must be at least 2");
      break;
    case Command::validate:
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg);
    switch (cfg.command) {
      case Command::coeffs: return run_coeffs(cfg, out);
      case Command::norm: return run_norm(cfg, out);
      case Command::integrate: return run_integrate(cfg, out);
      case Command::validate: return run_validate(cfg, out, err);
      case Command::convergence: return run_convergence(cfg, out);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailed;
  }
  return kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal quadrature for Fourier integrals in W2^(1,0)", "foq"};
  app.require_subcommand(1);

  RunConfig cfg;
  double omega = 0.0;
  std::size_t nodes = 0;
  double a = 0.0;
  double b = 1.0;
  std::string format = "json";
  std::string generator = "closed-form";
  std::string function;
  std::string samples;
  Sweep sweep;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool omega_required) {
    auto* o = sub->add_option("--omega", omega, "Frequency of the weight exp(2 pi i omega x)");
    if (omega_required) o->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto interval = [&](CLI::App* sub) {
    sub->add_option("--a", a, "Left end of the interval")->capture_default_str();
    sub->add_option("--b", b, "Right end of the interval")->capture_default_str();
  };

  auto* c_coeffs = app.add_subcommand("coeffs", "Emit the optimal weights");
  common(c_coeffs, true);
  interval(c_coeffs);
  c_coeffs->add_option("--nodes", nodes, "Number of intervals N (N + 1 nodes)")->required();
  c_coeffs->add_option("--generator", generator, "closed-form or oracle")
      ->check(CLI::IsMember({"closed-form", "oracle"}));

  auto* c_norm = app.add_subcommand("norm", "Squared norm of the optimal error functional");
  common(c_norm, true);
  interval(c_norm);
  c_norm->add_option("--nodes", nodes, "Number of intervals N")->required();
  c_norm->add_flag("--bruteforce", cfg.bruteforce, "Also evaluate the norm by numerical integration");

  auto* c_int = app.add_subcommand("integrate", "Apply the optimal rule to a function or samples");
  common(c_int, true);
  interval(c_int);
  auto* o_nodes = c_int->add_option("--nodes", nodes, "Number of intervals N");
  auto* o_fn = c_int->add_option("--function", function,
                                 "Builtin: exp_neg, exp, one, x, x2, sin_pi, runge");
  auto* o_samples = c_int->add_option("--samples", samples, "CSV file with header x,re,im");
  o_fn->excludes(o_samples);
  o_samples->excludes(o_nodes);
  c_int->add_flag("--bound", cfg.bound, "Attach the Cauchy-Schwarz error bound");

  auto* c_val = app.add_subcommand("validate", "Certify closed forms against the oracles");
  common(c_val, false);
  c_val->add_option("--nodes", nodes, "Number of intervals N (default: full grid)");
  c_val->add_flag("--extremal", cfg.extremal, "Include the extremal-function pairing");

  auto* c_conv = app.add_subcommand("convergence", "Norm and error table over a sweep of N");
  common(c_conv, true);
  interval(c_conv);
  c_conv->add_option("--min-nodes", sweep.min_nodes)->capture_default_str();
  c_conv->add_option("--max-nodes", sweep.max_nodes)->capture_default_str();
  c_conv->add_option("--factor", sweep.factor)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  cfg.command = name == "coeffs"        ? Command::coeffs
                : name == "norm"        ? Command::norm
                : name == "integrate"   ? Command::integrate
                : name == "validate"    ? Command::validate
                                        : Command::convergence;
  cfg.format = formats.at(format);
  auto given = [sub](const char* name) {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--omega")) cfg.omega = omega;
  if (given("--nodes")) cfg.nodes = nodes;
  cfg.interval = {a, b};
  cfg.oracle_generator = generator == "oracle";
  if (!function.empty()) cfg.function = function;
  if (!samples.empty()) cfg.samples_path = samples;
  if (cfg.command == Command::convergence) cfg.sweep = sweep;

  return run(cfg, out, err);
}

}  // namespace foq::cli
