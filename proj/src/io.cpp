#include "foq/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace foq::io {
namespace {

constexpr double kUniformityTol = 1e-12;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    std::ostringstream msg;
    msg << "line " << line << ": cannot parse '" << t << "' as a number";
    throw DataError(msg.str());
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 40> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

nlohmann::json to_json(const CoefficientSet& coeffs) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& c : coeffs.values) {
    values.push_back({{"re", c.real()}, {"im", c.imag()}});
  }
  return {{"omega", coeffs.weight.omega()},
          {"a", coeffs.grid.a()},
          {"b", coeffs.grid.b()},
          {"n_intervals", coeffs.grid.intervals()},
          {"coefficients", std::move(values)},
          {"generator", to_string(coeffs.generator)}};
}

CoefficientSet coefficients_from_json(const nlohmann::json& j) {
  try {
    const UniformGrid grid(j.at("a").get<double>(), j.at("b").get<double>(),
                           j.at("n_intervals").get<std::size_t>());
    std::vector<complex> values;
    for (const auto& c : j.at("coefficients")) {
      values.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
    }
    return CoefficientSet(std::move(values), FourierWeight(j.at("omega").get<double>()), grid,
                          generator_from_string(j.value("generator", "closed-form")));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed coefficient JSON: ") + e.what());
  }
}

void write_coefficients_csv(std::ostream& os, const CoefficientSet& coeffs) {
  os << "index,x,re,im\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    os << k << ',' << format_double(coeffs.grid.node(k)) << ','
       << format_double(coeffs.values[k].real()) << ',' << format_double(coeffs.values[k].imag())
       << '\n';
  }
}

nlohmann::json to_json(const ErrorNormReport& rep) {
  nlohmann::json j{{"omega", rep.weight.omega()},
                   {"a", rep.grid.a()},
                   {"b", rep.grid.b()},
                   {"n_intervals", rep.grid.intervals()},
                   {"h", rep.grid.step()},
                   {"norm_squared", rep.norm_squared},
                   {"norm", std::sqrt(std::max(0.0, rep.norm_squared))},
                   {"asymptotic_estimate", rep.asymptotic_estimate},
                   {"brute_force_value", nullptr}};
  if (rep.brute_force_value) {
    j["brute_force_value"] = *rep.brute_force_value;
  }
  return j;
}

nlohmann::json to_json(const QuadratureResult& res) {
  nlohmann::json j{{"value", {{"re", res.value.real()}, {"im", res.value.imag()}}},
                   {"error_bound", nullptr},
                   {"norm_used", nullptr}};
  if (res.error_bound) j["error_bound"] = *res.error_bound;
  if (res.norm_used) j["norm_used"] = *res.norm_used;
  return j;
}

SampledFunction read_samples_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  {
    auto header = split(trim(line));
    for (auto& h : header) h = trim(h);
    if (header != std::vector<std::string>{"x", "re", "im"}) {
      throw DataError("sample file must start with the header 'x,re,im'");
    }
  }

  std::vector<double> xs;
  std::vector<complex> values;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 3) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 3 fields, found " << fields.size();
      throw DataError(msg.str());
    }
    xs.push_back(parse_double(fields[0], line_no));
    values.emplace_back(parse_double(fields[1], line_no), parse_double(fields[2], line_no));
  }

  if (xs.size() < 2) {
    throw DataError("sample file needs at least two rows");
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] > xs[k - 1])) {
      throw DataError("sample abscissae must be strictly increasing");
    }
  }
  const std::size_t n = xs.size() - 1;
  const double a = xs.front();
  const double b = xs.back();
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const double expected = a + h * static_cast<double>(k);
    if (std::abs(xs[k] - expected) > kUniformityTol * (b - a)) {
      std::ostringstream msg;
      msg << "sample abscissae are not uniform: row " << k << " has x=" << format_double(xs[k])
          << ", expected " << format_double(expected);
      throw DataError(msg.str());
    }
  }
  return SampledFunction(std::move(values), UniformGrid(a, b, n));
}

SampledFunction load_samples_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open sample file '" + path.string() + "'");
  }
  return read_samples_csv(in);
}

void write_samples_csv(std::ostream& os, const SampledFunction& samples) {
  os << "x,re,im\n";
  for (std::size_t k = 0; k < samples.values.size(); ++k) {
    os << format_double(samples.grid.node(k)) << ',' << format_double(samples.values[k].real())
       << ',' << format_double(samples.values[k].imag()) << '\n';
  }
}

}  // namespace foq::io
