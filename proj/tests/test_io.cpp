#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "foq/coefficients.hpp"
#include "foq/io.hpp"
#include "foq/oracle.hpp"

namespace {

using foq::complex;
using foq::FourierWeight;
using foq::UniformGrid;

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Io, FormatDoubleRoundTrips) {
  for (double v : {0.1, -1e-300, 1.0 / 3.0, 5e-324, 123456789.125, -0.0}) {
    EXPECT_TRUE(bit_equal(std::strtod(foq::io::format_double(v).c_str(), nullptr), v)) << v;
  }
}

TEST(Io, CoefficientJsonRoundTripIsBitIdentical) {
  for (double w : {0.0, -2.7, 50.0}) {
    const auto c = foq::optimal_coefficients(FourierWeight(w), UniformGrid(-1.0, 1.0, 17));
    const std::string text = foq::io::to_json(c).dump();
    const auto back = foq::io::coefficients_from_json(nlohmann::json::parse(text));
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      EXPECT_TRUE(bit_equal(back[k].real(), c[k].real()));
      EXPECT_TRUE(bit_equal(back[k].imag(), c[k].imag()));
    }
    EXPECT_EQ(back.grid, c.grid);
    EXPECT_EQ(back.weight, c.weight);
    EXPECT_EQ(foq::io::to_json(back).dump(), text);
  }
}

TEST(Io, GeneratorSurvivesJson) {
  const auto o = foq::oracle_coefficients(FourierWeight(1.0), UniformGrid::unit(3));
  const auto j = foq::io::to_json(o);
  EXPECT_EQ(j.at("generator"), "oracle");
  EXPECT_EQ(foq::io::coefficients_from_json(j).generator, foq::Generator::oracle);
}

TEST(Io, MalformedJsonRejected) {
  EXPECT_THROW((void)foq::io::coefficients_from_json(nlohmann::json{{"omega", 1.0}}),
               foq::DataError);
  auto j = foq::io::to_json(foq::optimal_coefficients_unit(FourierWeight(1.0), 3));
  j["coefficients"].erase(0);
  EXPECT_THROW((void)foq::io::coefficients_from_json(j), foq::ArgumentError);
}

TEST(Io, CoefficientCsv) {
  const auto c = foq::optimal_coefficients_unit(FourierWeight(1.0), 2);
  std::ostringstream os;
  foq::io::write_coefficients_csv(os, c);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "index,x,re,im");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Io, SamplesRoundTrip) {
  const UniformGrid g(2.0, 5.0, 30);
  std::vector<complex> v;
  for (double x : g.nodes()) v.emplace_back(std::sin(x), 1.0 / x);
  const foq::SampledFunction s(v, g);
  std::stringstream ss;
  foq::io::write_samples_csv(ss, s);
  const auto back = foq::io::read_samples_csv(ss);
  EXPECT_EQ(back.grid, g);
  for (std::size_t k = 0; k < v.size(); ++k) {
    EXPECT_TRUE(bit_equal(back.values[k].real(), v[k].real()));
    EXPECT_TRUE(bit_equal(back.values[k].imag(), v[k].imag()));
  }
}

TEST(Io, SamplesRejected) {
  auto bad = [](const std::string& text) {
    std::istringstream is(text);
    EXPECT_THROW((void)foq::io::read_samples_csv(is), foq::DataError) << text;
  };
  bad("");
  bad("t,re,im\n0,1,0\n1,1,0\n");
  bad("x,re,im\n0,1,0\n");
  bad("x,re,im\n0,1,0\n1,1\n");
  bad("x,re,im\n0,1,0\n1,abc,0\n");
  bad("x,re,im\n0,1,0\n0.5,1,0\n0.4,1,0\n");
  bad("x,re,im\n0,1,0\n0.3,1,0\n1,1,0\n");
  bad("x,re,im\n0,1,0\n0.5,nan,0\n1,1,0\n");
}

TEST(Io, MissingSampleFile) {
  EXPECT_THROW((void)foq::io::load_samples_csv("/nonexistent/samples.csv"), foq::io::IoError);
}

TEST(Io, SampleFileOnDisk) {
  const auto path = std::filesystem::temp_directory_path() / "foq_io_samples.csv";
  {
    std::ofstream os(path);
    os << "x,re,im\n0,1,0\n0.5,2,0\n1,3,-1\n";
  }
  const auto s = foq::io::load_samples_csv(path);
  std::filesystem::remove(path);
  EXPECT_EQ(s.grid, UniformGrid::unit(2));
  EXPECT_EQ(s.values[2], complex(3.0, -1.0));
}

TEST(Io, ReportJson) {
  foq::QuadratureResult r{complex{1.0, 2.0}, std::nullopt, 0.5};
  const auto j = foq::io::to_json(r);
  EXPECT_TRUE(j.at("error_bound").is_null());
  EXPECT_EQ(j.at("norm_used"), 0.5);
  EXPECT_EQ(j.at("value").at("im"), 2.0);
}

}  // namespace
