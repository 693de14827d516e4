// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qswitch/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace qswitch;
using namespace qswitch::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qswitch");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qswitch_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Value column of the surface CSV at (p, q), matched on the printed coordinates.
double csv_value(const std::string& csv, const std::string& p, const std::string& q) {
  std::istringstream in(csv);
  std::string line;
  const std::string prefix = p + "," + q + ",";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
  ADD_FAILURE() << "no row for " << prefix;
  return 0.0;
}

}  // namespace

TEST(format_double, round_trips) {
  EXPECT_EQ(format_double(0.25), "0.25");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  for (double x : {1.0 / 3.0, 0.12809024508042288, -0.4572659136233871, 1e-300}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(bounds_command, json_fields) {
  const auto r = invoke({"bounds", "--p", "0.5", "--q", "0.5", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["q_d"].get<double>(), 0.0);
  EXPECT_NEAR(j["lb_qs"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["ub_qs"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["gain"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["uncertainty"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["herald_prob"].get<double>(), 0.25, 1e-15);
  EXPECT_TRUE(j["plus_coherent_info"].is_number());
}

TEST(bounds_command, json_round_trip_is_exact) {
  const auto report = bounds_report({0.37, 0.81});
  const auto j = nlohmann::json::parse(to_json(report).dump());
  EXPECT_EQ(j["lb_qs"].get<double>(), report.lb_qs);
  EXPECT_EQ(j["ub_qs"].get<double>(), report.ub_qs);
  EXPECT_EQ(j["plus_coherent_info"].get<double>(), *report.plus_coherent_info);
}

TEST(bounds_command, degenerate_point_has_null_coherent_info) {
  const auto r = invoke({"bounds", "--p", "1", "--q", "1", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["plus_coherent_info"].is_null());
}

TEST(bounds_command, text_output) {
  const auto r = invoke({"bounds", "--p", "0.5", "--q", "0.5"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("lb_qs"), std::string::npos);
  EXPECT_NE(r.out.find("0.25"), std::string::npos);
}

TEST(bounds_command, usage_errors) {
  EXPECT_EQ(invoke({"bounds", "--p", "1.5", "--q", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"bounds", "--p", "0.5"}).code, kUsageError);
  EXPECT_EQ(invoke({"bounds", "--p", "x", "--q", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST(surface_command, spot_values) {
  const auto gain = invoke({"surface", "--quantity", "gain", "--resolution", "101"});
  ASSERT_EQ(gain.code, kOk);
  EXPECT_EQ(gain.out.rfind("p,q,value\n", 0), 0u);
  EXPECT_NEAR(csv_value(gain.out, "0.5", "1"), 1.0, 1e-12);
  const auto unc = invoke({"surface", "--quantity", "uncertainty"});
  EXPECT_NEAR(csv_value(unc.out, "0.5", "0"), 1.0, 1e-12);
}

TEST(surface_command, file_output_is_deterministic) {
  const auto a = scratch("a.csv");
  const auto b = scratch("b.csv");
  ASSERT_EQ(invoke({"surface", "--quantity", "lb-qs", "--resolution", "31", "--out", a.string()}).code, kOk);
  ASSERT_EQ(invoke({"--threads", "1", "surface", "--quantity", "lb-qs", "--resolution", "31", "--out",
                    b.string()})
                .code,
            kOk);
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 31 * 31 + 1);
}

TEST(surface_command, errors) {
  EXPECT_EQ(invoke({"surface", "--quantity", "capacity"}).code, kUsageError);
  EXPECT_EQ(invoke({"surface", "--quantity", "gain", "--resolution", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"surface", "--quantity", "gain", "--p-min", "0.7", "--p-max", "0.2"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"surface", "--quantity", "gain", "--out", "/nonexistent/dir/x.csv"}).code, kIoError);
}

TEST(slice_command, header_and_rows) {
  const auto r = invoke({"slice", "--steps", "11"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("p,ub_classical,lb_qs,ub_qs\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 12);
  EXPECT_NE(r.out.find("\n0.5,0,0.25,0.5\n"), std::string::npos);
  EXPECT_EQ(invoke({"slice", "--steps", "1"}).code, kUsageError);
}

TEST(thresholds_command, json) {
  const auto r = invoke({"thresholds", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["p0"].get<double>(), 0.128, 1e-3);
  EXPECT_NEAR(j["p1"].get<double>(), 0.3161, 1e-3);
  EXPECT_LE(std::abs(j["p0_residual"].get<double>()), 1e-10);
  EXPECT_LE(std::abs(j["p1_residual"].get<double>()), 1e-10);
  EXPECT_LT(j["p0_bracket_lo"].get<double>(), j["p0_bracket_hi"].get<double>());
}

TEST(verify_command, passes_and_reports_each_check) {
  const auto r = invoke({"verify", "--resolution", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  for (const auto& name : oracle::check_names())
    EXPECT_NE(r.out.find("PASS " + name + " "), std::string::npos) << name;
}

TEST(verify_command, impossible_tolerance_fails_with_exit_one) {
  const auto r = invoke({"verify", "--resolution", "5", "--tol", "-1"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.err.find("verification failed"), std::string::npos);
}

TEST(verify_command, json_report) {
  const auto r = invoke({"verify", "--resolution", "3", "--format", "json", "--seed", "9"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 9u);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(config, parse_and_apply) {
  std::istringstream good("# defaults\nresolution = 4\n\ntol=1e-9\nseed=5\n");
  const auto cfg = parse_config(good);
  EXPECT_EQ(cfg.resolution, 4u);
  EXPECT_EQ(cfg.tolerance, 1e-9);
  EXPECT_EQ(cfg.seed, 5u);
  std::istringstream bad("colour=blue\n");
  EXPECT_THROW(parse_config(bad), std::invalid_argument);
  std::istringstream malformed("resolution=many\n");
  EXPECT_THROW(parse_config(malformed), std::invalid_argument);

  const auto path = scratch("run.cfg");
  std::ofstream(path) << "resolution=3\nseed=77\n";
  const auto r = invoke({"--config", path.string(), "verify", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 77u);
  EXPECT_EQ(j["resolution"].get<std::size_t>(), 3u);

  EXPECT_EQ(invoke({"--config", "/nonexistent.cfg", "verify"}).code, kIoError);
  const auto bad_path = scratch("bad.cfg");
  std::ofstream(bad_path) << "colour=blue\n";
  EXPECT_EQ(invoke({"--config", bad_path.string(), "verify"}).code, kUsageError);
}
