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

#ifndef QSWITCH_CLI_HPP
#define QSWITCH_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qswitch/bounds.hpp"
#include "qswitch/oracle.hpp"
#include "qswitch/surface.hpp"

namespace qswitch::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const Threshold& p0, const Threshold& p1);
nlohmann::json to_json(const oracle::VerificationReport& report);

/// Header `p,q,value`, one row per grid point, LF line endings.
std::string surface_csv(const std::vector<SurfacePoint>& points);
/// Header `p,ub_classical,lb_qs,ub_qs`.
std::string slice_csv(const std::vector<SlicePoint>& points);

/// Defaults loadable from a key=value file. Blank lines and `#` comments are ignored.
struct Config {
  std::optional<std::size_t> resolution;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

/// Throws std::invalid_argument on unknown keys or malformed values.
Config parse_config(std::istream& in);

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qswitch::cli

#endif  // QSWITCH_CLI_HPP
