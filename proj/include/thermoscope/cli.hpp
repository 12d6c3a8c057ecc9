// Copyright 2026 The thermoscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   thermoscope <command> [flags]
//
// Commands: pseudocolor, estimate, validate, synth, roundtrip. Exit codes are
// a stable scripting contract (see ExitCode). A human-readable summary goes
// to stdout; `--report PATH` additionally writes the JSON report, and
// `--report -` prints the JSON to stdout instead of the summary.

#ifndef THERMOSCOPE_CLI_HPP
#define THERMOSCOPE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "thermoscope/estimation.hpp"
#include "thermoscope/image.hpp"
#include "thermoscope/image_io.hpp"

namespace thermoscope::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // roundtrip exceeded its bound, or an unexpected error
  kDecodeError = 2,
  kWriteError = 3,
  kDegenerateData = 4,
  kUsageError = 5,
};

enum class Command { pseudocolor, estimate, validate, synth, roundtrip };
enum class ExtentScope { frame, roi };
enum class ScenePattern { random, portrait };

/// Fully resolved options for one invocation. Every field is echoed into the
/// JSON report so that no result depends on a hidden default.
struct RunConfig {
  Command command = Command::pseudocolor;
  std::string input_path;
  std::string output_path;
  std::optional<Roi> roi;
  CalibrationRange calibration = CalibrationRange::default_range();
  ExtentScope extent_scope = ExtentScope::frame;
  Aggregator aggregator = Aggregator::mean;
  std::vector<double> references;
  std::optional<double> estimated;
  ImageFormat format = ImageFormat::ppm;
  std::optional<std::string> report_path;
  std::optional<std::string> pseudocolor_path;
  std::optional<std::string> legend_path;
  std::optional<std::string> field_path;
  int width = 64;
  int height = 64;
  std::uint64_t seed = 42;
  ScenePattern pattern = ScenePattern::random;
};

std::string to_string(Command command);
std::string to_string(ExtentScope scope);
std::string to_string(ScenePattern pattern);

/// Parses "x,y,w,h". Throws std::invalid_argument.
Roi parse_roi(const std::string& text);

nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermoscope::cli

#endif  // THERMOSCOPE_CLI_HPP
