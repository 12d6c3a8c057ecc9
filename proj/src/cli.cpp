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

#include "thermoscope/cli.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "thermoscope/colormap.hpp"
#include "thermoscope/errors.hpp"
#include "thermoscope/synthesis.hpp"

namespace thermoscope::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scene files are data inputs; parse failures map to the decode exit code.
class SceneFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json roi_to_json(const Roi& roi) { return {{"x", roi.x}, {"y", roi.y}, {"w", roi.w}, {"h", roi.h}}; }

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void emit(const RunConfig& config, const Json& report, const std::string& summary, std::ostream& out) {
  if (config.report_path && *config.report_path == "-") {
    out << report.dump(2) << "\n";
    return;
  }
  out << summary;
  if (config.report_path) {
    const std::string text = report.dump(2) + "\n";
    write_file(*config.report_path,
               std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
}

Json base_report(const RunConfig& config) {
  return {{"command", to_string(config.command)}, {"config", config_to_json(config)}};
}

Json validation_to_json(const ValidationReport& v) {
  return {{"estimated_c", v.estimated},
          {"references_c", v.references},
          {"mean_reference_c", v.mean_reference},
          {"abs_error_c", v.abs_error},
          {"accuracy_pct", v.accuracy_pct},
          {"accuracy_display", v.accuracy_display()}};
}

std::string validation_summary(const ValidationReport& v) {
  return "validation: estimated " + fixed(v.estimated, 2) + " degC vs reference " +
         fixed(v.mean_reference, 2) + " degC, error " + fixed(v.abs_error, 2) + " degC, accuracy " +
         fixed(v.accuracy_pct, 4) + "% (" + v.accuracy_display() + ")\n";
}

struct RoiEstimate {
  IntensityExtent extent;
  double mean;
  double median;
  double max;

  double select(Aggregator a) const {
    switch (a) {
      case Aggregator::median:
        return median;
      case Aggregator::max:
        return max;
      case Aggregator::mean:
        break;
    }
    return mean;
  }
};

RoiEstimate estimate_roi(const RunConfig& config) {
  if (!config.roi) throw UsageError("--roi x,y,w,h is required");
  const RgbImage img = read_image(config.input_path);
  const GrayImage gray = red_channel(img);
  check_roi(*config.roi, gray.width(), gray.height());

  // Frame scope calibrates against the whole scene's dynamic range so that a
  // crop does not silently re-normalize; roi scope uses the crop's own range.
  GrayImage source = gray;
  Roi region = *config.roi;
  if (config.extent_scope == ExtentScope::roi) {
    source = crop(gray, *config.roi);
    region = Roi{0, 0, config.roi->w, config.roi->h};
  }
  const IntensityExtent extent = intensity_extent(source);
  const TemperatureMap map = temperature_map(source, config.calibration, extent);
  return {extent, roi_temperature(map, region, Aggregator::mean),
          roi_temperature(map, region, Aggregator::median), roi_temperature(map, region, Aggregator::max)};
}

int cmd_pseudocolor(const RunConfig& config, std::ostream& out) {
  const RgbImage img = read_image(config.input_path);
  const GrayImage gray = red_channel(img);
  write_image(config.output_path, pseudocolor(gray), config.format);
  if (config.legend_path) write_image(*config.legend_path, legend_strip(256, 16), config.format);

  const IntensityExtent extent = intensity_extent(gray);
  Json report = base_report(config);
  report["extent"] = {{"i_min", extent.i_min}, {"i_max", extent.i_max}};
  report["image"] = {{"width", img.width()}, {"height", img.height()}};
  emit(config, report,
       "pseudocolor: " + std::to_string(img.width()) + "x" + std::to_string(img.height()) + " " +
           config.input_path + " -> " + config.output_path + " (" + std::string(to_string(config.format)) +
           ")\n",
       out);
  return kOk;
}

int cmd_estimate(const RunConfig& config, std::ostream& out) {
  const RoiEstimate est = estimate_roi(config);
  if (config.pseudocolor_path) {
    write_image(*config.pseudocolor_path, pseudocolor(red_channel(read_image(config.input_path))),
                config.format);
  }

  Json report = base_report(config);
  report["extent"] = {{"i_min", est.extent.i_min}, {"i_max", est.extent.i_max}};
  report["roi_temperature_c"] = est.select(config.aggregator);
  report["roi_temperatures_c"] = {{"mean", est.mean}, {"median", est.median}, {"max", est.max}};
  if (config.pseudocolor_path) report["pseudocolor_output"] = *config.pseudocolor_path;

  const Roi& roi = *config.roi;
  std::string summary = "estimate: roi " + std::to_string(roi.x) + "," + std::to_string(roi.y) + "," +
                        std::to_string(roi.w) + "," + std::to_string(roi.h) + "  calibration " +
                        fixed(config.calibration.t_low(), 2) + ".." + fixed(config.calibration.t_high(), 2) +
                        " degC  extent " + to_string(config.extent_scope) + " [" +
                        std::to_string(est.extent.i_min) + ", " + std::to_string(est.extent.i_max) + "]\n" +
                        "  mean " + fixed(est.mean, 4) + " degC  median " + fixed(est.median, 4) +
                        " degC  max " + fixed(est.max, 4) + " degC\n" + "  " +
                        std::string(to_string(config.aggregator)) + ": " +
                        fixed(est.select(config.aggregator), 4) + " degC\n";
  if (!config.references.empty()) {
    const ValidationReport v = accuracy(est.select(config.aggregator), config.references);
    report["validation"] = validation_to_json(v);
    summary += validation_summary(v);
  }
  emit(config, report, summary, out);
  return kOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  if (config.references.empty()) throw UsageError("validate needs at least one --reference");
  Json report = base_report(config);
  double estimated;
  if (config.estimated) {
    estimated = *config.estimated;
  } else if (!config.input_path.empty()) {
    const RoiEstimate est = estimate_roi(config);
    estimated = est.select(config.aggregator);
    report["extent"] = {{"i_min", est.extent.i_min}, {"i_max", est.extent.i_max}};
    report["roi_temperature_c"] = estimated;
  } else {
    throw UsageError("validate needs --estimated or --input with --roi");
  }
  const ValidationReport v = accuracy(estimated, config.references);
  report["validation"] = validation_to_json(v);
  emit(config, report, validation_summary(v), out);
  return kOk;
}

SyntheticScene make_scene(const RunConfig& config) {
  return config.pattern == ScenePattern::portrait
             ? portrait_scene(config.width, config.height, config.calibration, config.seed)
             : random_scene(config.width, config.height, config.calibration, config.seed);
}

int cmd_synth(const RunConfig& config, std::ostream& out) {
  const SyntheticScene scene = make_scene(config);
  write_image(config.output_path, render(scene), config.format);
  if (config.field_path) {
    const std::string text = serialize_scene(scene);
    write_file(*config.field_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  Json report = base_report(config);
  if (config.pattern == ScenePattern::portrait) {
    report["forehead_roi"] = roi_to_json(portrait_forehead_roi(config.width, config.height));
  }
  emit(config, report,
       "synth: " + std::to_string(config.width) + "x" + std::to_string(config.height) + " " +
           to_string(config.pattern) + " seed " + std::to_string(config.seed) + " -> " + config.output_path +
           (config.field_path ? " (field " + *config.field_path + ")" : std::string()) + "\n",
       out);
  return kOk;
}

int cmd_roundtrip(const RunConfig& config, std::ostream& out) {
  SyntheticScene scene = [&] {
    if (!config.field_path) return make_scene(config);
    const auto bytes = read_file(*config.field_path);
    try {
      return parse_scene(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } catch (const DegenerateCalibrationError&) {
      throw;
    } catch (const std::exception& e) {
      throw SceneFileError(*config.field_path + ": " + e.what());
    }
  }();
  const double error = round_trip_error(scene);
  const double half_quantum = scene.calibration.half_quantum();
  const bool ok = error <= round_trip_bound(scene.calibration);

  Json report = base_report(config);
  report["roundtrip"] = {{"width", scene.width()},
                         {"height", scene.height()},
                         {"t_low_c", scene.calibration.t_low()},
                         {"t_high_c", scene.calibration.t_high()},
                         {"max_abs_error_c", error},
                         {"bound_c", half_quantum},
                         {"slack_c", 1e-9},
                         {"within_bound", ok}};
  emit(config, report,
       "roundtrip: max_abs_error " + fixed(error, 6) + " degC  bound " + fixed(half_quantum, 6) + " degC  " +
           (ok ? "ok" : "EXCEEDED") + "\n",
       out);
  return ok ? kOk : kFailure;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::pseudocolor:
      return "pseudocolor";
    case Command::estimate:
      return "estimate";
    case Command::validate:
      return "validate";
    case Command::synth:
      return "synth";
    case Command::roundtrip:
      return "roundtrip";
  }
  return "pseudocolor";
}

std::string to_string(ExtentScope scope) { return scope == ExtentScope::roi ? "roi" : "frame"; }

std::string to_string(ScenePattern pattern) {
  return pattern == ScenePattern::portrait ? "portrait" : "random";
}

Roi parse_roi(const std::string& text) {
  std::array<int, 4> v{};
  std::size_t pos = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::size_t end = k + 1 < v.size() ? text.find(',', pos) : text.size();
    if (end == std::string::npos) throw std::invalid_argument("roi must be x,y,w,h");
    const std::string field = text.substr(pos, end - pos);
    std::size_t used = 0;
    try {
      v[k] = std::stoi(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (field.empty() || used != field.size()) {
      throw std::invalid_argument("roi must be four integers x,y,w,h, got '" + text + "'");
    }
    pos = end + 1;
  }
  return {v[0], v[1], v[2], v[3]};
}

Json config_to_json(const RunConfig& config) {
  Json j;
  j["input"] = config.input_path.empty() ? Json(nullptr) : Json(config.input_path);
  j["output"] = config.output_path.empty() ? Json(nullptr) : Json(config.output_path);
  j["roi"] = config.roi ? roi_to_json(*config.roi) : Json(nullptr);
  j["calibration"] = {{"t_low_c", config.calibration.t_low()}, {"t_high_c", config.calibration.t_high()}};
  j["extent_scope"] = to_string(config.extent_scope);
  j["aggregator"] = std::string(to_string(config.aggregator));
  j["references_c"] = config.references;
  j["estimated_c"] = config.estimated ? Json(*config.estimated) : Json(nullptr);
  j["format"] = std::string(to_string(config.format));
  j["report"] = optional_string(config.report_path);
  j["pseudocolor_output"] = optional_string(config.pseudocolor_path);
  j["legend_output"] = optional_string(config.legend_path);
  j["field"] = optional_string(config.field_path);
  j["width"] = config.width;
  j["height"] = config.height;
  j["seed"] = config.seed;
  j["pattern"] = to_string(config.pattern);
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string roi_text;
  std::string format_text;
  std::string extent_text = "frame";
  std::string aggregator_text = "mean";
  std::string pattern_text = "random";
  std::string report_text;
  std::string pseudocolor_text;
  std::string legend_text;
  std::string field_text;
  double estimated = 0;
  double t_low = config.calibration.t_low();
  double t_high = config.calibration.t_high();

  CLI::App app{"Temperature estimation from RGB images via the red channel", "thermoscope"};
  app.require_subcommand(1);

  const auto add_calibration = [&](CLI::App* cmd) {
    cmd->add_option("--t-low", t_low, "Calibration low temperature, degC")->capture_default_str();
    cmd->add_option("--t-high", t_high, "Calibration high temperature, degC")->capture_default_str();
  };
  const auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", report_text, "Write the JSON report to PATH ('-' for stdout)");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output image format: png or ppm (default: from extension)");
  };
  const auto add_estimation = [&](CLI::App* cmd) {
    cmd->add_option("--roi", roi_text, "Region of interest x,y,w,h");
    add_calibration(cmd);
    cmd->add_option("--extent-scope", extent_text, "Intensity extent over 'frame' or 'roi'")
        ->check(CLI::IsMember({"frame", "roi"}))
        ->capture_default_str();
    cmd->add_option("--aggregator", aggregator_text, "ROI aggregate: mean, median or max")
        ->check(CLI::IsMember({"mean", "median", "max"}))
        ->capture_default_str();
  };
  const auto add_scene = [&](CLI::App* cmd) {
    cmd->add_option("--width", config.width, "Scene width")->capture_default_str();
    cmd->add_option("--height", config.height, "Scene height")->capture_default_str();
    cmd->add_option("--seed", config.seed, "Scene seed")->capture_default_str();
    cmd->add_option("--pattern", pattern_text, "Scene pattern: random or portrait")
        ->check(CLI::IsMember({"random", "portrait"}))
        ->capture_default_str();
    add_calibration(cmd);
  };

  auto* pseudo = app.add_subcommand("pseudocolor", "Render the red channel as a jet pseudocolor image");
  pseudo->add_option("-i,--input", config.input_path, "Input PNG or PPM")->required();
  pseudo->add_option("-o,--output", config.output_path, "Output image")->required();
  pseudo->add_option("--legend", legend_text, "Also write a 256x16 colormap legend strip");
  add_format(pseudo);
  add_report(pseudo);

  auto* estimate = app.add_subcommand("estimate", "Estimate the temperature of a region of interest");
  estimate->add_option("-i,--input", config.input_path, "Input PNG or PPM")->required();
  add_estimation(estimate);
  estimate->add_option("--reference", config.references, "Reference temperature, degC (repeatable)");
  estimate->add_option("--pseudocolor-output", pseudocolor_text, "Also write the pseudocolor image");
  add_format(estimate);
  add_report(estimate);

  auto* validate = app.add_subcommand("validate", "Compare an estimate against reference temperatures");
  validate->add_option("--estimated", estimated, "Estimated temperature, degC");
  validate->add_option("-i,--input", config.input_path, "Estimate from this image instead (needs --roi)");
  add_estimation(validate);
  validate->add_option("--reference", config.references, "Reference temperature, degC (repeatable)");
  add_report(validate);

  auto* synth = app.add_subcommand("synth", "Render a synthetic scene with a known temperature field");
  synth->add_option("-o,--output", config.output_path, "Output image")->required();
  synth->add_option("--field", field_text, "Also write the ground-truth scene file");
  add_scene(synth);
  add_format(synth);
  add_report(synth);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check pipeline recovery of a synthetic scene");
  roundtrip->add_option("--field", field_text, "Scene file to check (default: generate one)");
  add_scene(roundtrip);
  add_report(roundtrip);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "thermoscope: usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (pseudo->parsed()) config.command = Command::pseudocolor;
    if (estimate->parsed()) config.command = Command::estimate;
    if (validate->parsed()) config.command = Command::validate;
    if (synth->parsed()) config.command = Command::synth;
    if (roundtrip->parsed()) config.command = Command::roundtrip;

    if (!roi_text.empty()) {
      try {
        config.roi = parse_roi(roi_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    config.calibration = CalibrationRange(t_low, t_high);
    config.extent_scope = extent_text == "roi" ? ExtentScope::roi : ExtentScope::frame;
    config.aggregator = parse_aggregator(aggregator_text).value_or(Aggregator::mean);
    config.pattern = pattern_text == "portrait" ? ScenePattern::portrait : ScenePattern::random;
    if (validate->parsed() && validate->count("--estimated") > 0) config.estimated = estimated;
    if (!report_text.empty()) config.report_path = report_text;
    if (!pseudocolor_text.empty()) config.pseudocolor_path = pseudocolor_text;
    if (!legend_text.empty()) config.legend_path = legend_text;
    if (!field_text.empty()) config.field_path = field_text;
    if (!format_text.empty()) {
      const auto f = parse_image_format(format_text);
      if (!f) throw UsageError("unknown image format '" + format_text + "'");
      config.format = *f;
    } else if (!config.output_path.empty()) {
      config.format = format_from_path(config.output_path).value_or(ImageFormat::ppm);
    }

    switch (config.command) {
      case Command::pseudocolor:
        return cmd_pseudocolor(config, out);
      case Command::estimate:
        return cmd_estimate(config, out);
      case Command::validate:
        return cmd_validate(config, out);
      case Command::synth:
        return cmd_synth(config, out);
      case Command::roundtrip:
        return cmd_roundtrip(config, out);
    }
    return kFailure;
  } catch (const UsageError& e) {
    err << "thermoscope: usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BoundsError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kUsageError;
  } catch (const FileReadError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kDecodeError;
  } catch (const DecodeError& e) {
    err << "thermoscope: decode error: " << e.what() << "\n";
    return kDecodeError;
  } catch (const UnsupportedFormatError& e) {
    err << "thermoscope: unsupported image: " << e.what() << "\n";
    return kDecodeError;
  } catch (const SceneFileError& e) {
    err << "thermoscope: bad scene file: " << e.what() << "\n";
    return kDecodeError;
  } catch (const FileWriteError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kWriteError;
  } catch (const DegenerateExtentError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const DegenerateCalibrationError& e) {
    err << "thermoscope: degenerate calibration: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const MetricUndefinedError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const EmptyImageError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const RangeError& e) {
    err << "thermoscope: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const DomainError& e) {
    err << "thermoscope: usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "thermoscope: usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "thermoscope: error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace thermoscope::cli
