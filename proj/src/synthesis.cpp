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

#include "thermoscope/synthesis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "thermoscope/errors.hpp"

namespace thermoscope {

namespace {

double unit_draw(std::mt19937_64& engine) { return double(engine() >> 11) * 0x1.0p-53; }

void inject_extremes(Raster<double>& field, const CalibrationRange& cal, std::mt19937_64& engine) {
  const auto n = static_cast<std::uint64_t>(field.size());
  const std::uint64_t cold = engine() % n;
  const std::uint64_t hot = (cold + 1 + engine() % (n - 1)) % n;
  field.data()[cold] = cal.t_low();
  field.data()[hot] = cal.t_high();
}

}  // namespace

SyntheticScene random_scene(int width, int height, const CalibrationRange& cal, std::uint64_t seed) {
  if (width < 1 || height < 1 || std::int64_t(width) * height < 2) {
    throw std::invalid_argument("synthetic scene needs at least two pixels");
  }
  std::mt19937_64 engine(seed);
  Raster<double> field(height, width);
  for (Eigen::Index k = 0; k < field.size(); ++k) {
    field.data()[k] = std::lerp(cal.t_low(), cal.t_high(), unit_draw(engine));
  }
  inject_extremes(field, cal, engine);
  return {std::move(field), cal, seed};
}

Roi portrait_forehead_roi(int width, int height) {
  const int w = std::max(1, width / 6);
  const int h = std::max(1, height / 12);
  return {width / 2 - w / 2, height / 4 - h / 2, w, h};
}

SyntheticScene portrait_scene(int width, int height, const CalibrationRange& cal, std::uint64_t seed) {
  if (width < 4 || height < 4) throw std::invalid_argument("portrait scene needs at least 4x4 pixels");
  std::mt19937_64 engine(seed);
  Raster<double> field(height, width);
  const double cx = width / 2.0;
  const double head_cy = height * 0.3;
  const double head_rx = width * 0.18;
  const double head_ry = height * 0.22;
  const Roi forehead = portrait_forehead_roi(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double px = x + 0.5;
      const double py = y + 0.5;
      const double dx = (px - cx) / head_rx;
      const double dy = (py - head_cy) / head_ry;
      double level;  // fraction of the calibration span
      if (x >= forehead.x && x < forehead.x + forehead.w && y >= forehead.y &&
          y < forehead.y + forehead.h) {
        level = 0.72;
      } else if (dx * dx + dy * dy <= 1.0) {
        level = 0.55 + 0.1 * (1.0 - std::sqrt(dx * dx + dy * dy));
      } else if (py > height * 0.6 && std::abs(px - cx) < width * 0.35) {
        level = 0.35;
      } else {
        level = 0.05 + 0.1 * py / height;
      }
      level += 0.03 * (unit_draw(engine) - 0.5);
      field(y, x) = std::lerp(cal.t_low(), cal.t_high(), std::clamp(level, 0.0, 1.0));
    }
  }
  inject_extremes(field, cal, engine);
  return {std::move(field), cal, seed};
}

std::uint8_t render_level(double celsius, const CalibrationRange& cal) {
  const double u = (celsius - cal.t_low()) / cal.span();
  return static_cast<std::uint8_t>(std::clamp(std::floor(255.0 * u + 0.5), 0.0, 255.0));
}

RgbImage render(const SyntheticScene& scene) {
  const auto& cal = scene.calibration;
  if (scene.field.size() == 0) throw std::invalid_argument("cannot render an empty scene");
  RgbImage img(scene.width(), scene.height());
  bool has_zero = false;
  bool has_full = false;
  for (int y = 0; y < scene.height(); ++y) {
    for (int x = 0; x < scene.width(); ++x) {
      const double t = scene.field(y, x);
      if (!(t >= cal.t_low() && t <= cal.t_high())) {
        throw std::invalid_argument("scene value at (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") lies outside the calibration range");
      }
      const std::uint8_t r = render_level(t, cal);
      has_zero |= r == 0;
      has_full |= r == 255;
      img.set(x, y, {r, 0, 0});
    }
  }
  if (!has_zero || !has_full) {
    throw std::invalid_argument("scene does not span its calibration range (needs red levels 0 and 255)");
  }
  return img;
}

double round_trip_error(const SyntheticScene& scene) {
  const GrayImage gray = red_channel(render(scene));
  const TemperatureMap map = temperature_map(gray, scene.calibration, intensity_extent(gray));
  return (map.values - scene.field).abs().maxCoeff();
}

double round_trip_bound(const CalibrationRange& cal) { return cal.half_quantum() + 1e-9; }

std::string serialize_scene(const SyntheticScene& scene) {
  const auto number = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  };
  std::string out = "thermoscope-scene 1\n";
  out += std::to_string(scene.width()) + " " + std::to_string(scene.height()) + " " +
         number(scene.calibration.t_low()) + " " + number(scene.calibration.t_high()) + " " +
         std::to_string(scene.seed) + "\n";
  for (int y = 0; y < scene.height(); ++y) {
    for (int x = 0; x < scene.width(); ++x) {
      if (x > 0) out += ' ';
      out += number(scene.field(y, x));
    }
    out += '\n';
  }
  return out;
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::string_view next(const char* what) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument(std::string("scene file: missing ") + what);
    return text_.substr(start, pos_ - start);
  }

  template <typename T>
  T number(const char* what) {
    const auto token = next(what);
    T value{};
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw std::invalid_argument(std::string("scene file: bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

  bool at_end() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ == text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntheticScene parse_scene(std::string_view text) {
  Tokenizer tok(text);
  if (tok.next("magic") != "thermoscope-scene") throw std::invalid_argument("scene file: bad magic");
  if (tok.number<int>("version") != 1) throw std::invalid_argument("scene file: unsupported version");
  const int width = tok.number<int>("width");
  const int height = tok.number<int>("height");
  const double t_low = tok.number<double>("t_low");
  const double t_high = tok.number<double>("t_high");
  const auto seed = tok.number<std::uint64_t>("seed");
  if (width < 1 || height < 1) throw std::invalid_argument("scene file: dimensions must be positive");
  const CalibrationRange cal(t_low, t_high);
  Raster<double> field(height, width);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double v = tok.number<double>("temperature value");
      if (!(v >= t_low && v <= t_high)) {
        throw std::invalid_argument("scene file: value outside calibration range at (" +
                                    std::to_string(x) + ", " + std::to_string(y) + ")");
      }
      field(y, x) = v;
    }
  }
  if (!tok.at_end()) throw std::invalid_argument("scene file: trailing data after last row");
  return {std::move(field), cal, seed};
}

}  // namespace thermoscope
