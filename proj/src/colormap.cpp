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

#include "thermoscope/colormap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermoscope {

namespace {

// Anchor table in exact units: positions in eighths, colors in halves.
struct ExactStop {
  int position_eighths;
  std::array<int, 3> color_halves;
};

constexpr std::array<ExactStop, 6> kExactStops = {{
    {0, {0, 0, 1}},
    {1, {0, 0, 2}},
    {3, {0, 2, 2}},
    {5, {2, 2, 0}},
    {7, {2, 0, 0}},
    {8, {1, 0, 0}},
}};

constexpr std::array<Rgb, 256> build_jet8_table() {
  std::array<Rgb, 256> table{};
  for (int i = 0; i < 256; ++i) {
    // u = i / 255, so the position in eighths is 8i / 255.
    std::size_t seg = 0;
    while (seg + 2 < kExactStops.size() && 255 * kExactStops[seg + 1].position_eighths <= 8 * i) {
      ++seg;
    }
    const auto& lo = kExactStops[seg];
    const auto& hi = kExactStops[seg + 1];
    const int dp = hi.position_eighths - lo.position_eighths;
    std::array<std::uint8_t, 3> rgb{};
    for (int c = 0; c < 3; ++c) {
      const int dc = hi.color_halves[c] - lo.color_halves[c];
      // 255 * value = num / den with
      //   value = lo/2 + (8i/255 - p_lo) / dp * dc/2
      const int num = 255 * lo.color_halves[c] * dp + (8 * i - 255 * lo.position_eighths) * dc;
      const int den = 2 * dp;
      // Round half up: floor(num/den + 1/2) for num >= 0.
      rgb[c] = static_cast<std::uint8_t>((2 * num + den) / (2 * den));
    }
    table[i] = Rgb{rgb[0], rgb[1], rgb[2]};
  }
  return table;
}

constexpr std::array<Rgb, 256> kJet8 = build_jet8_table();

}  // namespace

const std::array<ColorStop, 6>& jet_stops() {
  static const std::array<ColorStop, 6> stops = {{
      {0.0, {0.0, 0.0, 0.5}},
      {0.125, {0.0, 0.0, 1.0}},
      {0.375, {0.0, 1.0, 1.0}},
      {0.625, {1.0, 1.0, 0.0}},
      {0.875, {1.0, 0.0, 0.0}},
      {1.0, {0.5, 0.0, 0.0}},
  }};
  return stops;
}

Eigen::Array3d jet(double u) {
  const auto& stops = jet_stops();
  u = std::isnan(u) ? 0.0 : std::clamp(u, 0.0, 1.0);
  if (u == 1.0) return stops.back().color;
  std::size_t seg = 0;
  while (stops[seg + 1].position <= u) ++seg;
  const auto& lo = stops[seg];
  const auto& hi = stops[seg + 1];
  const double t = (u - lo.position) / (hi.position - lo.position);
  return lo.color + t * (hi.color - lo.color);
}

std::uint8_t quantize8(double v) {
  v = std::isnan(v) ? 0.0 : std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5));
}

Rgb jet8(std::uint8_t intensity) { return kJet8[intensity]; }

RgbImage pseudocolor(const GrayImage& img) {
  if (img.size() == 0) throw std::invalid_argument("pseudocolor of an empty image");
  RgbImage out(img.width(), img.height());
  const auto& src = img.intensities();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) out.set(x, y, kJet8[src(y, x)]);
  }
  return out;
}

RgbImage legend_strip(int width, int height) {
  RgbImage out(width, height);
  for (int x = 0; x < width; ++x) {
    const int level = width == 1 ? 0 : static_cast<int>((255L * x + (width - 1) / 2) / (width - 1));
    for (int y = 0; y < height; ++y) out.set(x, y, kJet8[level]);
  }
  return out;
}

}  // namespace thermoscope
