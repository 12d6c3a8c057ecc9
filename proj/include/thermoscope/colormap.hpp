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

// Jet pseudocolor rendering of an 8-bit intensity field.
//
// The map is piecewise linear through six anchors:
//
//   position  0      0.125  0.375  0.625  0.875  1
//   color     navy   blue   cyan   yellow red    maroon
//             (0,0,.5) (0,0,1) (0,1,1) (1,1,0) (1,0,0) (.5,0,0)

#ifndef THERMOSCOPE_COLORMAP_HPP
#define THERMOSCOPE_COLORMAP_HPP

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "thermoscope/image.hpp"

namespace thermoscope {

struct ColorStop {
  double position;
  Eigen::Array3d color;
};

/// The jet anchor table, strictly increasing from 0 to 1.
const std::array<ColorStop, 6>& jet_stops();

/// Normalized intensity to (r, g, b) in [0, 1]. Inputs outside [0, 1] are
/// clamped; NaN maps to 0.
Eigen::Array3d jet(double u);

/// round(v * 255) with halves rounded up, v clamped to [0, 1].
std::uint8_t quantize8(double v);

/// quantize8(jet(i / 255)) evaluated in exact integer arithmetic. The 8-bit
/// jet values land on half-integers, so a floating-point evaluation could
/// round either way at the ties.
Rgb jet8(std::uint8_t intensity);

/// Per-pixel jet8. Display only; estimation reads the gray field directly.
RgbImage pseudocolor(const GrayImage& img);

/// A horizontal width x height strip running 0..255 left to right, for use
/// as a legend next to a pseudocolor image.
RgbImage legend_strip(int width, int height);

}  // namespace thermoscope

#endif  // THERMOSCOPE_COLORMAP_HPP
