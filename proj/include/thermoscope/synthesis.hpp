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

// Synthetic scenes with a known temperature field, rendered into the red
// channel by the exact inverse of the linear calibration. Running the normal
// pipeline on the rendering must recover the field to within half an 8-bit
// temperature step.
//
// Random fields are drawn from std::mt19937_64 seeded with the scene seed.
// Each draw u = (next() >> 11) * 2^-53 gives a value lerp(t_low, t_high, u)
// in scanline order; two further draws pick distinct pixels that are forced
// to t_low and t_high so that the rendered extent is always {0, 255}. Both
// the engine and this mapping are fully specified, so scenes are identical on
// every platform.
//
// Scene file format (plain text, whitespace separated):
//
//   thermoscope-scene 1
//   <width> <height> <t_low> <t_high> <seed>
//   <row 0: width values in degC>
//   ...
//   <row height-1>
//
// Values are written in shortest round-trip form.

#ifndef THERMOSCOPE_SYNTHESIS_HPP
#define THERMOSCOPE_SYNTHESIS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "thermoscope/estimation.hpp"
#include "thermoscope/image.hpp"

namespace thermoscope {

struct SyntheticScene {
  Raster<double> field;  // degC, height x width
  CalibrationRange calibration;
  std::uint64_t seed = 0;

  int width() const noexcept { return static_cast<int>(field.cols()); }
  int height() const noexcept { return static_cast<int>(field.rows()); }
};

/// Uniform random field. Needs width * height >= 2.
SyntheticScene random_scene(int width, int height, const CalibrationRange& cal, std::uint64_t seed);

/// Head-and-shoulders style scene: cool background, warmer torso, hottest
/// forehead ellipse, with small seeded texture. Needs width, height >= 4.
SyntheticScene portrait_scene(int width, int height, const CalibrationRange& cal, std::uint64_t seed);

/// The forehead region of portrait_scene, for ROI estimates.
Roi portrait_forehead_roi(int width, int height);

/// 8-bit red level for a temperature: round-half-up of 255 (T - t_low) / span.
std::uint8_t render_level(double celsius, const CalibrationRange& cal);

/// Red = render_level(T), green = blue = 0. Throws std::invalid_argument if a
/// value lies outside the calibration or the rendering does not contain both
/// level 0 and level 255.
RgbImage render(const SyntheticScene& scene);

/// Max |estimate - truth| after render -> red_channel -> intensity_extent ->
/// temperature_map.
double round_trip_error(const SyntheticScene& scene);

/// span / 510 + 1e-9.
double round_trip_bound(const CalibrationRange& cal);

std::string serialize_scene(const SyntheticScene& scene);
/// Throws std::invalid_argument on malformed text.
SyntheticScene parse_scene(std::string_view text);

}  // namespace thermoscope

#endif  // THERMOSCOPE_SYNTHESIS_HPP
