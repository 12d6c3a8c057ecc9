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

// Linear intensity -> temperature calibration, ROI aggregation and the
// accuracy metric used to compare an estimate against reference readings.
//
// The calibration maps the intensity extent [i_min, i_max] of the image onto
// [t_low, t_high]:
//
//   T(i) = t_low + (t_high - t_low) * (i - i_min) / (i_max - i_min)
//
// Note the per-pixel term (i - i_min). A variant scaled by
// (i_max - i_min) / i_max alone would give every pixel the same value.

#ifndef THERMOSCOPE_ESTIMATION_HPP
#define THERMOSCOPE_ESTIMATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermoscope/image.hpp"

namespace thermoscope {

/// Temperature span, in degrees Celsius, mapped onto the intensity extent.
class CalibrationRange {
 public:
  /// Throws DegenerateCalibrationError unless t_low < t_high, and DomainError
  /// if either bound is at or below absolute zero or non-finite.
  CalibrationRange(double t_low, double t_high);

  /// 30..40 degC, bracketing human skin temperatures.
  static CalibrationRange default_range() { return {30.0, 40.0}; }

  double t_low() const noexcept { return t_low_; }
  double t_high() const noexcept { return t_high_; }
  double span() const noexcept { return t_high_ - t_low_; }

  /// Half of one 8-bit temperature step: span / 510.
  double half_quantum() const noexcept { return span() / 510.0; }

  CalibrationRange shifted(double delta) const { return {t_low_ + delta, t_high_ + delta}; }

  friend bool operator==(const CalibrationRange&, const CalibrationRange&) = default;

 private:
  double t_low_;
  double t_high_;
};

/// Per-pixel temperatures in degC, with the calibration that produced them.
struct TemperatureMap {
  Raster<double> values;
  CalibrationRange calibration;
  IntensityExtent extent;

  int width() const noexcept { return static_cast<int>(values.cols()); }
  int height() const noexcept { return static_cast<int>(values.rows()); }
  double operator()(int x, int y) const { return values(y, x); }
};

/// Throws DegenerateExtentError if i_min == i_max and RangeError if the
/// intensity lies outside the extent. Endpoints map to t_low and t_high
/// bit-exactly.
double pixel_temperature(std::uint8_t intensity, const IntensityExtent& extent,
                         const CalibrationRange& cal);

/// Applies pixel_temperature to every pixel. The extent may come from a
/// larger frame than `img`; a pixel outside it raises RangeError naming its
/// coordinate.
TemperatureMap temperature_map(const GrayImage& img, const CalibrationRange& cal,
                               const IntensityExtent& extent);

enum class Aggregator { mean, median, max };

std::string_view to_string(Aggregator aggregator) noexcept;
std::optional<Aggregator> parse_aggregator(std::string_view name);

/// Median of an even count is the mean of the two middle values.
double roi_temperature(const TemperatureMap& map, const Roi& roi,
                       Aggregator aggregator = Aggregator::mean);

struct ValidationReport {
  double estimated;
  std::vector<double> references;
  double mean_reference;
  double abs_error;
  double accuracy_pct;

  /// accuracy_pct rounded to the nearest integer, e.g. "97%".
  std::string accuracy_display() const;
};

/// accuracy_pct = (1 - |estimated - mean(references)| / mean(references)) * 100,
/// all in degC. Throws std::invalid_argument for an empty reference list and
/// MetricUndefinedError if the mean reference is at or below 0 degC.
ValidationReport accuracy(double estimated, std::span<const double> references);

}  // namespace thermoscope

#endif  // THERMOSCOPE_ESTIMATION_HPP
