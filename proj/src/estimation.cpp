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

#include "thermoscope/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "thermoscope/errors.hpp"
#include "thermoscope/radiometry.hpp"

namespace thermoscope {

CalibrationRange::CalibrationRange(double t_low, double t_high) : t_low_(t_low), t_high_(t_high) {
  if (!std::isfinite(t_low) || !std::isfinite(t_high) || t_low <= -kCelsiusOffset ||
      t_high <= -kCelsiusOffset) {
    throw DomainError("calibration temperatures must be finite and above -273.15 degC");
  }
  if (!(t_low < t_high)) {
    throw DegenerateCalibrationError("calibration requires t_low < t_high, got " +
                                     std::to_string(t_low) + ".." + std::to_string(t_high));
  }
}

namespace {

void check_extent(const IntensityExtent& extent) {
  if (extent.i_min > extent.i_max) {
    throw std::invalid_argument("intensity extent has i_min > i_max");
  }
  if (extent.degenerate()) {
    throw DegenerateExtentError("uniform-intensity image, calibration undefined (i_min = i_max = " +
                                std::to_string(extent.i_min) + ")");
  }
}

// Extent already validated.
double calibrate(std::uint8_t intensity, const IntensityExtent& extent, const CalibrationRange& cal) {
  const double s = double(intensity - extent.i_min) / double(extent.i_max - extent.i_min);
  // std::lerp is exact at s = 0 and s = 1 and monotone in between.
  return std::lerp(cal.t_low(), cal.t_high(), s);
}

std::string describe(const IntensityExtent& extent) {
  return "[" + std::to_string(extent.i_min) + ", " + std::to_string(extent.i_max) + "]";
}

}  // namespace

double pixel_temperature(std::uint8_t intensity, const IntensityExtent& extent,
                         const CalibrationRange& cal) {
  check_extent(extent);
  if (intensity < extent.i_min || intensity > extent.i_max) {
    throw RangeError("intensity " + std::to_string(intensity) + " outside extent " + describe(extent));
  }
  return calibrate(intensity, extent, cal);
}

TemperatureMap temperature_map(const GrayImage& img, const CalibrationRange& cal,
                               const IntensityExtent& extent) {
  check_extent(extent);
  const auto& src = img.intensities();
  Raster<double> values(src.rows(), src.cols());
  for (Eigen::Index y = 0; y < src.rows(); ++y) {
    for (Eigen::Index x = 0; x < src.cols(); ++x) {
      const std::uint8_t i = src(y, x);
      if (i < extent.i_min || i > extent.i_max) {
        throw RangeError("pixel (" + std::to_string(x) + ", " + std::to_string(y) + ") intensity " +
                         std::to_string(i) + " outside extent " + describe(extent));
      }
      values(y, x) = calibrate(i, extent, cal);
    }
  }
  return {std::move(values), cal, extent};
}

std::string_view to_string(Aggregator aggregator) noexcept {
  switch (aggregator) {
    case Aggregator::mean:
      return "mean";
    case Aggregator::median:
      return "median";
    case Aggregator::max:
      return "max";
  }
  return "mean";
}

std::optional<Aggregator> parse_aggregator(std::string_view name) {
  if (name == "mean") return Aggregator::mean;
  if (name == "median") return Aggregator::median;
  if (name == "max") return Aggregator::max;
  return std::nullopt;
}

double roi_temperature(const TemperatureMap& map, const Roi& roi, Aggregator aggregator) {
  check_roi(roi, map.width(), map.height());
  const auto block = map.values.block(roi.y, roi.x, roi.h, roi.w);
  switch (aggregator) {
    case Aggregator::mean:
      return block.mean();
    case Aggregator::max:
      return block.maxCoeff();
    case Aggregator::median: {
      std::vector<double> v(static_cast<std::size_t>(block.size()));
      Eigen::Map<Raster<double>>(v.data(), roi.h, roi.w) = block;
      const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
      std::nth_element(v.begin(), mid, v.end());
      if (v.size() % 2 == 1) return *mid;
      const double upper = *mid;
      const double lower = *std::max_element(v.begin(), mid);
      return lower + (upper - lower) / 2;
    }
  }
  throw std::invalid_argument("unknown aggregator");
}

std::string ValidationReport::accuracy_display() const {
  return std::to_string(static_cast<long long>(std::floor(accuracy_pct + 0.5))) + "%";
}

ValidationReport accuracy(double estimated, std::span<const double> references) {
  if (references.empty()) {
    throw std::invalid_argument("accuracy needs at least one reference temperature");
  }
  const double mean_reference =
      std::accumulate(references.begin(), references.end(), 0.0) / double(references.size());
  if (!(mean_reference > 0.0)) {
    throw MetricUndefinedError("accuracy is undefined for a mean reference at or below 0 degC");
  }
  const double abs_error = std::abs(estimated - mean_reference);
  return {estimated, std::vector<double>(references.begin(), references.end()), mean_reference,
          abs_error, (1.0 - abs_error / mean_reference) * 100.0};
}

}  // namespace thermoscope
