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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "test_support.hpp"
#include "thermoscope/errors.hpp"

namespace thermoscope {
namespace {

// Scalar affine map in long double, independent of std::lerp.
long double oracle_temperature(int i, IntensityExtent e, const CalibrationRange& cal) {
  return (long double)cal.t_low() +
         ((long double)cal.t_high() - cal.t_low()) * (i - e.i_min) / (long double)(e.i_max - e.i_min);
}

TEST(CalibrationRange, Validation) {
  EXPECT_NO_THROW(CalibrationRange(30, 40));
  EXPECT_THROW(CalibrationRange(40, 40), DegenerateCalibrationError);
  EXPECT_THROW(CalibrationRange(41, 40), DegenerateCalibrationError);
  EXPECT_THROW(CalibrationRange(-273.15, 40), DomainError);
  EXPECT_THROW(CalibrationRange(0, std::nan("")), DomainError);
  EXPECT_EQ(CalibrationRange::default_range(), CalibrationRange(30.0, 40.0));
  EXPECT_DOUBLE_EQ(CalibrationRange(30, 40).half_quantum(), 10.0 / 510.0);
}

TEST(PixelTemperature, EndpointsAndMidpoint) {
  const CalibrationRange cal(30.0, 40.0);
  const IntensityExtent e{20, 220};
  EXPECT_EQ(pixel_temperature(20, e, cal), 30.0);
  EXPECT_EQ(pixel_temperature(220, e, cal), 40.0);
  EXPECT_EQ(pixel_temperature(120, e, cal), 35.0);
}

TEST(PixelTemperature, EndpointsExactForAwkwardCalibrations) {
  // 0.1 + (0.3 - 0.1) * 1 != 0.3 in double; the map must still hit t_high.
  const CalibrationRange cal(0.1, 0.3);
  const IntensityExtent e{3, 250};
  EXPECT_EQ(pixel_temperature(3, e, cal), 0.1);
  EXPECT_EQ(pixel_temperature(250, e, cal), 0.3);
}

TEST(PixelTemperature, FullRangeValueAt97) {
  const CalibrationRange cal(30.0, 40.0);
  const IntensityExtent e{0, 255};
  // 30 + 10 * 97 / 255
  EXPECT_NEAR(pixel_temperature(97, e, cal), 33.80392156862745, 1e-12);
  for (int i = 0; i < 256; ++i) {
    EXPECT_NEAR(pixel_temperature(static_cast<std::uint8_t>(i), e, cal), (double)oracle_temperature(i, e, cal),
                1e-12)
        << i;
  }
}

TEST(PixelTemperature, Errors) {
  const CalibrationRange cal(30.0, 40.0);
  EXPECT_THROW(pixel_temperature(5, IntensityExtent{10, 20}, cal), RangeError);
  EXPECT_THROW(pixel_temperature(21, IntensityExtent{10, 20}, cal), RangeError);
  EXPECT_THROW(pixel_temperature(10, IntensityExtent{10, 10}, cal), DegenerateExtentError);
}

TEST(PixelTemperature, IsAffineInIntensity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> temp(-50.0, 200.0);
  std::uniform_int_distribution<int> level(0, 255);
  for (int trial = 0; trial < 500; ++trial) {
    double a = temp(rng), b = temp(rng);
    if (a == b) continue;
    const CalibrationRange cal(std::min(a, b), std::max(a, b));
    int lo = level(rng), hi = level(rng);
    if (hi - lo < 2) continue;
    const IntensityExtent e{std::uint8_t(lo), std::uint8_t(hi)};
    std::vector<int> pts = {lo + (hi - lo) / 3, lo + (hi - lo) / 2, hi};
    const double ta = pixel_temperature(std::uint8_t(pts[0]), e, cal);
    const double tb = pixel_temperature(std::uint8_t(pts[1]), e, cal);
    const double tc = pixel_temperature(std::uint8_t(pts[2]), e, cal);
    if (pts[1] == pts[0] || pts[2] == pts[1]) continue;
    const double s1 = (tb - ta) / (pts[1] - pts[0]);
    const double s2 = (tc - tb) / (pts[2] - pts[1]);
    const double scale = std::max(std::abs(cal.t_low()), std::abs(cal.t_high())) / (hi - lo);
    EXPECT_LE(std::abs(s1 - s2), 1e-12 * std::max(std::abs(s1), scale) * (hi - lo)) << trial;
  }
}

TEST(PixelTemperature, MonotoneNonDecreasing) {
  const CalibrationRange cal(-12.5, 87.25);
  const IntensityExtent e{7, 201};
  double previous = -1e300;
  for (int i = 7; i <= 201; ++i) {
    const double t = pixel_temperature(std::uint8_t(i), e, cal);
    EXPECT_GE(t, previous);
    previous = t;
  }
}

TEST(TemperatureMap, ConstantImageIsDegenerate) {
  GrayImage g(4, 4);
  g.intensities().setConstant(9);
  EXPECT_THROW(temperature_map(g, CalibrationRange(30, 40), intensity_extent(g)), DegenerateExtentError);
}

TEST(TemperatureMap, TwoPixelEndpoints) {
  GrayImage g(2, 1);
  g(0, 0) = 17;
  g(1, 0) = 230;
  const auto map = temperature_map(g, CalibrationRange(30, 40), intensity_extent(g));
  EXPECT_EQ(map(0, 0), 30.0);
  EXPECT_EQ(map(1, 0), 40.0);
}

TEST(TemperatureMap, MatchesScalarOracle) {
  std::mt19937_64 rng(16);
  const GrayImage g = testing::random_gray(rng, 16, 16);
  const CalibrationRange cal(30.0, 40.0);
  const auto extent = intensity_extent(g);
  const auto map = temperature_map(g, cal, extent);
  ASSERT_EQ(map.width(), 16);
  ASSERT_EQ(map.height(), 16);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) EXPECT_EQ(map(x, y), pixel_temperature(g(x, y), extent, cal));
}

TEST(TemperatureMap, PixelOutsideExtentNamesCoordinate) {
  GrayImage g(3, 2);
  g(0, 0) = 50;
  g(2, 1) = 200;
  try {
    temperature_map(g, CalibrationRange(30, 40), IntensityExtent{40, 100});
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 0)"), std::string::npos) << e.what();
  }
}

TEST(TemperatureMap, ValuesConfinedToCalibration) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> temp(-100.0, 500.0);
  for (int trial = 0; trial < 50; ++trial) {
    const GrayImage g = testing::random_gray(rng, 12, 9);
    double a = temp(rng), b = temp(rng);
    const CalibrationRange cal(std::min(a, b), std::max(a, b));
    const auto map = temperature_map(g, cal, intensity_extent(g));
    EXPECT_GE(map.values.minCoeff(), cal.t_low());
    EXPECT_LE(map.values.maxCoeff(), cal.t_high());
  }
}

TEST(TemperatureMap, CalibrationShiftShiftsValues) {
  std::mt19937_64 rng(22);
  const GrayImage g = testing::random_gray(rng, 10, 10);
  const auto extent = intensity_extent(g);
  const CalibrationRange cal(30.0, 40.0);
  const auto base = temperature_map(g, cal, extent);
  for (double d : {-15.0, 0.5, 2.25, 100.0}) {
    const auto shifted = temperature_map(g, cal.shifted(d), extent);
    // A shift is exact up to one rounding of the sum.
    EXPECT_LE(((shifted.values - base.values) - d).abs().maxCoeff(), 4 * 1e-16 * (std::abs(d) + 40.0)) << d;
  }
}

TEST(RoiTemperature, SingletonAndConstant) {
  std::mt19937_64 rng(23);
  const GrayImage g = testing::random_gray(rng, 8, 8);
  const auto map = temperature_map(g, CalibrationRange(30, 40), intensity_extent(g));
  for (auto agg : {Aggregator::mean, Aggregator::median, Aggregator::max}) {
    EXPECT_EQ(roi_temperature(map, Roi{3, 4, 1, 1}, agg), map(3, 4));
  }
  TemperatureMap flat{Raster<double>::Constant(6, 6, 36.5), CalibrationRange(30, 40), {0, 255}};
  for (auto agg : {Aggregator::mean, Aggregator::median, Aggregator::max}) {
    EXPECT_EQ(roi_temperature(flat, Roi{1, 1, 4, 3}, agg), 36.5);
  }
}

TEST(RoiTemperature, MeanMatchesBruteForce) {
  std::mt19937_64 rng(24);
  const GrayImage g = testing::random_gray(rng, 16, 16);
  const auto map = temperature_map(g, CalibrationRange(30, 40), intensity_extent(g));
  const Roi roi{5, 7, 4, 4};
  double sum = 0.0;
  for (int y = roi.y; y < roi.y + 4; ++y)
    for (int x = roi.x; x < roi.x + 4; ++x) sum += map(x, y);
  EXPECT_NEAR(roi_temperature(map, roi), sum / 16.0, 1e-12);
}

TEST(RoiTemperature, MedianAndMax) {
  TemperatureMap map{Raster<double>(2, 3), CalibrationRange(30, 40), {0, 255}};
  map.values << 31, 39, 35, 33, 30, 40;
  EXPECT_EQ(roi_temperature(map, Roi{0, 0, 3, 1}, Aggregator::median), 35.0);
  EXPECT_EQ(roi_temperature(map, Roi{0, 0, 2, 2}, Aggregator::median), 32.0);  // 30 31 | 33 39
  EXPECT_EQ(roi_temperature(map, Roi{0, 0, 3, 2}, Aggregator::max), 40.0);
}

TEST(RoiTemperature, AggregatesBetweenMinAndMax) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  const GrayImage g = testing::random_gray(rng, 20, 20);
  const auto map = temperature_map(g, CalibrationRange(-5, 45), intensity_extent(g));
  for (int trial = 0; trial < 200; ++trial) {
    const int x = pick(rng) % 20, y = pick(rng) % 20;
    const Roi roi{x, y, 1 + pick(rng) % (20 - x), 1 + pick(rng) % (20 - y)};
    const auto block = map.values.block(roi.y, roi.x, roi.h, roi.w);
    for (auto agg : {Aggregator::mean, Aggregator::median, Aggregator::max}) {
      const double t = roi_temperature(map, roi, agg);
      EXPECT_GE(t, block.minCoeff() - 1e-12);
      EXPECT_LE(t, block.maxCoeff() + 1e-12);
    }
  }
}

TEST(RoiTemperature, OutOfBounds) {
  TemperatureMap map{Raster<double>::Zero(4, 4), CalibrationRange(30, 40), {0, 255}};
  EXPECT_THROW(roi_temperature(map, Roi{3, 0, 2, 1}), BoundsError);
}

TEST(Aggregator, Names) {
  EXPECT_EQ(parse_aggregator("median"), Aggregator::median);
  EXPECT_EQ(parse_aggregator("avg"), std::nullopt);
  EXPECT_EQ(to_string(Aggregator::max), "max");
}

TEST(Accuracy, SingleReferenceReproducesPublishedFigure) {
  const std::vector<double> refs = {34.9};
  const auto report = accuracy(33.8, refs);
  EXPECT_NEAR(report.abs_error, 1.1, 1e-12);
  EXPECT_NEAR(report.accuracy_pct, 96.84813753581662, 1e-9);
  EXPECT_EQ(report.accuracy_display(), "97%");
  EXPECT_EQ(report.mean_reference, 34.9);
}

TEST(Accuracy, TwoReferences) {
  const std::vector<double> refs = {34.6, 34.9};
  const auto report = accuracy(33.8, refs);
  EXPECT_NEAR(report.mean_reference, 34.75, 1e-12);
  EXPECT_NEAR(report.abs_error, 0.95, 1e-12);
  // (1 - 0.95 / 34.75) * 100
  EXPECT_NEAR(report.accuracy_pct, 97.26618705035972, 1e-9);
  EXPECT_EQ(report.accuracy_display(), "97%");
}

TEST(Accuracy, ExactMatchIsHundred) {
  const std::vector<double> refs = {36.6};
  const auto report = accuracy(36.6, refs);
  EXPECT_EQ(report.accuracy_pct, 100.0);
  EXPECT_EQ(report.accuracy_display(), "100%");
}

TEST(Accuracy, NeverExceedsHundred) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> temp(0.5, 60.0);
  for (int k = 0; k < 1000; ++k) {
    const std::vector<double> refs = {temp(rng), temp(rng)};
    EXPECT_LE(accuracy(temp(rng), refs).accuracy_pct, 100.0);
  }
}

TEST(Accuracy, Errors) {
  EXPECT_THROW(accuracy(33.8, std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(accuracy(1.0, std::vector<double>{0.0}), MetricUndefinedError);
  EXPECT_THROW(accuracy(1.0, std::vector<double>{-3.0, 1.0}), MetricUndefinedError);
}

}  // namespace
}  // namespace thermoscope
