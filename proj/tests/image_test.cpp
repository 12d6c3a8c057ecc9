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

#include "thermoscope/image.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "thermoscope/errors.hpp"

namespace thermoscope {
namespace {

TEST(RgbImage, RejectsBadDimensions) {
  EXPECT_THROW(RgbImage(0, 3), std::invalid_argument);
  EXPECT_THROW(RgbImage(3, -1), std::invalid_argument);
  EXPECT_THROW(RgbImage(2, 2, RgbImage::Pixels::Zero(3, 3)), std::invalid_argument);
}

TEST(RgbImage, PixelAccessIsRowMajor) {
  RgbImage img(3, 2);
  img.set(2, 1, {1, 2, 3});
  EXPECT_EQ(img.at(2, 1), (Rgb{1, 2, 3}));
  EXPECT_EQ(img.bytes()[(1 * 3 + 2) * 3 + 0], 1);
  EXPECT_EQ(img.bytes()[(1 * 3 + 2) * 3 + 2], 3);
}

TEST(RedChannel, ProjectsSinglePixel) {
  RgbImage img(1, 1);
  img.set(0, 0, {200, 10, 99});
  const GrayImage gray = red_channel(img);
  ASSERT_EQ(gray.width(), 1);
  ASSERT_EQ(gray.height(), 1);
  EXPECT_EQ(gray(0, 0), 200);
}

TEST(RedChannel, AllGreenIsZero) {
  RgbImage img(5, 3);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 5; ++x) img.set(x, y, {0, 255, 0});
  const GrayImage gray = red_channel(img);
  EXPECT_EQ(gray.width(), 5);
  EXPECT_EQ(gray.height(), 3);
  EXPECT_TRUE((gray.intensities() == 0).all());
}

TEST(RedChannel, MatchesEveryPixelOfRandomImage) {
  std::mt19937_64 rng(7);
  const RgbImage img = testing::random_rgb(rng, 16, 16);
  const GrayImage gray = red_channel(img);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) EXPECT_EQ(gray(x, y), img.at(x, y).r);
  // Non-square too, to catch stride mix-ups.
  const RgbImage wide = testing::random_rgb(rng, 13, 4);
  const GrayImage wide_gray = red_channel(wide);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 13; ++x) EXPECT_EQ(wide_gray(x, y), wide.at(x, y).r);
}

TEST(Crop, IdentityCrop) {
  std::mt19937_64 rng(1);
  const GrayImage gray = testing::random_gray(rng, 9, 6);
  EXPECT_EQ(crop(gray, Roi{0, 0, 9, 6}), gray);
  const RgbImage rgb = testing::random_rgb(rng, 9, 6);
  EXPECT_EQ(crop(rgb, Roi{0, 0, 9, 6}), rgb);
}

TEST(Crop, PointCrop) {
  std::mt19937_64 rng(2);
  const GrayImage gray = testing::random_gray(rng, 9, 6);
  const RgbImage rgb = testing::random_rgb(rng, 9, 6);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 9; ++x) {
      const GrayImage g = crop(gray, Roi{x, y, 1, 1});
      EXPECT_EQ(g(0, 0), gray(x, y));
      EXPECT_EQ(crop(rgb, Roi{x, y, 1, 1}).at(0, 0), rgb.at(x, y));
    }
  }
}

TEST(Crop, ComposesByOffsettingOrigins) {
  std::mt19937_64 rng(3);
  const RgbImage rgb = testing::random_rgb(rng, 20, 15);
  const GrayImage gray = red_channel(rgb);
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int ax = pick(rng) % 20, ay = pick(rng) % 15;
    const Roi a{ax, ay, 1 + pick(rng) % (20 - ax), 1 + pick(rng) % (15 - ay)};
    const int bx = pick(rng) % a.w, by = pick(rng) % a.h;
    const Roi b{bx, by, 1 + pick(rng) % (a.w - bx), 1 + pick(rng) % (a.h - by)};
    const Roi composed{a.x + b.x, a.y + b.y, b.w, b.h};
    EXPECT_EQ(crop(crop(gray, a), b), crop(gray, composed));
    EXPECT_EQ(crop(crop(rgb, a), b), crop(rgb, composed));
  }
}

TEST(Crop, NeverReadsOutsideRoi) {
  // Border poisoned with 255 / (255,255,255); interior is a small-valued
  // pattern. Any out-of-roi read would show up as a 255.
  GrayImage gray(12, 10);
  RgbImage rgb(12, 10);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 12; ++x) {
      const bool border = x < 2 || x >= 10 || y < 2 || y >= 8;
      const auto v = static_cast<std::uint8_t>(border ? 255 : (x * 7 + y * 3) % 50);
      gray(x, y) = v;
      rgb.set(x, y, border ? Rgb{255, 255, 255} : Rgb{v, std::uint8_t(v + 1), std::uint8_t(v + 2)});
    }
  }
  const Roi roi{2, 2, 8, 6};
  const GrayImage g = crop(gray, roi);
  const RgbImage c = crop(rgb, roi);
  EXPECT_LT(g.intensities().maxCoeff(), 255);
  EXPECT_LT(c.pixels().maxCoeff(), 255);
  for (int y = 0; y < roi.h; ++y)
    for (int x = 0; x < roi.w; ++x) EXPECT_EQ(g(x, y), gray(x + 2, y + 2));
}

TEST(Crop, OutOfBoundsNamesEdge) {
  const GrayImage gray(10, 8);
  const auto edge_of = [&](Roi roi) {
    try {
      crop(gray, roi);
    } catch (const BoundsError& e) {
      return e.edge();
    }
    return std::string("none");
  };
  EXPECT_EQ(edge_of({-1, 0, 2, 2}), "left");
  EXPECT_EQ(edge_of({0, -3, 2, 2}), "top");
  EXPECT_EQ(edge_of({5, 0, 6, 2}), "right");
  EXPECT_EQ(edge_of({0, 4, 2, 5}), "bottom");
  EXPECT_EQ(edge_of({0, 0, 0, 2}), "right");
  EXPECT_EQ(edge_of({9, 7, 1, 1}), "none");
  EXPECT_THROW(crop(RgbImage(4, 4), Roi{3, 3, 2, 1}), BoundsError);
}

TEST(IntensityExtent, ConstantImage) {
  GrayImage gray(6, 4);
  gray.intensities().setConstant(77);
  EXPECT_EQ(intensity_extent(gray), (IntensityExtent{77, 77}));
  EXPECT_TRUE(intensity_extent(gray).degenerate());
}

TEST(IntensityExtent, FullRange) {
  GrayImage gray(16, 16);
  for (int k = 0; k < 256; ++k) gray(k % 16, k / 16) = static_cast<std::uint8_t>(255 - k);
  EXPECT_EQ(intensity_extent(gray), (IntensityExtent{0, 255}));
}

TEST(IntensityExtent, MatchesBruteForceScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage gray = testing::random_gray(rng, 32, 32, trial, 255 - trial * 3);
    int lo = 256, hi = -1;
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) {
        lo = std::min<int>(lo, gray(x, y));
        hi = std::max<int>(hi, gray(x, y));
      }
    }
    const IntensityExtent e = intensity_extent(gray);
    EXPECT_EQ(e.i_min, lo);
    EXPECT_EQ(e.i_max, hi);
  }
}

TEST(IntensityExtent, EmptyImageThrows) {
  EXPECT_THROW(intensity_extent(GrayImage()), EmptyImageError);
  EXPECT_THROW(intensity_extent(GrayImage(0, 5)), EmptyImageError);
}

TEST(Imaging, OperationsAreDeterministic) {
  std::mt19937_64 rng(5);
  const RgbImage rgb = testing::random_rgb(rng, 10, 7);
  EXPECT_EQ(red_channel(rgb), red_channel(rgb));
  EXPECT_EQ(crop(rgb, Roi{1, 2, 3, 4}), crop(rgb, Roi{1, 2, 3, 4}));
  EXPECT_EQ(intensity_extent(red_channel(rgb)), intensity_extent(red_channel(rgb)));
}

}  // namespace
}  // namespace thermoscope
