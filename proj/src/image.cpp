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

#include <stdexcept>
#include <string>
#include <utility>

#include "thermoscope/errors.hpp"

namespace thermoscope {

RgbImage::RgbImage(int width, int height)
    : RgbImage(width, height, Pixels::Zero(Eigen::Index(std::max(width, 0)) * std::max(height, 0), 3)) {}

RgbImage::RgbImage(int width, int height, Pixels pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("RGB image dimensions must be at least 1x1, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
  if (pixels_.rows() != Eigen::Index(width) * height) {
    throw std::invalid_argument("RGB image pixel count " + std::to_string(pixels_.rows()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

Rgb RgbImage::at(int x, int y) const {
  const auto row = pixels_.row(index(x, y));
  return {row(0), row(1), row(2)};
}

void RgbImage::set(int x, int y, Rgb value) {
  pixels_.row(index(x, y)) << value.r, value.g, value.b;
}

GrayImage::GrayImage(int width, int height) : intensities_(Raster<std::uint8_t>::Zero(height, width)) {
  if (width < 0 || height < 0) {
    throw std::invalid_argument("gray image dimensions must be non-negative");
  }
}

void check_roi(const Roi& roi, int width, int height) {
  const auto describe = [&] {
    return "roi " + std::to_string(roi.x) + "," + std::to_string(roi.y) + "," +
           std::to_string(roi.w) + "," + std::to_string(roi.h) + " does not fit " +
           std::to_string(width) + "x" + std::to_string(height) + " image";
  };
  if (roi.x < 0) throw BoundsError("left", describe() + ": left edge before column 0");
  if (roi.y < 0) throw BoundsError("top", describe() + ": top edge before row 0");
  if (roi.w < 1 || std::int64_t(roi.x) + roi.w > width) {
    throw BoundsError("right", describe() + ": right edge past last column");
  }
  if (roi.h < 1 || std::int64_t(roi.y) + roi.h > height) {
    throw BoundsError("bottom", describe() + ": bottom edge past last row");
  }
}

GrayImage red_channel(const RgbImage& img) {
  using Stride = Eigen::Stride<Eigen::Dynamic, 3>;
  const Eigen::Map<const Raster<std::uint8_t>, 0, Stride> red(
      img.pixels().data(), img.height(), img.width(), Stride(3 * Eigen::Index(img.width()), 3));
  return GrayImage(Raster<std::uint8_t>(red));
}

GrayImage crop(const GrayImage& img, const Roi& roi) {
  check_roi(roi, img.width(), img.height());
  return GrayImage(Raster<std::uint8_t>(img.intensities().block(roi.y, roi.x, roi.h, roi.w)));
}

RgbImage crop(const RgbImage& img, const Roi& roi) {
  check_roi(roi, img.width(), img.height());
  RgbImage::Pixels out(Eigen::Index(roi.w) * roi.h, 3);
  for (int row = 0; row < roi.h; ++row) {
    const Eigen::Index src = Eigen::Index(roi.y + row) * img.width() + roi.x;
    out.middleRows(Eigen::Index(row) * roi.w, roi.w) = img.pixels().middleRows(src, roi.w);
  }
  return RgbImage(roi.w, roi.h, std::move(out));
}

IntensityExtent intensity_extent(const GrayImage& img) {
  if (img.size() == 0) {
    throw EmptyImageError("intensity extent of an empty image is undefined");
  }
  return {img.intensities().minCoeff(), img.intensities().maxCoeff()};
}

}  // namespace thermoscope
