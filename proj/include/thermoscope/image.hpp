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

// Image rasters and the red-channel preprocessing chain.

#ifndef THERMOSCOPE_IMAGE_HPP
#define THERMOSCOPE_IMAGE_HPP

#include <cstdint>
#include <span>

#include <Eigen/Core>

namespace thermoscope {

/// Dense row-major raster, height rows by width columns.
template <typename Scalar>
using Raster = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// 8-bit RGB raster with interleaved storage; one row of `pixels()` per
/// pixel, in scanline order, so the memory layout is exactly a PPM payload.
class RgbImage {
 public:
  using Pixels = Eigen::Array<std::uint8_t, Eigen::Dynamic, 3, Eigen::RowMajor>;

  /// Black image. Throws std::invalid_argument unless width, height >= 1.
  RgbImage(int width, int height);
  /// Throws std::invalid_argument if pixels.rows() != width * height.
  RgbImage(int width, int height, Pixels pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Eigen::Index size() const noexcept { return pixels_.rows(); }

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb value);

  const Pixels& pixels() const noexcept { return pixels_; }
  Pixels& pixels() noexcept { return pixels_; }

  /// Interleaved r,g,b bytes.
  std::span<const std::uint8_t> bytes() const noexcept {
    return {pixels_.data(), static_cast<std::size_t>(pixels_.size())};
  }

  friend bool operator==(const RgbImage& a, const RgbImage& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && (a.pixels_ == b.pixels_).all();
  }

 private:
  Eigen::Index index(int x, int y) const { return Eigen::Index(y) * width_ + x; }

  int width_;
  int height_;
  Pixels pixels_;
};

/// 8-bit single-channel raster. May be empty (0 x 0).
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height);
  explicit GrayImage(Raster<std::uint8_t> intensities) : intensities_(std::move(intensities)) {}

  int width() const noexcept { return static_cast<int>(intensities_.cols()); }
  int height() const noexcept { return static_cast<int>(intensities_.rows()); }
  Eigen::Index size() const noexcept { return intensities_.size(); }

  std::uint8_t operator()(int x, int y) const { return intensities_(y, x); }
  std::uint8_t& operator()(int x, int y) { return intensities_(y, x); }

  const Raster<std::uint8_t>& intensities() const noexcept { return intensities_; }
  Raster<std::uint8_t>& intensities() noexcept { return intensities_; }

  friend bool operator==(const GrayImage& a, const GrayImage& b) {
    return a.intensities_.rows() == b.intensities_.rows() &&
           a.intensities_.cols() == b.intensities_.cols() &&
           (a.intensities_ == b.intensities_).all();
  }

 private:
  Raster<std::uint8_t> intensities_;
};

/// Axis-aligned region of interest: left column, top row, width, height.
struct Roi {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  friend bool operator==(const Roi&, const Roi&) = default;
};

/// Throws BoundsError naming the first violated edge if `roi` does not fit a
/// width x height image (or has a non-positive size).
void check_roi(const Roi& roi, int width, int height);

/// Lowest and highest intensity present in an image.
struct IntensityExtent {
  std::uint8_t i_min = 0;
  std::uint8_t i_max = 0;

  bool degenerate() const noexcept { return i_min == i_max; }

  friend bool operator==(const IntensityExtent&, const IntensityExtent&) = default;
};

/// Grayscale intensity field taken verbatim from the red channel. No luma
/// weighting is applied.
GrayImage red_channel(const RgbImage& img);

GrayImage crop(const GrayImage& img, const Roi& roi);
RgbImage crop(const RgbImage& img, const Roi& roi);

/// Throws EmptyImageError for a zero-pixel image.
IntensityExtent intensity_extent(const GrayImage& img);

}  // namespace thermoscope

#endif  // THERMOSCOPE_IMAGE_HPP
