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

// PNG and binary PPM (P6) codecs.
//
// PPM output is bit-exact: "P6\n<w> <h>\n255\n" followed by raw RGB bytes.
// PNG input must be 8-bit RGB or RGBA; alpha is dropped. PNG output is 8-bit
// RGB and only round-trip equality is guaranteed, not byte identity.

#ifndef THERMOSCOPE_IMAGE_IO_HPP
#define THERMOSCOPE_IMAGE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermoscope/image.hpp"

namespace thermoscope {

enum class ImageFormat { png, ppm };

std::string_view to_string(ImageFormat format) noexcept;
std::optional<ImageFormat> parse_image_format(std::string_view name);

/// Format implied by a file extension (.png, .ppm, .pnm), if any.
std::optional<ImageFormat> format_from_path(const std::filesystem::path& path);

/// Throws DecodeError (with byte offset) for malformed or truncated input and
/// UnsupportedFormatError for 16-bit, paletted, grayscale, or non-255 maxval
/// input.
RgbImage decode(std::span<const std::uint8_t> bytes, ImageFormat format);

std::vector<std::uint8_t> encode(const RgbImage& img, ImageFormat format);

/// File helpers. Throw FileReadError / FileWriteError on I/O failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

RgbImage read_image(const std::filesystem::path& path, std::optional<ImageFormat> format = {});
void write_image(const std::filesystem::path& path, const RgbImage& img,
                 std::optional<ImageFormat> format = {});

}  // namespace thermoscope

#endif  // THERMOSCOPE_IMAGE_IO_HPP
