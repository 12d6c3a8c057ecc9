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

#include "thermoscope/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "thermoscope/errors.hpp"

namespace thermoscope {

namespace {

// --- PPM -------------------------------------------------------------------

class PpmHeaderReader {
 public:
  PpmHeaderReader(std::span<const std::uint8_t> bytes, std::size_t pos) : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const noexcept { return pos_; }

  // Whitespace and '#' comments between header tokens.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* field) {
    skip_separators();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw DecodeError(std::string("PPM ") + field + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw DecodeError(std::string("PPM header: expected ") + field, pos_);
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

RgbImage decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' && bytes[1] <= '7') {
      throw UnsupportedFormatError("only binary RGB PPM (P6) is supported, got P" +
                                   std::string(1, static_cast<char>(bytes[1])));
    }
    throw DecodeError("missing P6 magic number", 0);
  }
  PpmHeaderReader reader(bytes, 2);
  const auto width = reader.read_uint("width");
  const auto height = reader.read_uint("height");
  const auto maxval = reader.read_uint("maxval");
  std::size_t pos = reader.pos();
  if (width == 0 || height == 0) throw DecodeError("PPM image has zero width or height", 2);
  if (width > std::numeric_limits<int>::max() || height > std::numeric_limits<int>::max()) {
    throw DecodeError("PPM dimensions too large", 2);
  }
  if (maxval == 0 || maxval > 65535) throw DecodeError("PPM maxval out of range", pos);
  if (maxval != 255) {
    throw UnsupportedFormatError("PPM maxval " + std::to_string(maxval) + " is unsupported; need 255");
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw DecodeError("PPM header must end with a single whitespace byte", pos);
  }
  ++pos;

  const std::uint64_t payload = width * height * 3;
  if (bytes.size() - pos < payload) {
    throw DecodeError("truncated PPM payload: need " + std::to_string(payload) + " bytes, have " +
                          std::to_string(bytes.size() - pos),
                      bytes.size());
  }
  RgbImage img(static_cast<int>(width), static_cast<int>(height));
  std::memcpy(img.pixels().data(), bytes.data() + pos, payload);
  return img;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.bytes().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.bytes().begin(), img.bytes().end());
  return out;
}

// --- PNG -------------------------------------------------------------------

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::uint32_t read_be32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
         std::uint32_t(p[3]);
}

struct PngLayout {
  std::uint8_t bit_depth = 0;
  std::uint8_t color_type = 0;
  std::size_t first_idat = 0;
};

// Walks the chunk list so that truncation is reported at the chunk where the
// data runs out; libpng itself does not expose offsets.
PngLayout scan_png_chunks(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPngSignature.size() ||
      !std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
    throw DecodeError("missing PNG signature", 0);
  }
  PngLayout layout;
  std::size_t pos = kPngSignature.size();
  bool first = true;
  for (;;) {
    if (bytes.size() - pos < 8) throw DecodeError("truncated PNG chunk header", pos);
    const std::uint32_t length = read_be32(&bytes[pos]);
    const std::string type(reinterpret_cast<const char*>(&bytes[pos + 4]), 4);
    if (length > 0x7fffffffu || bytes.size() - pos - 8 < std::uint64_t(length) + 4) {
      throw DecodeError("truncated PNG chunk '" + type + "'", pos);
    }
    if (first) {
      if (type != "IHDR" || length != 13) throw DecodeError("PNG must start with IHDR", pos);
      layout.bit_depth = bytes[pos + 8 + 8];
      layout.color_type = bytes[pos + 8 + 9];
      first = false;
    }
    if (type == "IDAT" && layout.first_idat == 0) layout.first_idat = pos;
    if (type == "IEND") break;
    pos += 12 + length;
  }
  if (layout.first_idat == 0) throw DecodeError("PNG has no IDAT chunk", pos);
  if (layout.color_type == PNG_COLOR_TYPE_PALETTE) {
    throw UnsupportedFormatError("paletted PNG is unsupported");
  }
  if (layout.color_type != PNG_COLOR_TYPE_RGB && layout.color_type != PNG_COLOR_TYPE_RGB_ALPHA) {
    throw UnsupportedFormatError("PNG color type " + std::to_string(layout.color_type) +
                                 " is unsupported; need RGB or RGBA");
  }
  if (layout.bit_depth != 8) {
    throw UnsupportedFormatError(std::to_string(layout.bit_depth) +
                                 "-bit PNG is unsupported; need 8-bit");
  }
  return layout;
}

struct PngReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
  char message[256] = {};
};

extern "C" void png_read_from_span(png_structp png, png_bytep out, png_size_t count) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->bytes.size() - state->pos < count) png_error(png, "read past end of data");
  std::memcpy(out, state->bytes.data() + state->pos, count);
  state->pos += count;
}

extern "C" void png_record_error(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngReadState*>(png_get_error_ptr(png));
  std::snprintf(state->message, sizeof(state->message), "%s", msg);
  png_longjmp(png, 1);
}

extern "C" void png_ignore_warning(png_structp, png_const_charp) {}

RgbImage decode_png(std::span<const std::uint8_t> bytes) {
  const PngLayout layout = scan_png_chunks(bytes);

  PngReadState state;
  state.bytes = bytes;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, png_record_error,
                                           png_ignore_warning);
  if (png == nullptr) throw std::bad_alloc();
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::bad_alloc();
  }

  // Everything touched after setjmp lives outside this frame or is volatile.
  std::vector<std::uint8_t> raw;
  std::vector<png_bytep> rows;
  volatile png_uint_32 width = 0;
  volatile png_uint_32 height = 0;
  volatile int channels = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError(std::string("PNG decode failed: ") + state.message, layout.first_idat);
  }

  png_set_read_fn(png, &state, png_read_from_span);
  png_read_info(png, info);
  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  channels = png_get_channels(png, info);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const std::size_t stride = std::size_t(width) * channels;
  raw.resize(stride * height);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = raw.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  if (width > png_uint_32(std::numeric_limits<int>::max()) ||
      height > png_uint_32(std::numeric_limits<int>::max())) {
    throw DecodeError("PNG dimensions too large", kPngSignature.size());
  }
  RgbImage img(static_cast<int>(width), static_cast<int>(height));
  if (channels == 3) {
    std::memcpy(img.pixels().data(), raw.data(), raw.size());
  } else {
    const Eigen::Map<const Eigen::Array<std::uint8_t, Eigen::Dynamic, 4, Eigen::RowMajor>> rgba(
        raw.data(), img.size(), 4);
    img.pixels() = rgba.leftCols<3>();
  }
  return img;
}

struct PngWriteState {
  std::vector<std::uint8_t>* out = nullptr;
  char message[256] = {};
};

extern "C" void png_write_to_vector(png_structp png, png_bytep data, png_size_t count) {
  auto* state = static_cast<PngWriteState*>(png_get_io_ptr(png));
  state->out->insert(state->out->end(), data, data + count);
}

extern "C" void png_flush_noop(png_structp) {}

extern "C" void png_record_write_error(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngWriteState*>(png_get_error_ptr(png));
  std::snprintf(state->message, sizeof(state->message), "%s", msg);
  png_longjmp(png, 1);
}

std::vector<std::uint8_t> encode_png(const RgbImage& img) {
  std::vector<std::uint8_t> out;
  PngWriteState state;
  state.out = &out;
  std::vector<png_bytep> rows(img.height());
  auto* data = const_cast<std::uint8_t*>(img.pixels().data());
  for (int y = 0; y < img.height(); ++y) rows[y] = data + std::size_t(y) * img.width() * 3;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state, png_record_write_error,
                                            png_ignore_warning);
  if (png == nullptr) throw std::bad_alloc();
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw std::bad_alloc();
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error(std::string("PNG encode failed: ") + state.message);
  }
  png_set_write_fn(png, &state, png_write_to_vector, png_flush_noop);
  png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(ImageFormat format) noexcept {
  return format == ImageFormat::png ? "png" : "ppm";
}

std::optional<ImageFormat> parse_image_format(std::string_view name) {
  const std::string lower = lowercase(name);
  if (lower == "png") return ImageFormat::png;
  if (lower == "ppm" || lower == "pnm") return ImageFormat::ppm;
  return std::nullopt;
}

std::optional<ImageFormat> format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_image_format(std::string_view(ext).substr(1));
}

RgbImage decode(std::span<const std::uint8_t> bytes, ImageFormat format) {
  return format == ImageFormat::png ? decode_png(bytes) : decode_ppm(bytes);
}

std::vector<std::uint8_t> encode(const RgbImage& img, ImageFormat format) {
  return format == ImageFormat::png ? encode_png(img) : encode_ppm(img);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileReadError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FileReadError("error while reading '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileWriteError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw FileWriteError("error while writing '" + path.string() + "'");
}

RgbImage read_image(const std::filesystem::path& path, std::optional<ImageFormat> format) {
  const auto bytes = read_file(path);
  if (!format) format = format_from_path(path);
  if (!format) {
    // Sniff: PNG signature or PPM magic.
    format = bytes.size() >= 4 && bytes[0] == 0x89 && bytes[1] == 'P' ? ImageFormat::png
                                                                      : ImageFormat::ppm;
  }
  return decode(bytes, *format);
}

void write_image(const std::filesystem::path& path, const RgbImage& img,
                 std::optional<ImageFormat> format) {
  if (!format) format = format_from_path(path);
  write_file(path, encode(img, format.value_or(ImageFormat::ppm)));
}

}  // namespace thermoscope
