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

#ifndef THERMOSCOPE_TESTS_TEST_SUPPORT_HPP
#define THERMOSCOPE_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermoscope/image.hpp"

namespace thermoscope::testing {

inline std::filesystem::path data_dir() { return THERMOSCOPE_TEST_DATA_DIR; }

/// Rows of a comma-separated file, header skipped. Numbers stay as text so
/// callers decide how to parse them (values may underflow double).
inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

inline RgbImage random_rgb(std::mt19937_64& rng, int width, int height) {
  RgbImage img(width, height);
  std::uniform_int_distribution<int> byte(0, 255);
  for (Eigen::Index k = 0; k < img.pixels().size(); ++k) {
    img.pixels().data()[k] = static_cast<std::uint8_t>(byte(rng));
  }
  return img;
}

inline GrayImage random_gray(std::mt19937_64& rng, int width, int height, int lo = 0, int hi = 255) {
  GrayImage img(width, height);
  std::uniform_int_distribution<int> level(lo, hi);
  for (Eigen::Index k = 0; k < img.intensities().size(); ++k) {
    img.intensities().data()[k] = static_cast<std::uint8_t>(level(rng));
  }
  return img;
}

}  // namespace thermoscope::testing

#endif  // THERMOSCOPE_TESTS_TEST_SUPPORT_HPP
