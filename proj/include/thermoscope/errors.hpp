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

#ifndef THERMOSCOPE_ERRORS_HPP
#define THERMOSCOPE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thermoscope {

/// Invalid physical input (non-positive temperature, frequency, ...).
/// Signals a caller bug rather than bad data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or truncated image payload.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed image in a variant we do not read (16-bit, paletted, ...).
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class FileReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be created or written.
class FileWriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A region that does not fit inside the image it is applied to.
class BoundsError : public std::out_of_range {
 public:
  BoundsError(const std::string& edge, const std::string& what)
      : std::out_of_range(what), edge_(edge) {}

  /// One of "left", "top", "right", "bottom".
  const std::string& edge() const noexcept { return edge_; }

 private:
  std::string edge_;
};

class EmptyImageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Intensity outside the calibrated extent.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// i_min == i_max: the linear calibration has no slope to anchor.
class DegenerateExtentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// t_low >= t_high.
class DegenerateCalibrationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accuracy percentage is undefined for a mean reference at or below 0 degC.
class MetricUndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace thermoscope

#endif  // THERMOSCOPE_ERRORS_HPP
