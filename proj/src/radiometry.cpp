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

#include "thermoscope/radiometry.hpp"

#include <utility>

namespace thermoscope {

AbsoluteTemperature::AbsoluteTemperature(double kelvin)
    : kelvin_(kelvin), celsius_(kelvin - kCelsiusOffset) {
  if (!std::isfinite(kelvin) || !(kelvin > 0)) {
    throw DomainError("absolute temperature must be finite and above 0 K");
  }
}

AbsoluteTemperature AbsoluteTemperature::from_celsius(double celsius) {
  if (!std::isfinite(celsius) || !(celsius > -kCelsiusOffset)) {
    throw DomainError("temperature must be finite and above -273.15 degC");
  }
  return AbsoluteTemperature(celsius + kCelsiusOffset, celsius);
}

AbsoluteTemperature celsius_to_kelvin(double celsius) {
  return AbsoluteTemperature::from_celsius(celsius);
}

double kelvin_to_celsius(const AbsoluteTemperature& t) noexcept { return t.celsius(); }

SpectralBand::SpectralBand(std::string name, double wavelength_m)
    : name_(std::move(name)), wavelength_(wavelength_m) {
  if (!std::isfinite(wavelength_m) || !(wavelength_m > 0)) {
    throw DomainError("spectral band wavelength must be finite and positive");
  }
  frequency_ = PhysicalConstants<double>::speed_of_light / wavelength_m;
}

SpectralBand SpectralBand::red() { return SpectralBand("red", 700e-9); }

SpectralBand SpectralBand::blue() { return SpectralBand("blue", 490e-9); }

double spectral_radiance(const SpectralBand& band, const AbsoluteTemperature& t) {
  return spectral_radiance(band.frequency(), t.kelvin());
}

double log_spectral_radiance(const SpectralBand& band, const AbsoluteTemperature& t) {
  return log_spectral_radiance(band.frequency(), t.kelvin());
}

double band_dominance_ratio(const AbsoluteTemperature& t) {
  static const SpectralBand red = SpectralBand::red();
  static const SpectralBand blue = SpectralBand::blue();
  // Both radiances underflow together below ~2 K; the log difference does not.
  return std::exp(log_spectral_radiance(blue, t) - log_spectral_radiance(red, t));
}

}  // namespace thermoscope
