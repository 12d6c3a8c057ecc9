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

// Planck blackbody radiance in the frequency form and the two visible bands
// used by the red-channel thermometry pipeline.

#ifndef THERMOSCOPE_RADIOMETRY_HPP
#define THERMOSCOPE_RADIOMETRY_HPP

#include <cmath>
#include <concepts>
#include <string>

#include <Eigen/Core>

#include "thermoscope/errors.hpp"

namespace thermoscope {

/// Exact SI-2019 defining constants.
template <std::floating_point Scalar>
struct PhysicalConstants {
  static constexpr Scalar planck = Scalar(6.62607015e-34L);     // J s
  static constexpr Scalar boltzmann = Scalar(1.380649e-23L);    // J / K
  static constexpr Scalar speed_of_light = Scalar(299792458.0L);  // m / s
};

/// Offset between the Celsius and Kelvin scales.
inline constexpr double kCelsiusOffset = 273.15;

/// Upper temperature at which the red channel is considered a usable
/// thermal proxy. Documented only; nothing gates on it.
inline constexpr double kRedChannelLimitKelvin = 800.0;

/// Beyond this exponent hv/kT, exp(hv/kT) is evaluated in log space.
inline constexpr double kDirectExponentLimit = 700.0;

/// Temperature on the absolute scale.
///
/// Keeps the Celsius value it was built from so that converting back is
/// bit-exact; (c + 273.15) - 273.15 does not round-trip for every double.
class AbsoluteTemperature {
 public:
  explicit AbsoluteTemperature(double kelvin);

  static AbsoluteTemperature from_celsius(double celsius);

  double kelvin() const noexcept { return kelvin_; }
  double celsius() const noexcept { return celsius_; }

  friend bool operator==(const AbsoluteTemperature& a, const AbsoluteTemperature& b) noexcept {
    return a.kelvin_ == b.kelvin_;
  }
  friend auto operator<=>(const AbsoluteTemperature& a, const AbsoluteTemperature& b) noexcept {
    return a.kelvin_ <=> b.kelvin_;
  }

 private:
  AbsoluteTemperature(double kelvin, double celsius) : kelvin_(kelvin), celsius_(celsius) {}

  double kelvin_;
  double celsius_;
};

AbsoluteTemperature celsius_to_kelvin(double celsius);
double kelvin_to_celsius(const AbsoluteTemperature& t) noexcept;

/// A narrow spectral band identified by its wavelength; frequency = c / wavelength.
class SpectralBand {
 public:
  SpectralBand(std::string name, double wavelength_m);

  /// 700 nm.
  static SpectralBand red();
  /// 490 nm.
  static SpectralBand blue();

  const std::string& name() const noexcept { return name_; }
  double wavelength() const noexcept { return wavelength_; }
  double frequency() const noexcept { return frequency_; }

 private:
  std::string name_;
  double wavelength_;
  double frequency_;
};

namespace detail {

template <std::floating_point Scalar>
void check_planck_inputs(Scalar frequency_hz, Scalar kelvin) {
  if (!std::isfinite(frequency_hz) || !(frequency_hz > 0)) {
    throw DomainError("spectral radiance: frequency must be finite and positive");
  }
  if (!std::isfinite(kelvin) || !(kelvin > 0)) {
    throw DomainError("spectral radiance: temperature must be finite and positive");
  }
}

template <std::floating_point Scalar>
Scalar planck_exponent(Scalar frequency_hz, Scalar kelvin) {
  using C = PhysicalConstants<Scalar>;
  return (C::planck * frequency_hz) / (C::boltzmann * kelvin);
}

// 2 h v^3 / c^2
template <std::floating_point Scalar>
Scalar planck_prefactor(Scalar frequency_hz) {
  using C = PhysicalConstants<Scalar>;
  return Scalar(2) * C::planck * frequency_hz * frequency_hz * frequency_hz /
         (C::speed_of_light * C::speed_of_light);
}

}  // namespace detail

/// Natural log of the spectral radiance, finite wherever the inputs are
/// valid, including the deep Wien tail where the radiance itself underflows.
template <std::floating_point Scalar>
Scalar log_spectral_radiance(Scalar frequency_hz, Scalar kelvin) {
  detail::check_planck_inputs(frequency_hz, kelvin);
  const Scalar x = detail::planck_exponent(frequency_hz, kelvin);
  // ln B = ln(2hv^3/c^2) - x - ln(1 - e^-x)
  return std::log(detail::planck_prefactor(frequency_hz)) - x - std::log(-std::expm1(-x));
}

/// Spectral radiance B_v(T) in W sr^-1 m^-2 Hz^-1.
///
/// Uses 2hv^3/c^2 / expm1(hv/kT), which stays accurate for tiny exponents;
/// past kDirectExponentLimit the value is assembled from its logarithm and
/// eventually underflows to zero.
template <std::floating_point Scalar>
Scalar spectral_radiance(Scalar frequency_hz, Scalar kelvin) {
  detail::check_planck_inputs(frequency_hz, kelvin);
  const Scalar x = detail::planck_exponent(frequency_hz, kelvin);
  if (x <= Scalar(kDirectExponentLimit)) {
    return detail::planck_prefactor(frequency_hz) / std::expm1(x);
  }
  return std::exp(log_spectral_radiance(frequency_hz, kelvin));
}

/// Coefficient-wise radiance over an array of frequencies at one temperature.
template <typename Derived>
typename Derived::PlainObject spectral_radiance(const Eigen::ArrayBase<Derived>& frequency_hz,
                                                typename Derived::Scalar kelvin) {
  using Scalar = typename Derived::Scalar;
  return frequency_hz.unaryExpr([kelvin](Scalar v) { return spectral_radiance(v, kelvin); });
}

double spectral_radiance(const SpectralBand& band, const AbsoluteTemperature& t);
double log_spectral_radiance(const SpectralBand& band, const AbsoluteTemperature& t);

/// B(blue, T) / B(red, T). Grows with T as the emission peak moves blueward.
/// Below roughly 12 K the ratio itself is smaller than the least double and
/// comes back as 0.
double band_dominance_ratio(const AbsoluteTemperature& t);

}  // namespace thermoscope

#endif  // THERMOSCOPE_RADIOMETRY_HPP
