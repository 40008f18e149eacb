// Copyright 2026 The coupled-wells Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <numbers>

namespace cw {

/// A double tagged with its physical unit. Only same-unit arithmetic is
/// allowed; crossing units goes through an explicit `.value()`.
template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double value) : value_(value) {}

  [[nodiscard]] constexpr double value() const { return value_; }

  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity& operator+=(Quantity other) {
    value_ += other.value_;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity other) {
    value_ -= other.value_;
    return *this;
  }

  friend constexpr Quantity operator+(Quantity lhs, Quantity rhs) { return Quantity(lhs.value_ + rhs.value_); }
  friend constexpr Quantity operator-(Quantity lhs, Quantity rhs) { return Quantity(lhs.value_ - rhs.value_); }
  friend constexpr Quantity operator*(Quantity q, double s) { return Quantity(q.value_ * s); }
  friend constexpr Quantity operator*(double s, Quantity q) { return Quantity(q.value_ * s); }
  friend constexpr Quantity operator/(Quantity q, double s) { return Quantity(q.value_ / s); }
  friend constexpr double operator/(Quantity lhs, Quantity rhs) { return lhs.value_ / rhs.value_; }
  friend constexpr auto operator<=>(Quantity, Quantity) = default;

 private:
  double value_ = 0.0;
};

namespace unit_tags {
struct Meters;
struct Kilograms;
struct Coulombs;
struct Seconds;
struct Hertz;
struct RadiansPerSecond;
struct NewtonsPerMeter;
struct QuantaPerSecond;
}  // namespace unit_tags

using Meters = Quantity<unit_tags::Meters>;
using Kilograms = Quantity<unit_tags::Kilograms>;
using Coulombs = Quantity<unit_tags::Coulombs>;
using Seconds = Quantity<unit_tags::Seconds>;
using Hertz = Quantity<unit_tags::Hertz>;
using RadiansPerSecond = Quantity<unit_tags::RadiansPerSecond>;
using NewtonsPerMeter = Quantity<unit_tags::NewtonsPerMeter>;
using QuantaPerSecond = Quantity<unit_tags::QuantaPerSecond>;

constexpr Meters micrometers(double v) { return Meters(v * 1e-6); }
constexpr Seconds microseconds(double v) { return Seconds(v * 1e-6); }
constexpr Hertz kilohertz(double v) { return Hertz(v * 1e3); }
constexpr Hertz megahertz(double v) { return Hertz(v * 1e6); }

// The only place a factor of 2π crosses between cyclic and angular frequency.
constexpr RadiansPerSecond to_angular(Hertz f) { return RadiansPerSecond(2.0 * std::numbers::pi * f.value()); }
constexpr Hertz to_cyclic(RadiansPerSecond w) { return Hertz(w.value() / (2.0 * std::numbers::pi)); }

}  // namespace cw
