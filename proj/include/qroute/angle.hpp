// Copyright 2026 The qroute Authors
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

#include <cmath>
#include <numbers>

namespace qroute {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance for comparing angles, in radians.
inline constexpr double kAngleTolerance = 1e-12;

/**
 * A rotation angle in radians, kept canonical in [0, 2*pi).
 *
 * Composition (operator+) re-canonicalizes, so merged rotations never drift
 * outside the interval. Equality is circular: 2*pi - 1e-13 equals 0.
 */
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(canonicalize(radians)) {}

  static double canonicalize(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

  [[nodiscard]] double radians() const { return value_; }

  /// Value mapped to (-pi, pi]; handy for printing and for Rz halves.
  [[nodiscard]] double signed_radians() const {
    return value_ > kPi ? value_ - kTwoPi : value_;
  }

  [[nodiscard]] bool approx_equal(Angle other,
                                  double tol = kAngleTolerance) const {
    const double d = std::fabs(value_ - other.value_);
    return std::fmin(d, kTwoPi - d) <= tol;
  }

  [[nodiscard]] bool is_zero(double tol = kAngleTolerance) const {
    return approx_equal(Angle{}, tol);
  }

  Angle operator+(Angle other) const { return Angle(value_ + other.value_); }
  Angle operator-(Angle other) const { return Angle(value_ - other.value_); }
  Angle operator-() const { return Angle(-value_); }

 private:
  double value_ = 0.0;
};

}  // namespace qroute
