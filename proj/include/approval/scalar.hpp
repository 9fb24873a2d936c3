// Copyright 2026 The Approval Heuristics Authors.
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

// Fixed-point utilities and the small amount of arithmetic glue that lets the
// expectation code run over either `double` or an exact rational type.

#ifndef APPROVAL_SCALAR_HPP
#define APPROVAL_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "approval/error.hpp"

namespace approval {

/// Utilities are stored as integer millionths.
using Micros = std::int64_t;

inline constexpr Micros kMicrosPerUnit = 1'000'000;

/// Largest magnitude accepted for a single utility, in units.
inline constexpr double kMaxUtilityMagnitude = 1e9;

/// Converts a real utility to micro-units. Values must be finite and carry at
/// most six decimal places (within rounding noise of the binary encoding).
inline Micros to_micros(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "utility must be finite");
  }
  if (std::fabs(value) > kMaxUtilityMagnitude) {
    throw Error(ErrorCode::kInvalidArgument,
                "utility magnitude exceeds " + std::to_string(kMaxUtilityMagnitude));
  }
  const double scaled = value * static_cast<double>(kMicrosPerUnit);
  const double rounded = std::nearbyint(scaled);
  if (std::fabs(scaled - rounded) > 1e-6 * std::max(1.0, std::fabs(scaled))) {
    throw Error(ErrorCode::kInvalidArgument,
                "utility " + std::to_string(value) +
                    " has more than six decimal places");
  }
  return static_cast<Micros>(rounded);
}

inline double from_micros(Micros value) {
  return static_cast<double>(value) / static_cast<double>(kMicrosPerUnit);
}

template <typename Scalar>
inline constexpr bool is_floating_scalar_v = std::is_floating_point_v<Scalar>;

/// num / den in the requested scalar type. For `double` this is a single
/// correctly rounded division, so equal ratios map to bit-identical values.
template <typename Scalar>
Scalar ratio(std::int64_t num, std::int64_t den) {
  if constexpr (is_floating_scalar_v<Scalar>) {
    return static_cast<Scalar>(num) / static_cast<Scalar>(den);
  } else {
    return Scalar(num) / Scalar(den);
  }
}

/// Absolute tolerance under which two floating expected utilities are treated
/// as tied when building argmax sets. Exact scalars compare with ==.
inline constexpr double kFloatingTieTolerance = 1e-12;

template <typename Scalar>
bool tied(const Scalar& a, const Scalar& b) {
  if constexpr (is_floating_scalar_v<Scalar>) {
    return std::fabs(a - b) <= kFloatingTieTolerance;
  } else {
    return a == b;
  }
}

/// a is strictly better than b beyond the tie tolerance.
template <typename Scalar>
bool strictly_greater(const Scalar& a, const Scalar& b) {
  return a > b && !tied(a, b);
}

}  // namespace approval

#endif  // APPROVAL_SCALAR_HPP
