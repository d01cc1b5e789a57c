// Copyright 2026 The Plutchik Wheel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLUTCHIK_PALETTE_HPP_
#define PLUTCHIK_PALETTE_HPP_

#include <cstdint>
#include <string>

#include "plutchik/emotion_model.hpp"

namespace plutchik {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  static constexpr Rgb from_hex(std::uint32_t v) {
    return {static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 8),
            static_cast<std::uint8_t>(v)};
  }
  std::string hex() const;  // "#rrggbb"
  friend bool operator==(Rgb, Rgb) = default;
};

enum class Degree : std::uint8_t { kIntense, kMedium, kMild };

// Fixed wheel palette; one hue family per emotion, saturation decreasing from
// intense to mild.
Rgb color_for(Emotion e, Degree degree);

// Fill for petals outside the highlight set.
inline constexpr Rgb kGhostFill = Rgb::from_hex(0xd9d9d9);

}  // namespace plutchik

#endif  // PLUTCHIK_PALETTE_HPP_
