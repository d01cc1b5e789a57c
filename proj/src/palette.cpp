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

#include "plutchik/palette.hpp"

#include <array>
#include <cstdio>

namespace plutchik {
namespace {

// Rows follow wheel order; columns are intense, medium, mild.
constexpr std::array<std::array<Rgb, 3>, 8> kPalette = {{
    {Rgb::from_hex(0xffd70d), Rgb::from_hex(0xffe666), Rgb::from_hex(0xfff2b2)},  // joy
    {Rgb::from_hex(0x61d90b), Rgb::from_hex(0x9df261), Rgb::from_hex(0xd2ffb2)},  // trust
    {Rgb::from_hex(0x078c60), Rgb::from_hex(0x42a685), Rgb::from_hex(0x8fccb8)},  // fear
    {Rgb::from_hex(0x0cb9f2), Rgb::from_hex(0x66d9ff), Rgb::from_hex(0xb2ecff)},  // surprise
    {Rgb::from_hex(0x0b4fd9), Rgb::from_hex(0x6191f2), Rgb::from_hex(0xb2ccff)},  // sadness
    {Rgb::from_hex(0x920abf), Rgb::from_hex(0xb857d9), Rgb::from_hex(0xecb2ff)},  // disgust
    {Rgb::from_hex(0xe60b0b), Rgb::from_hex(0xff6666), Rgb::from_hex(0xffb2b2)},  // anger
    {Rgb::from_hex(0xff860d), Rgb::from_hex(0xffb266), Rgb::from_hex(0xffd9b2)},  // anticipation
}};

}  // namespace

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

Rgb color_for(Emotion e, Degree degree) {
  return kPalette[static_cast<std::size_t>(wheel_index(e))][static_cast<std::size_t>(degree)];
}

}  // namespace plutchik
