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

#ifndef PLUTCHIK_RENDER_HPP_
#define PLUTCHIK_RENDER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plutchik/emotion_model.hpp"
#include "plutchik/geometry.hpp"
#include "plutchik/vector_doc.hpp"

namespace plutchik {

enum class FontWeight { kLight, kNormal, kBold };

std::string_view to_string(FontWeight w);
std::optional<FontWeight> font_weight_from_name(std::string_view name);

struct RenderOptions {
  bool show_coordinates = true;
  double height_width_ratio = kDefaultAspectRatio;
  EmotionSet highlight_emotions = EmotionSet::all();
  EmotionSet show_intensity_labels = EmotionSet::none();
  double font_size = 15.0;  // points
  std::string font_family = "sans-serif";
  FontWeight font_weight = FontWeight::kLight;
  std::string title;  // empty for none
};

// Throws NonPositiveRatio, InvalidOptions, or InvalidOptionCombination when
// intensity labels are requested for a wheel without intensity triples.
void validate(const RenderOptions& options, ScoreKind kind);

// A wheel document is this many output units wide; the canvas spans
// [-1.6, 1.6] on both axes, so one canvas unit is 180 output units.
inline constexpr double kWheelSize = 576.0;
inline constexpr double kUnitsPerCanvas = kWheelSize / (2 * kCanvasHalfExtent);

// Full wheel: grid, petals, center circle, labels, and for dyad wheels the
// constituent-emotion ring and center annotation.
VectorDoc render_wheel(const ScoreSet& scores, const RenderOptions& options = {});

// One colored arc of the dyad ring.
struct RingArc {
  Emotion emotion;
  double start_angle;
  double end_angle;  // > start_angle
};

// Each dyad petal owns an equal angular sector; the half nearer a component's
// axis is colored with that component. Neighbouring arcs of the same emotion
// are merged.
std::vector<RingArc> ring_arcs(DyadKind kind);

// Ring arcs (always) and constituent labels (when show_coordinates).
std::vector<Element> render_dyad_ring(ScoreKind kind, const RenderOptions& options);

// "1", "2", "3" or "opp."; nullopt for basic wheels.
std::optional<std::string> center_label(ScoreKind kind);
std::optional<TextItem> center_annotation(ScoreKind kind, const RenderOptions& options);

}  // namespace plutchik

#endif  // PLUTCHIK_RENDER_HPP_
