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

#include "plutchik/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plutchik/error.hpp"
#include "plutchik/palette.hpp"

namespace plutchik {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPetalStroke = 0.008;
constexpr double kGridStroke = 0.004;
const std::string kGridColor = "#b3b3b3";
const std::string kDyadOutline = "#595959";
const std::string kScoreColor = "#333333";
const std::string kDyadLabelColor = "#000000";
const std::string kRingLabelColor = "#1a1a1a";

// |cos| of the axis angle above which labels sit beside the wheel.
constexpr double kSideAxis = 0.3;
// Rough advance width of one glyph, in font sizes.
constexpr double kGlyphWidth = 0.55;
constexpr double kEdgeMargin = 0.02;

// Moves a centered label horizontally so its estimated extent stays on the canvas.
Point keep_on_canvas(Point at, const std::string& text, double font_size) {
  const double half = 0.5 * kGlyphWidth * font_size * static_cast<double>(text.size());
  const double limit = kCanvasHalfExtent - kEdgeMargin - half;
  if (std::fabs(at.x) > limit) at.x = std::copysign(std::max(limit, 0.0), at.x);
  return at;
}

struct Fonts {
  double size;  // canvas units
  std::string family;
  std::string weight;

  TextItem text(std::string id, Point at, std::string s, std::string fill,
                double scale = 1.0) const {
    return {std::move(id), at, std::move(s), size * scale, family, weight, std::move(fill)};
  }
};

Fonts fonts_for(const RenderOptions& o) {
  std::string weight = o.font_weight == FontWeight::kLight ? "300" : std::string(to_string(o.font_weight));
  return {o.font_size / kUnitsPerCanvas, o.font_family, std::move(weight)};
}

std::string grid_id(double radius) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "grid-%.1f", radius);
  return buf;
}

std::string score_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fill_for(Emotion e, Degree degree, const RenderOptions& o) {
  return o.highlight_emotions.contains(e) ? color_for(e, degree).hex() : kGhostFill.hex();
}

Element petal_element(const ScoreSet& scores, std::size_t i, const RenderOptions& o) {
  const Slot slot = scores.slot(i);
  const std::string id = "petal-" + std::string(slot_name(slot));
  const double angle = angular_position(slot);
  const double ratio = o.height_width_ratio;

  if (const auto* d = std::get_if<Dyad>(&slot)) {
    const PetalHalves halves = two_tone_halves(angle, scores.score(i), ratio);
    Group g{id, {}};
    g.children.push_back({PathItem{id + "-" + std::string(name(d->first)), halves.ccw,
                                   fill_for(d->first, Degree::kMedium, o)}});
    g.children.push_back({PathItem{id + "-" + std::string(name(d->second)), halves.cw,
                                   fill_for(d->second, Degree::kMedium, o)}});
    g.children.push_back({PathItem{id + "-outline",
                                   petal_outline(angle, scores.score(i), ratio).outline, "none",
                                   kDyadOutline, kPetalStroke}});
    return {std::move(g)};
  }

  const Emotion e = std::get<Emotion>(slot);
  const std::string outline_color = color_for(e, Degree::kIntense).hex();
  if (!scores.has_triples()) {
    return {PathItem{id, petal_outline(angle, scores.score(i), ratio).outline,
                     fill_for(e, Degree::kMedium, o), outline_color, kPetalStroke}};
  }

  const IntensitySections sections = intensity_sections(angle, scores.triple(i), ratio);
  Group g{id, {}};
  const std::pair<const Path*, Degree> parts[] = {
      {&sections.intense, Degree::kIntense},
      {&sections.medium, Degree::kMedium},
      {&sections.mild, Degree::kMild},
  };
  constexpr std::string_view kSuffix[] = {"-intense", "-medium", "-mild"};
  for (const auto& [path, degree] : parts) {
    if (path->empty()) continue;
    g.children.push_back({PathItem{id + std::string(kSuffix[static_cast<int>(degree)]), *path,
                                   fill_for(e, degree, o)}});
  }
  g.children.push_back({PathItem{id + "-outline",
                                 petal_outline(angle, scores.score(i), ratio).outline, "none",
                                 outline_color, kPetalStroke}});
  return {std::move(g)};
}

Group grid_group(const ScoreSet& scores) {
  Group g{"grid", {}};
  for (const Circle& c : grid_arcs()) {
    g.children.push_back(
        {CircleItem{grid_id(c.radius), c, "none", kGridColor, kGridStroke}});
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const Slot slot = scores.slot(i);
    g.children.push_back({LineItem{"axis-" + std::string(slot_name(slot)), Point{},
                                   polar(1.0, angular_position(slot)), kGridColor,
                                   kGridStroke}});
  }
  return g;
}

Group label_group(const ScoreSet& scores, const RenderOptions& o, const Fonts& fonts) {
  Group g{"labels", {}};
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const Slot slot = scores.slot(i);
    const std::string key(slot_name(slot));
    const LabelAnchors anchors = label_anchor(angular_position(slot));
    const auto* e = std::get_if<Emotion>(&slot);
    const std::string name_color =
        e != nullptr ? color_for(*e, Degree::kIntense).hex() : kDyadLabelColor;
    const std::string display = slot_display_name(slot);
    g.children.push_back({fonts.text("label-" + key, keep_on_canvas(anchors.name, display, fonts.size),
                                     display, name_color)});

    // On side axes the score grows toward the center, clear of the name.
    const double c = std::cos(angular_position(slot));
    const std::string anchor = c > kSideAxis ? "end" : c < -kSideAxis ? "start" : "middle";
    auto score_label = [&](std::string id, Point at, double v) {
      TextItem t = fonts.text(std::move(id), at, score_text(v), kScoreColor);
      t.anchor = anchor;
      g.children.push_back({std::move(t)});
    };

    if (e != nullptr && scores.has_triples() && o.show_intensity_labels.contains(*e)) {
      // Three lines, mild on top. Unless the axis is horizontal the stack
      // grows away from the name.
      const IntensityTriple& t = scores.triple(i);
      const double line = 1.05 * fonts.size;
      const double s = std::sin(angular_position(slot));
      const double top = std::fabs(s) <= kSideAxis ? anchors.score.y + line
                         : s > 0                   ? anchors.score.y
                                                   : anchors.score.y + 2 * line;
      const double x = anchors.score.x;
      score_label("score-" + key + "-mild", {x, top}, t.mild);
      score_label("score-" + key + "-medium", {x, top - line}, t.medium);
      score_label("score-" + key + "-intense", {x, top - 2 * line}, t.intense);
    } else {
      score_label("score-" + key, anchors.score, scores.score(i));
    }
  }
  return g;
}

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

}  // namespace

std::string_view to_string(FontWeight w) {
  switch (w) {
    case FontWeight::kLight: return "light";
    case FontWeight::kNormal: return "normal";
    case FontWeight::kBold: return "bold";
  }
  return "normal";
}

std::optional<FontWeight> font_weight_from_name(std::string_view name) {
  if (name == "light") return FontWeight::kLight;
  if (name == "normal") return FontWeight::kNormal;
  if (name == "bold") return FontWeight::kBold;
  return std::nullopt;
}

void validate(const RenderOptions& options, ScoreKind kind) {
  if (!(options.height_width_ratio > 0.0) || !std::isfinite(options.height_width_ratio)) {
    throw Error(ErrorCode::kNonPositiveRatio, "height_width_ratio must be positive, got " +
                                                  format_number(options.height_width_ratio));
  }
  if (!(options.font_size > 0.0) || !std::isfinite(options.font_size)) {
    throw Error(ErrorCode::kInvalidOptions,
                "font size must be positive, got " + format_number(options.font_size));
  }
  if (options.font_family.empty()) {
    throw Error(ErrorCode::kInvalidOptions, "font family must not be empty");
  }
  if (!options.show_intensity_labels.empty() && kind != ScoreKind::kBasicIntensity) {
    throw Error(ErrorCode::kInvalidOptionCombination,
                "intensity labels need intensity triples, but the scores are " +
                    std::string(to_string(kind)));
  }
}

std::vector<RingArc> ring_arcs(DyadKind kind) {
  const auto dyads = dyads_of(kind);
  const double half = std::numbers::pi / static_cast<double>(dyads.size());

  std::vector<RingArc> arcs;
  for (const Dyad& d : dyads) {
    const double axis = wrap_positive(angular_position(d));
    arcs.push_back({d.first, axis, axis + half});
    arcs.push_back({d.second, axis - half, axis});
  }
  for (RingArc& a : arcs) {
    const double start = wrap_positive(a.start_angle);
    a.end_angle += start - a.start_angle;
    a.start_angle = start;
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const RingArc& a, const RingArc& b) { return a.start_angle < b.start_angle; });

  constexpr double kTouch = 1e-9;
  std::vector<RingArc> merged;
  for (const RingArc& a : arcs) {
    if (!merged.empty() && merged.back().emotion == a.emotion &&
        std::abs(merged.back().end_angle - a.start_angle) < kTouch) {
      merged.back().end_angle = a.end_angle;
    } else {
      merged.push_back(a);
    }
  }
  if (merged.size() > 1 && merged.front().emotion == merged.back().emotion &&
      std::abs(merged.back().end_angle - (merged.front().start_angle + kTwoPi)) < kTouch) {
    merged.back().end_angle = merged.front().end_angle + kTwoPi;
    merged.erase(merged.begin());
  }
  return merged;
}

std::vector<Element> render_dyad_ring(ScoreKind kind, const RenderOptions& options) {
  const Fonts fonts = fonts_for(options);
  const auto arcs = ring_arcs(dyad_kind(kind));
  Group ring{"ring", {}};
  Group labels{"ring-labels", {}};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const RingArc& a = arcs[i];
    const std::string suffix = std::to_string(i) + "-" + std::string(name(a.emotion));
    ring.children.push_back({PathItem{
        "ring-arc-" + suffix,
        annular_sector(kRingInnerRadius, kRingOuterRadius, a.start_angle, a.end_angle),
        color_for(a.emotion, Degree::kMedium).hex()}});
    const double mid = 0.5 * (a.start_angle + a.end_angle);
    labels.children.push_back({fonts.text("ring-label-" + suffix, polar(kRingLabelRadius, mid),
                                          std::string(display_name(a.emotion)),
                                          kRingLabelColor, 0.6)});
  }
  std::vector<Element> out;
  out.push_back({std::move(ring)});
  if (options.show_coordinates) out.push_back({std::move(labels)});
  return out;
}

std::optional<std::string> center_label(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kDyadPrimary: return "1";
    case ScoreKind::kDyadSecondary: return "2";
    case ScoreKind::kDyadTertiary: return "3";
    case ScoreKind::kDyadOpposite: return "opp.";
    default: return std::nullopt;
  }
}

std::optional<TextItem> center_annotation(ScoreKind kind, const RenderOptions& options) {
  auto label = center_label(kind);
  if (!label) return std::nullopt;
  return fonts_for(options).text("center-label", Point{}, *label, kDyadLabelColor);
}

VectorDoc render_wheel(const ScoreSet& scores, const RenderOptions& options) {
  validate(options, scores.kind());
  const Fonts fonts = fonts_for(options);

  VectorDoc doc;
  doc.width = kWheelSize;
  doc.height = kWheelSize;
  doc.view_box = {-kCanvasHalfExtent, -kCanvasHalfExtent, 2 * kCanvasHalfExtent,
                  2 * kCanvasHalfExtent};
  doc.y_up = true;
  doc.title = options.title;

  if (options.show_coordinates) doc.elements.push_back({grid_group(scores)});

  Group petals{"petals", {}};
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores.score(i) == 0.0) continue;
    petals.children.push_back(petal_element(scores, i, options));
  }
  doc.elements.push_back({std::move(petals)});

  doc.elements.push_back(
      {CircleItem{"center", {Point{}, kCenterCircleRadius}, "#ffffff", "none", 0.0}});

  if (is_dyad(scores.kind())) {
    doc.elements.push_back({*center_annotation(scores.kind(), options)});
    for (Element& e : render_dyad_ring(scores.kind(), options)) {
      doc.elements.push_back(std::move(e));
    }
  }

  if (options.show_coordinates) doc.elements.push_back({label_group(scores, options, fonts)});

  if (!options.title.empty()) {
    doc.elements.push_back(
        {fonts.text("title", Point{0, 1.5}, options.title, "#000000", 1.2)});
  }
  return doc;
}

}  // namespace plutchik
