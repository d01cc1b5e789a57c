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

#ifndef PLUTCHIK_GEOMETRY_HPP_
#define PLUTCHIK_GEOMETRY_HPP_

#include <array>
#include <variant>
#include <vector>

#include "plutchik/emotion_model.hpp"

namespace plutchik {

// Canvas coordinates are y-up, in the same unit as scores: a petal of score 1
// reaches radius 1.
inline constexpr double kCanvasHalfExtent = 1.6;
inline constexpr double kCenterCircleRadius = 0.2;
inline constexpr double kScoreLabelRadius = 1.2;
inline constexpr double kNameLabelRadius = 1.4;
inline constexpr double kRingInnerRadius = 1.03;
inline constexpr double kRingOuterRadius = 1.13;
inline constexpr double kRingLabelRadius = 1.08;
inline constexpr double kDefaultAspectRatio = 1.0;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

Point rotate(Point p, double angle);
Point polar(double radius, double angle);

struct LineTo {
  Point to;
  friend bool operator==(const LineTo&, const LineTo&) = default;
};

struct CubicTo {
  Point c1;
  Point c2;
  Point to;
  friend bool operator==(const CubicTo&, const CubicTo&) = default;
};

// Circular arc from the current point, which must lie on the circle at
// start_angle, sweeping counterclockwise when end_angle > start_angle.
struct ArcTo {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  friend bool operator==(const ArcTo&, const ArcTo&) = default;
};

using Segment = std::variant<LineTo, CubicTo, ArcTo>;

Point end_point(const Segment& s);

// A single subpath starting at `start`. An empty path has no segments.
struct Path {
  Point start;
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  Point end() const { return segments.empty() ? start : end_point(segments.back()); }
  bool closed() const { return !empty() && end() == start; }

  friend bool operator==(const Path&, const Path&) = default;
};

Path rotated(const Path& path, double angle);

// Exact signed area enclosed by a closed path (Green's theorem, evaluated in
// closed form per segment). Positive for counterclockwise outlines.
double signed_area(const Path& path);

struct PetalPath {
  Path outline;
  double axis_angle = 0.0;
  double length = 0.0;
};

// Leaf from the origin to polar (length, axis_angle): two mirrored cubics
// whose greatest half-width is length / (2 * aspect_ratio). Counterclockwise.
// Empty when length is 0. Stays inside the canvas for aspect_ratio >= 1/3.
// Throws NonPositiveRatio, OutOfRange.
PetalPath petal_outline(double axis_angle, double length,
                        double aspect_ratio = kDefaultAspectRatio);

// Sections of a petal of length triple.sum(), cut perpendicular to the axis at
// the cumulative sums. Ordered from the center outward: intense, medium, mild.
// A section with zero score is an empty path.
struct IntensitySections {
  Path intense;
  Path medium;
  Path mild;
};
IntensitySections intensity_sections(double axis_angle, const IntensityTriple& triple,
                                     double aspect_ratio = kDefaultAspectRatio);

// The petal split along its axis. `ccw` is the half on the counterclockwise
// side of the axis, `cw` the other. Both are counterclockwise outlines.
struct PetalHalves {
  Path ccw;
  Path cw;
};
PetalHalves two_tone_halves(double axis_angle, double length,
                            double aspect_ratio = kDefaultAspectRatio);

struct Circle {
  Point center;
  double radius = 0.0;
};

// Minor grid circles at 0.2 steps plus the unit circle bounding the petals.
std::vector<Circle> grid_arcs();

struct LabelAnchors {
  Point name;
  Point score;
};
LabelAnchors label_anchor(double axis_angle);

// Annular sector between two radii over [start_angle, end_angle], ccw.
Path annular_sector(double inner_radius, double outer_radius, double start_angle,
                    double end_angle);

}  // namespace plutchik

#endif  // PLUTCHIK_GEOMETRY_HPP_
