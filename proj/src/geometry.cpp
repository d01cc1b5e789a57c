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

#include "plutchik/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plutchik/error.hpp"

namespace plutchik {
namespace {

using Cubic = std::array<Point, 4>;

Point lerp(Point a, Point b, double t) { return (1.0 - t) * a + t * b; }

double cross(Point a, Point b) { return a.x * b.y - b.x * a.y; }

Point mirror(Point p) { return {p.x, -p.y}; }

// Left part [0, t] of a cubic by de Casteljau.
Cubic split_left(const Cubic& c, double t) {
  const Point ab = lerp(c[0], c[1], t);
  const Point bc = lerp(c[1], c[2], t);
  const Point cd = lerp(c[2], c[3], t);
  const Point abc = lerp(ab, bc, t);
  const Point bcd = lerp(bc, cd, t);
  return {c[0], ab, abc, lerp(abc, bcd, t)};
}

Cubic split_right(const Cubic& c, double t) {
  const Point ab = lerp(c[0], c[1], t);
  const Point bc = lerp(c[1], c[2], t);
  const Point cd = lerp(c[2], c[3], t);
  const Point abc = lerp(ab, bc, t);
  const Point bcd = lerp(bc, cd, t);
  return {lerp(abc, bcd, t), bcd, cd, c[3]};
}

Cubic sub_cubic(const Cubic& c, double t0, double t1) {
  const Cubic left = split_left(c, t1);
  if (t0 <= 0.0) return left;
  return split_right(left, t0 / t1);
}

void check_ratio(double aspect_ratio) {
  if (!(aspect_ratio > 0.0) || !std::isfinite(aspect_ratio)) {
    throw Error(ErrorCode::kNonPositiveRatio,
                "petal height/width ratio must be positive, got " + std::to_string(aspect_ratio));
  }
}

double check_length(double length) {
  if (!std::isfinite(length) || length < -kScoreEpsilon || length > 1.0 + kScoreEpsilon) {
    throw Error(ErrorCode::kOutOfRange,
                "petal length must lie in [0, 1], got " + std::to_string(length));
  }
  return std::clamp(length, 0.0, 1.0);
}

// Lower (clockwise side) boundary of a petal lying on +x in local coordinates.
Cubic lower_curve(double length, double aspect_ratio) {
  // A cubic with both control points at height c peaks at 0.75 * c.
  const double control = (4.0 / 3.0) * length / (2.0 * aspect_ratio);
  const Point mid{length / 2.0, -control};
  return {Point{0.0, 0.0}, mid, mid, Point{length, 0.0}};
}

// x(t) of the lower curve is strictly increasing, so bisection finds the
// unique parameter reaching a given axial distance.
double parameter_at(const Cubic& c, double x) {
  if (x <= c[0].x) return 0.0;
  if (x >= c[3].x) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double u = 1.0 - mid;
    const double xm = u * u * u * c[0].x + 3 * u * u * mid * c[1].x +
                      3 * u * mid * mid * c[2].x + mid * mid * mid * c[3].x;
    (xm < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Part of the local petal between axial distances x0 < x1.
Path local_section(const Cubic& lower, double x0, double x1) {
  if (!(x1 > x0)) return {};
  const double total = lower[3].x;
  const double t0 = x0 <= 0.0 ? 0.0 : parameter_at(lower, x0);
  const double t1 = x1 >= total ? 1.0 : parameter_at(lower, x1);
  const Cubic seg = sub_cubic(lower, t0, t1);

  Path p;
  p.start = seg[0];
  p.segments.emplace_back(CubicTo{seg[1], seg[2], seg[3]});
  if (x1 < total) p.segments.emplace_back(LineTo{mirror(seg[3])});
  p.segments.emplace_back(CubicTo{mirror(seg[2]), mirror(seg[1]), mirror(seg[0])});
  if (x0 > 0.0) p.segments.emplace_back(LineTo{seg[0]});
  return p;
}

}  // namespace

Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}

Point polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

Point end_point(const Segment& s) {
  if (const auto* l = std::get_if<LineTo>(&s)) return l->to;
  if (const auto* c = std::get_if<CubicTo>(&s)) return c->to;
  const auto& a = std::get<ArcTo>(s);
  return a.center + polar(a.radius, a.end_angle);
}

Path rotated(const Path& path, double angle) {
  Path out;
  out.start = rotate(path.start, angle);
  out.segments.reserve(path.segments.size());
  for (const Segment& s : path.segments) {
    if (const auto* l = std::get_if<LineTo>(&s)) {
      out.segments.emplace_back(LineTo{rotate(l->to, angle)});
    } else if (const auto* c = std::get_if<CubicTo>(&s)) {
      out.segments.emplace_back(
          CubicTo{rotate(c->c1, angle), rotate(c->c2, angle), rotate(c->to, angle)});
    } else {
      const auto& a = std::get<ArcTo>(s);
      out.segments.emplace_back(ArcTo{rotate(a.center, angle), a.radius,
                                      a.start_angle + angle, a.end_angle + angle});
    }
  }
  return out;
}

double signed_area(const Path& path) {
  double twice = 0.0;
  Point cur = path.start;
  for (const Segment& s : path.segments) {
    if (const auto* l = std::get_if<LineTo>(&s)) {
      twice += cross(cur, l->to);
    } else if (const auto* c = std::get_if<CubicTo>(&s)) {
      const Point p0 = cur, p1 = c->c1, p2 = c->c2, p3 = c->to;
      twice += (6 * cross(p0, p1) + 3 * cross(p0, p2) + cross(p0, p3) + 3 * cross(p1, p2) +
                3 * cross(p1, p3) + 6 * cross(p2, p3)) /
               10.0;
    } else {
      const auto& a = std::get<ArcTo>(s);
      const double r = a.radius;
      twice += r * r * (a.end_angle - a.start_angle) +
               r * a.center.x * (std::sin(a.end_angle) - std::sin(a.start_angle)) -
               r * a.center.y * (std::cos(a.end_angle) - std::cos(a.start_angle));
    }
    cur = end_point(s);
  }
  return 0.5 * twice;
}

PetalPath petal_outline(double axis_angle, double length, double aspect_ratio) {
  check_ratio(aspect_ratio);
  length = check_length(length);
  PetalPath petal{{}, axis_angle, length};
  if (length == 0.0) return petal;

  const Cubic lower = lower_curve(length, aspect_ratio);
  Path local;
  local.start = lower[0];
  local.segments.emplace_back(CubicTo{lower[1], lower[2], lower[3]});
  local.segments.emplace_back(CubicTo{mirror(lower[2]), mirror(lower[1]), lower[0]});
  petal.outline = rotated(local, axis_angle);
  return petal;
}

IntensitySections intensity_sections(double axis_angle, const IntensityTriple& triple,
                                     double aspect_ratio) {
  check_ratio(aspect_ratio);
  const double total = check_length(triple.sum());
  if (total == 0.0) return {};

  const double inner_cut = std::min(triple.intense, total);
  const double outer_cut = std::min(triple.intense + triple.medium, total);
  const Cubic lower = lower_curve(total, aspect_ratio);
  return {
      rotated(local_section(lower, 0.0, inner_cut), axis_angle),
      rotated(local_section(lower, inner_cut, outer_cut), axis_angle),
      rotated(local_section(lower, outer_cut, total), axis_angle),
  };
}

PetalHalves two_tone_halves(double axis_angle, double length, double aspect_ratio) {
  check_ratio(aspect_ratio);
  length = check_length(length);
  if (length == 0.0) return {};

  const Cubic lower = lower_curve(length, aspect_ratio);
  Path ccw;
  ccw.start = lower[0];
  ccw.segments.emplace_back(LineTo{lower[3]});
  ccw.segments.emplace_back(CubicTo{mirror(lower[2]), mirror(lower[1]), lower[0]});

  Path cw;
  cw.start = lower[0];
  cw.segments.emplace_back(CubicTo{lower[1], lower[2], lower[3]});
  cw.segments.emplace_back(LineTo{lower[0]});

  return {rotated(ccw, axis_angle), rotated(cw, axis_angle)};
}

std::vector<Circle> grid_arcs() {
  std::vector<Circle> out;
  for (double r : {0.2, 0.4, 0.6, 0.8, 1.0}) out.push_back({Point{}, r});
  return out;
}

LabelAnchors label_anchor(double axis_angle) {
  return {polar(kNameLabelRadius, axis_angle), polar(kScoreLabelRadius, axis_angle)};
}

Path annular_sector(double inner_radius, double outer_radius, double start_angle,
                    double end_angle) {
  Path p;
  p.start = polar(outer_radius, start_angle);
  p.segments.emplace_back(ArcTo{Point{}, outer_radius, start_angle, end_angle});
  p.segments.emplace_back(LineTo{polar(inner_radius, end_angle)});
  p.segments.emplace_back(ArcTo{Point{}, inner_radius, end_angle, start_angle});
  p.segments.emplace_back(LineTo{p.start});
  return p;
}

}  // namespace plutchik
