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

#ifndef PLUTCHIK_VECTOR_DOC_HPP_
#define PLUTCHIK_VECTOR_DOC_HPP_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "plutchik/geometry.hpp"

namespace plutchik {

struct VectorDoc;

struct PathItem {
  std::string id;
  Path path;
  std::string fill = "none";
  std::string stroke = "none";
  double stroke_width = 0.0;
};

struct CircleItem {
  std::string id;
  Circle circle;
  std::string fill = "none";
  std::string stroke = "none";
  double stroke_width = 0.0;
};

struct LineItem {
  std::string id;
  Point from;
  Point to;
  std::string stroke = "#000000";
  double stroke_width = 0.0;
};

struct TextItem {
  std::string id;
  Point at;
  std::string text;
  double font_size = 0.0;
  std::string font_family;
  std::string font_weight;
  std::string fill = "#000000";
  std::string anchor = "middle";  // SVG text-anchor: start, middle or end
};

struct Element;

struct Group {
  std::string id;
  std::vector<Element> children;
};

// Another document placed into the frame (x, y, width, height) of the parent.
struct Embedded {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  std::shared_ptr<const VectorDoc> doc;
};

struct Element {
  std::variant<PathItem, CircleItem, LineItem, TextItem, Group, Embedded> item;
};

struct ViewBox {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
};

// Ordered display list. When y_up is set, element coordinates are
// mathematical (y grows upward) and are flipped on output; the view box is
// always given in output coordinates.
struct VectorDoc {
  double width = 0.0;
  double height = 0.0;
  ViewBox view_box;
  bool y_up = false;
  std::string title;
  std::vector<Element> elements;
};

// Fixed-precision decimal with trailing zeros removed; never "-0".
std::string format_number(double v, int decimals = 6);

// SVG path data for `path`, e.g. "M0 0C... Z".
std::string path_data(const Path& path, bool flip_y);

// Standalone SVG 1.1 document. Output is a pure function of the document.
std::string to_svg(const VectorDoc& doc);

// Depth-first lookup through groups (not into embedded documents).
const Element* find_element(const VectorDoc& doc, const std::string& id);

}  // namespace plutchik

#endif  // PLUTCHIK_VECTOR_DOC_HPP_
