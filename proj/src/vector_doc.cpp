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

#include "plutchik/vector_doc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace plutchik {
namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

class SvgWriter {
 public:
  std::string take() { return std::move(out_); }

  void document(const VectorDoc& doc) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
    attr("width", doc.width);
    attr("height", doc.height);
    view_box(doc.view_box);
    out_ += ">\n";
    body(doc, "", 1);
    out_ += "</svg>\n";
  }

 private:
  void body(const VectorDoc& doc, const std::string& prefix, int depth) {
    if (!doc.title.empty()) {
      indent(depth);
      out_ += "<title>" + escape_xml(doc.title) + "</title>\n";
    }
    for (const Element& e : doc.elements) element(e, doc.y_up, prefix, depth);
  }

  void element(const Element& e, bool flip, const std::string& prefix, int depth) {
    std::visit([&](const auto& item) { write(item, flip, prefix, depth); }, e.item);
  }

  void write(const PathItem& p, bool flip, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<path";
    id(p.id, prefix);
    attr("d", path_data(p.path, flip));
    paint(p.fill, p.stroke, p.stroke_width);
    out_ += "/>\n";
  }

  void write(const CircleItem& c, bool flip, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<circle";
    id(c.id, prefix);
    attr("cx", c.circle.center.x);
    attr("cy", flip ? -c.circle.center.y : c.circle.center.y);
    attr("r", c.circle.radius);
    paint(c.fill, c.stroke, c.stroke_width);
    out_ += "/>\n";
  }

  void write(const LineItem& l, bool flip, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<line";
    id(l.id, prefix);
    attr("x1", l.from.x);
    attr("y1", flip ? -l.from.y : l.from.y);
    attr("x2", l.to.x);
    attr("y2", flip ? -l.to.y : l.to.y);
    attr("stroke", l.stroke);
    attr("stroke-width", l.stroke_width);
    out_ += "/>\n";
  }

  void write(const TextItem& t, bool flip, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<text";
    id(t.id, prefix);
    attr("x", t.at.x);
    attr("y", flip ? -t.at.y : t.at.y);
    attr("font-size", t.font_size);
    attr("font-family", t.font_family);
    attr("font-weight", t.font_weight);
    attr("fill", t.fill);
    attr("text-anchor", t.anchor);
    attr("dominant-baseline", "central");
    out_ += ">" + escape_xml(t.text) + "</text>\n";
  }

  void write(const Group& g, bool flip, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<g";
    id(g.id, prefix);
    if (g.children.empty()) {
      out_ += "/>\n";
      return;
    }
    out_ += ">\n";
    for (const Element& e : g.children) element(e, flip, prefix, depth + 1);
    indent(depth);
    out_ += "</g>\n";
  }

  void write(const Embedded& e, bool /*flip*/, const std::string& prefix, int depth) {
    indent(depth);
    out_ += "<svg";
    id(e.id, prefix);
    attr("x", e.x);
    attr("y", e.y);
    attr("width", e.width);
    attr("height", e.height);
    if (e.doc) view_box(e.doc->view_box);
    out_ += ">\n";
    if (e.doc) body(*e.doc, prefix + e.id + "-", depth + 1);
    indent(depth);
    out_ += "</svg>\n";
  }

  void id(const std::string& id, const std::string& prefix) {
    if (!id.empty()) attr("id", prefix + id);
  }

  void paint(const std::string& fill, const std::string& stroke, double width) {
    attr("fill", fill);
    attr("stroke", stroke);
    if (stroke != "none") attr("stroke-width", width);
  }

  void view_box(const ViewBox& vb) {
    attr("viewBox", format_number(vb.x) + " " + format_number(vb.y) + " " +
                        format_number(vb.width) + " " + format_number(vb.height));
  }

  void attr(std::string_view name, double v) { attr(name, format_number(v)); }

  void attr(std::string_view name, std::string_view v) {
    out_ += ' ';
    out_ += name;
    out_ += "=\"";
    out_ += escape_xml(v);
    out_ += '"';
  }

  void indent(int depth) { out_.append(static_cast<std::size_t>(2 * depth), ' '); }

  std::string out_;
};

void append_point(std::string& out, Point p, bool flip) {
  out += format_number(p.x);
  out += ' ';
  out += format_number(flip ? -p.y : p.y);
}

}  // namespace

std::string format_number(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string path_data(const Path& path, bool flip_y) {
  if (path.empty()) return {};
  std::string d = "M";
  append_point(d, path.start, flip_y);
  for (const Segment& s : path.segments) {
    if (const auto* l = std::get_if<LineTo>(&s)) {
      d += 'L';
      append_point(d, l->to, flip_y);
    } else if (const auto* c = std::get_if<CubicTo>(&s)) {
      d += 'C';
      append_point(d, c->c1, flip_y);
      d += ' ';
      append_point(d, c->c2, flip_y);
      d += ' ';
      append_point(d, c->to, flip_y);
    } else {
      // SVG arcs are emitted in pieces of at most a quarter turn so the
      // large-arc flag is always 0.
      const auto& a = std::get<ArcTo>(s);
      const double sweep = a.end_angle - a.start_angle;
      const int pieces = std::max(1, static_cast<int>(std::ceil(
                                         std::abs(sweep) / (std::numbers::pi / 2) - 1e-12)));
      const bool positive = sweep > 0;
      const char sweep_flag = (positive != flip_y) ? '1' : '0';
      for (int i = 1; i <= pieces; ++i) {
        const double angle =
            i == pieces ? a.end_angle : a.start_angle + sweep * i / pieces;
        const Point to = a.center + polar(a.radius, angle);
        d += 'A';
        d += format_number(a.radius) + ' ' + format_number(a.radius) + " 0 0 " + sweep_flag + ' ';
        append_point(d, to, flip_y);
      }
    }
  }
  if (path.closed()) d += 'Z';
  return d;
}

std::string to_svg(const VectorDoc& doc) {
  SvgWriter w;
  w.document(doc);
  return w.take();
}

namespace {

const Element* find_in(const std::vector<Element>& elements, const std::string& id) {
  for (const Element& e : elements) {
    const Element* hit = std::visit(
        [&](const auto& item) -> const Element* {
          using T = std::decay_t<decltype(item)>;
          if (item.id == id) return &e;
          if constexpr (std::is_same_v<T, Group>) return find_in(item.children, id);
          return nullptr;
        },
        e.item);
    if (hit != nullptr) return hit;
  }
  return nullptr;
}

}  // namespace

const Element* find_element(const VectorDoc& doc, const std::string& id) {
  return find_in(doc.elements, id);
}

}  // namespace plutchik
