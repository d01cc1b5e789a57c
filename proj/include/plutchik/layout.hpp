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

#ifndef PLUTCHIK_LAYOUT_HPP_
#define PLUTCHIK_LAYOUT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plutchik/emotion_model.hpp"
#include "plutchik/render.hpp"
#include "plutchik/vector_doc.hpp"

namespace plutchik {

struct GridSpec {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<std::string> cell_titles;  // empty, or one per wheel
  std::string font_family = "sans-serif";
  // Replaces the caller's options for every cell when set.
  std::optional<RenderOptions> cell_options;
};

// Fraction of the cell width left empty on each side of a wheel.
inline constexpr double kCellPadding = 0.05;

struct CellIndex {
  std::size_t row;
  std::size_t col;
  friend bool operator==(CellIndex, CellIndex) = default;
};

// Row-major placement.
constexpr CellIndex cell_of(std::size_t k, std::size_t cols) { return {k / cols, k % cols}; }

// Places each wheel, aspect preserved, in a uniform cell. Wheels are embedded
// unchanged, so every cell's subtree matches the standalone document.
// Throws GridOverflow, TitleMismatch, InvalidOptions.
VectorDoc compose_grid(std::vector<VectorDoc> wheels, const GridSpec& spec);

// Renders every ScoreSet; cells are rendered concurrently.
std::vector<VectorDoc> render_wheels(std::span<const ScoreSet> sets, const RenderOptions& options);

namespace reference {
std::vector<VectorDoc> render_wheels(std::span<const ScoreSet> sets, const RenderOptions& options);
}  // namespace reference

VectorDoc render_grid(std::span<const ScoreSet> sets, const RenderOptions& options,
                      const GridSpec& spec);

// "dyad-row" preset: per row, the basic wheel followed by the primary,
// secondary, tertiary and opposite dyad wheels.
GridSpec dyad_row(std::size_t rows = 1);

// `sets` holds rows of five wheels in the order of dyad_row().
VectorDoc render_dyad_rows(std::span<const ScoreSet> sets, const RenderOptions& options);

// Small multiples hide coordinates once they exceed this many cells.
inline constexpr std::size_t kMaxCellsWithCoordinates = 4;

}  // namespace plutchik

#endif  // PLUTCHIK_LAYOUT_HPP_
