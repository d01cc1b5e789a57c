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

#include "plutchik/layout.hpp"

#include <algorithm>
#include <exception>
#include <memory>

#include "plutchik/error.hpp"

namespace plutchik {
namespace {

constexpr double kTitleBand = 0.08;  // of the cell width
constexpr double kTitleFont = 0.05;  // of the cell width

}  // namespace

VectorDoc compose_grid(std::vector<VectorDoc> wheels, const GridSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) {
    throw Error(ErrorCode::kInvalidOptions, "grid needs at least one row and one column");
  }
  if (wheels.empty()) throw Error(ErrorCode::kInvalidOptions, "grid needs at least one wheel");
  if (wheels.size() > spec.rows * spec.cols) {
    throw Error(ErrorCode::kGridOverflow,
                std::to_string(wheels.size()) + " wheels do not fit a " +
                    std::to_string(spec.rows) + "x" + std::to_string(spec.cols) + " grid");
  }
  if (!spec.cell_titles.empty() && spec.cell_titles.size() != wheels.size()) {
    throw Error(ErrorCode::kTitleMismatch,
                std::to_string(spec.cell_titles.size()) + " titles for " +
                    std::to_string(wheels.size()) + " wheels");
  }

  double max_w = 0.0;
  double max_h = 0.0;
  for (const VectorDoc& w : wheels) {
    max_w = std::max(max_w, w.width);
    max_h = std::max(max_h, w.height);
  }
  const double cell_w = max_w / (1.0 - 2 * kCellPadding);
  const double pad = kCellPadding * cell_w;
  const double band = spec.cell_titles.empty() ? 0.0 : kTitleBand * cell_w;
  const double cell_h = max_h + 2 * pad + band;

  VectorDoc grid;
  grid.width = static_cast<double>(spec.cols) * cell_w;
  grid.height = static_cast<double>(spec.rows) * cell_h;
  grid.view_box = {0.0, 0.0, grid.width, grid.height};

  for (std::size_t k = 0; k < wheels.size(); ++k) {
    const CellIndex cell = cell_of(k, spec.cols);
    const double left = static_cast<double>(cell.col) * cell_w;
    const double top = static_cast<double>(cell.row) * cell_h;
    const VectorDoc& w = wheels[k];
    const double scale = std::min(max_w / w.width, max_h / w.height);

    if (band > 0.0) {
      grid.elements.push_back({TextItem{"title-" + std::to_string(k),
                                        Point{left + cell_w / 2, top + pad + band / 2},
                                        spec.cell_titles[k], kTitleFont * cell_w,
                                        spec.font_family, "normal", "#000000"}});
    }
    Embedded e;
    e.id = "cell-" + std::to_string(k);
    e.width = w.width * scale;
    e.height = w.height * scale;
    e.x = left + pad + (max_w - e.width) / 2;
    e.y = top + pad + band + (max_h - e.height) / 2;
    e.doc = std::make_shared<const VectorDoc>(std::move(wheels[k]));
    grid.elements.push_back({std::move(e)});
  }
  return grid;
}

namespace reference {

std::vector<VectorDoc> render_wheels(std::span<const ScoreSet> sets, const RenderOptions& options) {
  std::vector<VectorDoc> out;
  out.reserve(sets.size());
  for (const ScoreSet& s : sets) out.push_back(render_wheel(s, options));
  return out;
}

}  // namespace reference

std::vector<VectorDoc> render_wheels(std::span<const ScoreSet> sets, const RenderOptions& options) {
  for (const ScoreSet& s : sets) validate(options, s.kind());

  std::vector<VectorDoc> out(sets.size());
  std::vector<std::exception_ptr> errors(sets.size());
  const long long n = static_cast<long long>(sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = render_wheel(sets[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

VectorDoc render_grid(std::span<const ScoreSet> sets, const RenderOptions& options,
                      const GridSpec& spec) {
  return compose_grid(render_wheels(sets, spec.cell_options.value_or(options)), spec);
}

GridSpec dyad_row(std::size_t rows) {
  GridSpec spec;
  spec.rows = rows;
  spec.cols = 5;
  for (std::size_t r = 0; r < rows; ++r) {
    for (const char* t : {"Emotions", "Primary dyads", "Secondary dyads", "Tertiary dyads",
                          "Opposite dyads"}) {
      spec.cell_titles.emplace_back(t);
    }
  }
  return spec;
}

VectorDoc render_dyad_rows(std::span<const ScoreSet> sets, const RenderOptions& options) {
  if (sets.empty() || sets.size() % 5 != 0) {
    throw Error(ErrorCode::kInvalidOptions,
                "dyad rows need five wheels per row, got " + std::to_string(sets.size()));
  }
  constexpr ScoreKind kOrder[] = {ScoreKind::kBasicScalar, ScoreKind::kDyadPrimary,
                                  ScoreKind::kDyadSecondary, ScoreKind::kDyadTertiary,
                                  ScoreKind::kDyadOpposite};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const ScoreKind want = kOrder[k % 5];
    const ScoreKind got = sets[k].kind();
    const bool ok = got == want || (want == ScoreKind::kBasicScalar && !is_dyad(got));
    if (!ok) {
      throw Error(ErrorCode::kInvalidOptions, "dyad row cell " + std::to_string(k) + " is " +
                                                  std::string(to_string(got)) + ", expected " +
                                                  std::string(to_string(want)));
    }
  }
  return render_grid(sets, options, dyad_row(sets.size() / 5));
}

}  // namespace plutchik
