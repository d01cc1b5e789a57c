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

// Command line front end: renders wheels, comparisons and small multiples to
// SVG.
//
// Exit codes: 0 success, 1 internal error, 2 usage, 3 I/O, 4 malformed JSON,
// 5 unknown key, 6 mixed kinds, 7 wrong arity, 8 score out of range,
// 9 intensity sum above 1, 10 invalid value, 11 empty corpus,
// 12 heterogeneous corpus, 13 missing group field, 14 intensity labels without
// triples, 15 non-positive ratio, 16 invalid option value, 17 grid overflow,
// 18 title count mismatch.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plutchik/emotion_model.hpp"
#include "plutchik/error.hpp"
#include "plutchik/ingest.hpp"
#include "plutchik/layout.hpp"
#include "plutchik/render.hpp"

namespace {

using namespace plutchik;

struct StyleFlags {
  bool no_coordinates = false;
  double ratio = kDefaultAspectRatio;
  std::string highlight = "all";
  std::string intensity_labels = "none";
  double font_size = 15.0;
  std::string font_family = "sans-serif";
  std::string font_weight = "light";
  std::string title;
};

void add_style_flags(CLI::App* cmd, StyleFlags& f) {
  cmd->add_flag("--no-coordinates", f.no_coordinates, "Hide grid, axes and labels");
  cmd->add_option("--ratio", f.ratio, "Petal height/width ratio (lower is thicker)")
      ->capture_default_str();
  cmd->add_option("--highlight", f.highlight,
                  "Comma-separated emotions to color; the rest are ghosted (or 'all')")
      ->capture_default_str();
  cmd->add_option("--intensity-labels", f.intensity_labels,
                  "Comma-separated emotions showing all three intensity scores (or 'none')")
      ->capture_default_str();
  cmd->add_option("--font-size", f.font_size, "Font size in points")->capture_default_str();
  cmd->add_option("--font-family", f.font_family)->capture_default_str();
  cmd->add_option("--font-weight", f.font_weight, "light, normal or bold")
      ->capture_default_str();
  cmd->add_option("--title", f.title, "Title drawn above each wheel");
}

EmotionSet parse_emotion_list(const std::string& text, std::string_view flag) {
  std::string lower = text;
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "all") return EmotionSet::all();
  if (lower == "none" || lower.empty()) return EmotionSet::none();
  EmotionSet set;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    const auto comma = lower.find(',', pos);
    std::string item = lower.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    const auto e = emotion_from_name(item);
    if (!e) {
      throw Error(ErrorCode::kInvalidOptions,
                  std::string(flag) + ": '" + item + "' is not a basic emotion");
    }
    set.insert(*e);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return set;
}

RenderOptions to_options(const StyleFlags& f) {
  RenderOptions o;
  o.show_coordinates = !f.no_coordinates;
  o.height_width_ratio = f.ratio;
  o.highlight_emotions = parse_emotion_list(f.highlight, "--highlight");
  o.show_intensity_labels = parse_emotion_list(f.intensity_labels, "--intensity-labels");
  o.font_size = f.font_size;
  o.font_family = f.font_family;
  const auto weight = font_weight_from_name(f.font_weight);
  if (!weight) {
    throw Error(ErrorCode::kInvalidOptions,
                "--font-weight: expected light, normal or bold, got '" + f.font_weight + "'");
  }
  o.font_weight = *weight;
  o.title = f.title;
  return o;
}

void write_output(const std::string& path, const std::string& svg) {
  if (path.empty() || path == "-") {
    std::cout << svg;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::kIo, "cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << svg;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

int run(int argc, char** argv) {
  CLI::App app{"Render Plutchik emotion wheels as SVG"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::optional<std::string> group_by;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool force_coordinates = false;
  StyleFlags style;

  auto* render = app.add_subcommand("render", "Render one score document to one wheel");
  render->add_option("input", input, "Score document (JSON object), '-' for stdin")->required();

  auto* compare =
      app.add_subcommand("compare", "Render one wheel per corpus group, side by side");
  compare->add_option("corpus", input, "Corpus (JSON lines or array), '-' for stdin")->required();
  compare->add_option("--group-by", group_by, "Record field holding the group [_group]");

  auto* grid = app.add_subcommand("grid", "Render a small multiple of wheels");
  grid->add_option("corpus", input, "Corpus (JSON lines or array), '-' for stdin")->required();
  grid->add_option("--group-by", group_by,
                   "Record field holding the group; one wheel per group instead of per record");
  grid->add_option("--rows", rows, "Grid rows")->check(CLI::PositiveNumber);
  grid->add_option("--cols", cols, "Grid columns")->check(CLI::PositiveNumber);
  grid->add_flag("--coordinates", force_coordinates,
                 "Show coordinates even when the grid has more than 4 cells");

  for (auto* cmd : {render, compare, grid}) {
    cmd->add_option("-o,--output", output, "Output SVG path, stdout when omitted");
    add_style_flags(cmd, style);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "plutchik: " << e.what() << "\n";
    return exit_code(ErrorCode::kUsage);
  }

  try {
    RenderOptions options = to_options(style);

    if (render->parsed()) {
      write_output(output, to_svg(render_wheel(load_scores(input), options)));
      return 0;
    }

    if (compare->parsed()) {
      const auto groups = load_corpus(input, group_by.value_or(std::string(kGroupKey)));
      std::vector<ScoreSet> sets;
      GridSpec spec;
      spec.rows = 1;
      spec.cols = groups.size();
      spec.font_family = options.font_family;
      for (const auto& g : groups) {
        sets.push_back(g.scores);
        spec.cell_titles.push_back(g.group);
      }
      write_output(output, to_svg(render_grid(sets, options, spec)));
      return 0;
    }

    // grid
    std::vector<ScoreSet> sets;
    GridSpec spec;
    spec.font_family = options.font_family;
    if (group_by) {
      for (const auto& g : load_corpus(input, group_by)) {
        sets.push_back(g.scores);
        spec.cell_titles.push_back(g.group);
      }
    } else {
      const std::string source = input == "-" ? "<stdin>" : input;
      const auto records = parse_corpus(read_input(input), std::nullopt, source);
      const bool all_ids = std::all_of(records.begin(), records.end(),
                                       [](const CorpusRecord& r) { return r.id.has_value(); });
      for (const auto& r : records) {
        sets.push_back(r.scores);
        if (all_ids) spec.cell_titles.push_back(*r.id);
      }
    }
    const std::size_t n = sets.size();
    if (rows == 0 && cols == 0) {
      cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    }
    if (cols == 0) cols = ceil_div(n, rows);
    if (rows == 0) rows = ceil_div(n, cols);
    spec.rows = rows;
    spec.cols = cols;
    if (!force_coordinates && !style.no_coordinates) {
      options.show_coordinates = rows * cols <= kMaxCellsWithCoordinates;
    }
    write_output(output, to_svg(render_grid(sets, options, spec)));
    return 0;
  } catch (const Error& e) {
    std::cerr << "plutchik: error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "plutchik: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
