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

#ifndef PLUTCHIK_INGEST_HPP_
#define PLUTCHIK_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "plutchik/emotion_model.hpp"

namespace plutchik {

// Reads a whole file, or standard input when path is "-". Throws IoError.
std::string read_input(const std::filesystem::path& path);

// Converts a JSON object into a raw mapping. Values must be numbers or arrays
// of numbers.
RawScores raw_scores_from_json(const nlohmann::ordered_json& object);

// A single score document: one JSON object holding every slot of one wheel.
// `source` names the input in error messages.
ScoreSet parse_score_document(std::string_view text, std::string_view source = "<input>");
ScoreSet load_scores(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ScoreSet& scores);
std::string to_json_string(const ScoreSet& scores);

// Reserved corpus record keys.
inline constexpr std::string_view kIdKey = "_id";
inline constexpr std::string_view kGroupKey = "_group";

struct CorpusRecord {
  std::size_t index = 0;  // position in the file
  std::size_t line = 0;   // 1-based line where the record starts
  std::optional<std::string> id;
  std::optional<std::string> group;
  ScoreSet scores;
};

struct GroupScores {
  std::string group;
  std::size_t records = 0;
  ScoreSet scores;
};

// Parses a corpus given as JSON lines or as one JSON array of objects. Slots
// missing from a record count as 0. When group_by is set, that field holds
// each record's group and is removed from the scores.
// Throws JsonError, EmptyCorpus, HeterogeneousKinds, UnknownGroupField and any
// parse_scores error, each prefixed with the record index and line.
std::vector<CorpusRecord> parse_corpus(std::string_view text,
                                       const std::optional<std::string>& group_by = std::nullopt,
                                       std::string_view source = "<corpus>");

// Mean scores per group in order of first appearance; a single group named
// "all" without grouping.
std::vector<GroupScores> group_corpus(const std::vector<CorpusRecord>& records);

std::vector<GroupScores> load_corpus(const std::filesystem::path& path,
                                     const std::optional<std::string>& group_by = std::nullopt);

}  // namespace plutchik

#endif  // PLUTCHIK_INGEST_HPP_
