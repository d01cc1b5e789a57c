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

#include "plutchik/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "plutchik/error.hpp"

namespace plutchik {
namespace {

using Json = nlohmann::ordered_json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key" in the text, if any.
std::optional<std::size_t> line_of_key(std::string_view text, std::string_view message) {
  const auto open = message.find('\'');
  if (open == std::string_view::npos) return std::nullopt;
  const auto close = message.find('\'', open + 1);
  if (close == std::string_view::npos) return std::nullopt;
  const std::string quoted = "\"" + std::string(message.substr(open + 1, close - open - 1)) + "\"";
  const auto at = text.find(quoted);
  if (at == std::string_view::npos) return std::nullopt;
  return line_at(text, at);
}

Json parse_json(std::string_view text, std::string_view source, std::size_t line_offset = 0) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    throw Error(ErrorCode::kJson, std::string(source) + ":" +
                                      std::to_string(line_offset + line_at(text, byte)) +
                                      ": invalid JSON: " + e.what());
  }
}

std::string group_value(const Json& v, std::string_view field, const std::string& where) {
  std::string out;
  if (v.is_string()) {
    out = v.get<std::string>();
  } else if (v.is_number_integer() || v.is_number_unsigned()) {
    out = v.dump();
  } else if (v.is_number()) {
    out = v.dump();
  } else {
    throw Error(ErrorCode::kInvalidValue,
                where + ": group field '" + std::string(field) + "' must be a string or number");
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidValue,
                where + ": group field '" + std::string(field) + "' is empty");
  }
  return out;
}

struct RawRecord {
  std::size_t line = 0;
  Json value;
};

std::vector<RawRecord> split_records(std::string_view text, std::string_view source) {
  std::vector<RawRecord> records;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return records;

  if (text[first] == '[') {
    Json all = parse_json(text, source);
    for (auto& v : all) records.push_back({0, std::move(v)});
    return records;
  }

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      records.push_back({line_no, parse_json(line, source, line_no - 1)});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return records;
}

}  // namespace

std::string read_input(const std::filesystem::path& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return ss.str();
}

RawScores raw_scores_from_json(const Json& object) {
  if (!object.is_object()) throw Error(ErrorCode::kJson, "expected a JSON object of scores");
  RawScores raw;
  for (const auto& [key, value] : object.items()) {
    if (value.is_number()) {
      raw.emplace_back(key, value.get<double>());
    } else if (value.is_array()) {
      std::vector<double> seq;
      for (const auto& x : value) {
        if (!x.is_number()) {
          throw Error(ErrorCode::kInvalidValue,
                      "key '" + key + "': intensity entries must be numbers");
        }
        seq.push_back(x.get<double>());
      }
      raw.emplace_back(key, std::move(seq));
    } else {
      throw Error(ErrorCode::kInvalidValue,
                  "key '" + key + "': expected a number or an array of 3 numbers, got " +
                      std::string(value.type_name()));
    }
  }
  return raw;
}

ScoreSet parse_score_document(std::string_view text, std::string_view source) {
  const Json doc = parse_json(text, source);
  try {
    return parse_scores(raw_scores_from_json(doc), Completeness::kStrict);
  } catch (const Error& e) {
    const auto line = line_of_key(text, e.what());
    throw Error(e.code(), std::string(source) + (line ? ":" + std::to_string(*line) : "") + ": " +
                              e.what());
  }
}

ScoreSet load_scores(const std::filesystem::path& path) {
  const std::string source = path == "-" ? "<stdin>" : path.string();
  return parse_score_document(read_input(path), source);
}

Json to_json(const ScoreSet& scores) {
  Json out = Json::object();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const std::string key(slot_name(scores.slot(i)));
    if (scores.has_triples()) {
      const IntensityTriple& t = scores.triple(i);
      out[key] = Json::array({t.mild, t.medium, t.intense});
    } else {
      out[key] = scores.score(i);
    }
  }
  return out;
}

std::string to_json_string(const ScoreSet& scores) { return to_json(scores).dump(2) + "\n"; }

std::vector<CorpusRecord> parse_corpus(std::string_view text,
                                       const std::optional<std::string>& group_by,
                                       std::string_view source) {
  std::vector<RawRecord> raw_records = split_records(text, source);
  if (raw_records.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, std::string(source) + ": corpus contains no records");
  }

  struct Parsed {
    std::optional<ScoreSet> scores;  // nullopt for records without any score key
    std::optional<std::string> id;
    std::optional<std::string> group;
  };
  std::vector<Parsed> parsed(raw_records.size());
  std::optional<std::size_t> first_scored;

  for (std::size_t i = 0; i < raw_records.size(); ++i) {
    const RawRecord& rec = raw_records[i];
    const std::string where = std::string(source) + ": record " + std::to_string(i) +
                              (rec.line > 0 ? " (line " + std::to_string(rec.line) + ")" : "");
    if (!rec.value.is_object()) {
      throw Error(ErrorCode::kJson, where + ": expected a JSON object");
    }
    Json scores = rec.value;
    Parsed& p = parsed[i];
    try {
      if (auto it = scores.find(std::string(kIdKey)); it != scores.end()) {
        p.id = it->is_string() ? it->get<std::string>() : it->dump();
      }
      if (group_by) {
        auto it = scores.find(*group_by);
        if (it == scores.end()) {
          throw Error(ErrorCode::kUnknownGroupField, "no group field '" + *group_by + "'");
        }
        p.group = group_value(*it, *group_by, where);
        scores.erase(*group_by);
      }
      scores.erase(std::string(kIdKey));
      scores.erase(std::string(kGroupKey));
      if (!scores.empty()) {
        p.scores = parse_scores(raw_scores_from_json(scores), Completeness::kFillMissing);
        if (!first_scored) first_scored = i;
      }
    } catch (const Error& e) {
      const std::string msg = e.what();
      throw Error(e.code(), msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
    }
  }

  const ScoreKind kind = first_scored ? parsed[*first_scored].scores->kind()
                                      : ScoreKind::kBasicScalar;
  std::vector<CorpusRecord> out;
  out.reserve(parsed.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    Parsed& p = parsed[i];
    if (p.scores && p.scores->kind() != kind) {
      throw Error(ErrorCode::kHeterogeneousKinds,
                  std::string(source) + ": record " + std::to_string(i) +
                      (raw_records[i].line > 0
                           ? " (line " + std::to_string(raw_records[i].line) + ")"
                           : "") +
                      " is " + std::string(to_string(p.scores->kind())) + " but record " +
                      std::to_string(*first_scored) + " is " + std::string(to_string(kind)));
    }
    ScoreSet scores = p.scores ? std::move(*p.scores)
                      : kind == ScoreKind::kBasicIntensity
                          ? ScoreSet::from_triples(std::vector<IntensityTriple>(8))
                          : ScoreSet::from_scalars(kind, std::vector<double>(slot_count(kind), 0.0));
    out.push_back({i, raw_records[i].line, std::move(p.id), std::move(p.group), std::move(scores)});
  }
  return out;
}

std::vector<GroupScores> group_corpus(const std::vector<CorpusRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus contains no records");
  std::vector<std::string> names;
  std::vector<std::vector<ScoreSet>> members;
  for (const CorpusRecord& r : records) {
    const std::string g = r.group.value_or("all");
    auto it = std::find(names.begin(), names.end(), g);
    if (it == names.end()) {
      names.push_back(g);
      members.emplace_back();
      it = names.end() - 1;
    }
    members[static_cast<std::size_t>(it - names.begin())].push_back(r.scores);
  }
  std::vector<GroupScores> out;
  out.reserve(names.size());
  for (std::size_t g = 0; g < names.size(); ++g) {
    out.push_back({names[g], members[g].size(), aggregate_corpus(members[g])});
  }
  return out;
}

std::vector<GroupScores> load_corpus(const std::filesystem::path& path,
                                     const std::optional<std::string>& group_by) {
  const std::string source = path == "-" ? "<stdin>" : path.string();
  return group_corpus(parse_corpus(read_input(path), group_by, source));
}

}  // namespace plutchik
