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

#include "plutchik/emotion_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plutchik/error.hpp"

namespace plutchik {
namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "joy", "trust", "fear", "surprise", "sadness", "disgust", "anger", "anticipation",
};
constexpr std::array<std::string_view, 8> kDisplayNames = {
    "Joy", "Trust", "Fear", "Surprise", "Sadness", "Disgust", "Anger", "Anticipation",
};

using E = Emotion;

// Grouped by kind; within a kind, position k starts from emotion k.
constexpr std::array<Dyad, 28> kDyads = {{
    {"love", DyadKind::kPrimary, E::kJoy, E::kTrust, 0},
    {"submission", DyadKind::kPrimary, E::kTrust, E::kFear, 1},
    {"awe", DyadKind::kPrimary, E::kFear, E::kSurprise, 2},
    {"disapproval", DyadKind::kPrimary, E::kSurprise, E::kSadness, 3},
    {"remorse", DyadKind::kPrimary, E::kSadness, E::kDisgust, 4},
    {"contempt", DyadKind::kPrimary, E::kDisgust, E::kAnger, 5},
    {"aggressiveness", DyadKind::kPrimary, E::kAnger, E::kAnticipation, 6},
    {"optimism", DyadKind::kPrimary, E::kAnticipation, E::kJoy, 7},

    {"guilt", DyadKind::kSecondary, E::kJoy, E::kFear, 0},
    {"curiosity", DyadKind::kSecondary, E::kTrust, E::kSurprise, 1},
    {"despair", DyadKind::kSecondary, E::kFear, E::kSadness, 2},
    {"unbelief", DyadKind::kSecondary, E::kSurprise, E::kDisgust, 3},
    {"envy", DyadKind::kSecondary, E::kSadness, E::kAnger, 4},
    {"cynicism", DyadKind::kSecondary, E::kDisgust, E::kAnticipation, 5},
    {"pride", DyadKind::kSecondary, E::kAnger, E::kJoy, 6},
    {"hope", DyadKind::kSecondary, E::kAnticipation, E::kTrust, 7},

    {"delight", DyadKind::kTertiary, E::kJoy, E::kSurprise, 0},
    {"sentimentality", DyadKind::kTertiary, E::kTrust, E::kSadness, 1},
    {"shame", DyadKind::kTertiary, E::kFear, E::kDisgust, 2},
    {"outrage", DyadKind::kTertiary, E::kSurprise, E::kAnger, 3},
    {"pessimism", DyadKind::kTertiary, E::kSadness, E::kAnticipation, 4},
    {"morbidness", DyadKind::kTertiary, E::kDisgust, E::kJoy, 5},
    {"dominance", DyadKind::kTertiary, E::kAnger, E::kTrust, 6},
    {"anxiety", DyadKind::kTertiary, E::kAnticipation, E::kFear, 7},

    {"bittersweetness", DyadKind::kOpposite, E::kJoy, E::kSadness, 0},
    {"ambivalence", DyadKind::kOpposite, E::kTrust, E::kDisgust, 1},
    {"frozenness", DyadKind::kOpposite, E::kFear, E::kAnger, 2},
    {"confusion", DyadKind::kOpposite, E::kSurprise, E::kAnticipation, 3},
}};

std::size_t dyad_offset(DyadKind kind) {
  return (static_cast<std::size_t>(kind) - 1) * 8;
}

double normalize_angle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += kTwoPi;
  while (a > std::numbers::pi) a -= kTwoPi;
  return a;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Key category used for kind inference. Basic keys split further on value shape.
enum class KeyClass { kBasicScalar, kBasicTriple, kPrimary, kSecondary, kTertiary, kOpposite };

std::string_view describe(KeyClass c) {
  switch (c) {
    case KeyClass::kBasicScalar: return "basic emotion, scalar";
    case KeyClass::kBasicTriple: return "basic emotion, intensity triple";
    case KeyClass::kPrimary: return "primary dyad";
    case KeyClass::kSecondary: return "secondary dyad";
    case KeyClass::kTertiary: return "tertiary dyad";
    case KeyClass::kOpposite: return "opposite dyad";
  }
  return "?";
}

ScoreKind kind_of(KeyClass c) {
  switch (c) {
    case KeyClass::kBasicScalar: return ScoreKind::kBasicScalar;
    case KeyClass::kBasicTriple: return ScoreKind::kBasicIntensity;
    case KeyClass::kPrimary: return ScoreKind::kDyadPrimary;
    case KeyClass::kSecondary: return ScoreKind::kDyadSecondary;
    case KeyClass::kTertiary: return ScoreKind::kDyadTertiary;
    case KeyClass::kOpposite: return ScoreKind::kDyadOpposite;
  }
  return ScoreKind::kBasicScalar;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Validates one score against [0, 1] with tolerance and snaps it into range.
double checked_score(double v, std::string_view key) {
  if (!std::isfinite(v) || v < -kScoreEpsilon || v > 1.0 + kScoreEpsilon) {
    throw Error(ErrorCode::kOutOfRange, "key '" + std::string(key) + "': score " +
                                            format_value(v) + " outside [0, 1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

IntensityTriple checked_triple(const IntensityTriple& t, std::string_view key) {
  IntensityTriple out{checked_score(t.mild, key), checked_score(t.medium, key),
                      checked_score(t.intense, key)};
  if (out.sum() > 1.0 + kScoreEpsilon) {
    throw Error(ErrorCode::kTripleOverflow, "key '" + std::string(key) +
                                                "': intensity scores sum to " +
                                                format_value(out.sum()) + " > 1");
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kJson: return "json";
    case ErrorCode::kUnknownKey: return "unknown-key";
    case ErrorCode::kMixedKinds: return "mixed-kinds";
    case ErrorCode::kWrongArity: return "wrong-arity";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kTripleOverflow: return "triple-overflow";
    case ErrorCode::kInvalidValue: return "invalid-value";
    case ErrorCode::kEmptyCorpus: return "empty-corpus";
    case ErrorCode::kHeterogeneousKinds: return "heterogeneous-kinds";
    case ErrorCode::kUnknownGroupField: return "unknown-group-field";
    case ErrorCode::kInvalidOptionCombination: return "invalid-option-combination";
    case ErrorCode::kNonPositiveRatio: return "non-positive-ratio";
    case ErrorCode::kInvalidOptions: return "invalid-options";
    case ErrorCode::kGridOverflow: return "grid-overflow";
    case ErrorCode::kTitleMismatch: return "title-mismatch";
  }
  return "unknown";
}

std::string_view name(Emotion e) { return kNames[static_cast<std::size_t>(e)]; }
std::string_view display_name(Emotion e) { return kDisplayNames[static_cast<std::size_t>(e)]; }

std::optional<Emotion> emotion_from_name(std::string_view lowercase_name) {
  for (Emotion e : kEmotions) {
    if (name(e) == lowercase_name) return e;
  }
  return std::nullopt;
}

std::span<const Dyad> dyad_catalog() { return kDyads; }

std::span<const Dyad> dyads_of(DyadKind kind) {
  return std::span<const Dyad>(kDyads).subspan(dyad_offset(kind),
                                               kind == DyadKind::kOpposite ? 4 : 8);
}

std::optional<Dyad> dyad_from_name(std::string_view lowercase_name) {
  for (const Dyad& d : kDyads) {
    if (d.name == lowercase_name) return d;
  }
  return std::nullopt;
}

std::string display_name(const Dyad& d) {
  std::string out(d.name);
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string_view to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kBasicScalar: return "basic_scalar";
    case ScoreKind::kBasicIntensity: return "basic_intensity";
    case ScoreKind::kDyadPrimary: return "dyad_primary";
    case ScoreKind::kDyadSecondary: return "dyad_secondary";
    case ScoreKind::kDyadTertiary: return "dyad_tertiary";
    case ScoreKind::kDyadOpposite: return "dyad_opposite";
  }
  return "?";
}

DyadKind dyad_kind(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kDyadPrimary: return DyadKind::kPrimary;
    case ScoreKind::kDyadSecondary: return DyadKind::kSecondary;
    case ScoreKind::kDyadTertiary: return DyadKind::kTertiary;
    case ScoreKind::kDyadOpposite: return DyadKind::kOpposite;
    default: break;
  }
  throw std::logic_error("dyad_kind: not a dyad score kind");
}

ScoreKind score_kind(DyadKind kind) {
  switch (kind) {
    case DyadKind::kPrimary: return ScoreKind::kDyadPrimary;
    case DyadKind::kSecondary: return ScoreKind::kDyadSecondary;
    case DyadKind::kTertiary: return ScoreKind::kDyadTertiary;
    case DyadKind::kOpposite: return ScoreKind::kDyadOpposite;
  }
  return ScoreKind::kDyadPrimary;
}

std::string_view slot_name(const Slot& slot) {
  if (const auto* e = std::get_if<Emotion>(&slot)) return name(*e);
  return std::get<Dyad>(slot).name;
}

std::string slot_display_name(const Slot& slot) {
  if (const auto* e = std::get_if<Emotion>(&slot)) return std::string(display_name(*e));
  return display_name(std::get<Dyad>(slot));
}

std::vector<Slot> slots_of(ScoreKind kind) {
  std::vector<Slot> out;
  if (!is_dyad(kind)) {
    out.assign(kEmotions.begin(), kEmotions.end());
  } else {
    for (const Dyad& d : dyads_of(dyad_kind(kind))) out.emplace_back(d);
  }
  return out;
}

std::size_t slot_count(ScoreKind kind) {
  return kind == ScoreKind::kDyadOpposite ? 4 : 8;
}

double angular_position(Emotion e) {
  return normalize_angle(std::numbers::pi / 2 - wheel_index(e) * (std::numbers::pi / 4));
}

double angular_position(const Dyad& d) {
  constexpr double kEighth = std::numbers::pi / 8;
  if (d.kind == DyadKind::kOpposite) {
    return normalize_angle(std::numbers::pi / 2 - kEighth -
                           d.position * (std::numbers::pi / 2));
  }
  return normalize_angle(std::numbers::pi / 2 - wheel_index(d.first) * (std::numbers::pi / 4) -
                         static_cast<int>(d.kind) * kEighth);
}

double angular_position(const Slot& slot) {
  return std::visit([](const auto& s) { return angular_position(s); }, slot);
}

ScoreSet ScoreSet::from_scalars(ScoreKind kind, std::vector<double> scores) {
  if (kind == ScoreKind::kBasicIntensity) {
    throw std::logic_error("from_scalars: use from_triples for intensity sets");
  }
  const auto slots = slots_of(kind);
  if (scores.size() != slots.size()) {
    throw Error(ErrorCode::kWrongArity, std::string(to_string(kind)) + " expects " +
                                            std::to_string(slots.size()) + " scores, got " +
                                            std::to_string(scores.size()));
  }
  ScoreSet s;
  s.kind_ = kind;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = checked_score(scores[i], slot_name(slots[i]));
  }
  s.scalars_ = std::move(scores);
  return s;
}

ScoreSet ScoreSet::from_triples(std::vector<IntensityTriple> triples) {
  if (triples.size() != 8) {
    throw Error(ErrorCode::kWrongArity,
                "basic_intensity expects 8 triples, got " + std::to_string(triples.size()));
  }
  ScoreSet s;
  s.kind_ = ScoreKind::kBasicIntensity;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    triples[i] = checked_triple(triples[i], kNames[i]);
  }
  s.triples_ = std::move(triples);
  return s;
}

std::size_t ScoreSet::size() const { return slot_count(kind_); }

Slot ScoreSet::slot(std::size_t i) const {
  if (!is_dyad(kind_)) return kEmotions.at(i);
  return dyads_of(dyad_kind(kind_))[i];
}

double ScoreSet::score(std::size_t i) const {
  return has_triples() ? triples_.at(i).sum() : scalars_.at(i);
}

const IntensityTriple& ScoreSet::triple(std::size_t i) const {
  if (!has_triples()) throw std::logic_error("ScoreSet::triple on a scalar set");
  return triples_.at(i);
}

std::optional<std::size_t> ScoreSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (slot_name(slot(i)) == name) return i;
  }
  return std::nullopt;
}

ScoreSet parse_scores(const RawScores& raw, Completeness completeness) {
  struct Entry {
    std::string key;
    Slot slot;
    const RawValue* value;
  };
  std::vector<Entry> entries;
  entries.reserve(raw.size());

  for (const auto& [key, value] : raw) {
    std::string canonical = lowercase(key);
    if (auto e = emotion_from_name(canonical)) {
      entries.push_back({std::move(canonical), *e, &value});
    } else if (auto d = dyad_from_name(canonical)) {
      entries.push_back({std::move(canonical), *d, &value});
    } else {
      throw Error(ErrorCode::kUnknownKey, "unknown key '" + key + "'");
    }
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i].key == entries[j].key) {
        throw Error(ErrorCode::kWrongArity, "duplicate key '" + entries[i].key + "'");
      }
    }
  }

  std::vector<KeyClass> classes;
  classes.reserve(entries.size());
  for (const Entry& entry : entries) {
    const auto* seq = std::get_if<std::vector<double>>(entry.value);
    if (seq != nullptr && seq->size() != 3) {
      throw Error(ErrorCode::kInvalidValue, "key '" + entry.key +
                                                "': intensity value must have 3 entries, got " +
                                                std::to_string(seq->size()));
    }
    if (const auto* d = std::get_if<Dyad>(&entry.slot)) {
      if (seq != nullptr) {
        throw Error(ErrorCode::kInvalidValue,
                    "key '" + entry.key + "': dyads take a single score, not a triple");
      }
      classes.push_back(static_cast<KeyClass>(static_cast<int>(d->kind) + 1));
    } else {
      classes.push_back(seq != nullptr ? KeyClass::kBasicTriple : KeyClass::kBasicScalar);
    }
  }

  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (classes[i] != classes[0]) {
      throw Error(ErrorCode::kMixedKinds,
                  "cannot mix '" + entries[0].key + "' (" + std::string(describe(classes[0])) +
                      ") with '" + entries[i].key + "' (" + std::string(describe(classes[i])) +
                      ") in one wheel");
    }
  }

  if (entries.empty()) {
    if (completeness == Completeness::kStrict) {
      throw Error(ErrorCode::kWrongArity, "no scores given; expected 8 basic emotions");
    }
    return ScoreSet::from_scalars(ScoreKind::kBasicScalar, std::vector<double>(8, 0.0));
  }

  const ScoreKind kind = kind_of(classes[0]);
  const auto slots = slots_of(kind);
  std::vector<const Entry*> by_slot(slots.size(), nullptr);
  for (const Entry& entry : entries) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slot_name(slots[i]) == entry.key) by_slot[i] = &entry;
    }
  }
  if (completeness == Completeness::kStrict) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (by_slot[i] == nullptr) {
        throw Error(ErrorCode::kWrongArity,
                    "missing key '" + std::string(slot_name(slots[i])) + "' (" +
                        std::string(to_string(kind)) + " needs " +
                        std::to_string(slots.size()) + " keys, got " +
                        std::to_string(entries.size()) + ")");
      }
    }
  }

  if (kind == ScoreKind::kBasicIntensity) {
    // Check every component range before any sum so the error order is stable.
    std::vector<IntensityTriple> triples(8);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (by_slot[i] == nullptr) continue;
      const auto& v = std::get<std::vector<double>>(*by_slot[i]->value);
      triples[i] = {checked_score(v[0], by_slot[i]->key), checked_score(v[1], by_slot[i]->key),
                    checked_score(v[2], by_slot[i]->key)};
    }
    return ScoreSet::from_triples(std::move(triples));
  }

  std::vector<double> scores(slots.size(), 0.0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (by_slot[i] != nullptr) scores[i] = std::get<double>(*by_slot[i]->value);
  }
  return ScoreSet::from_scalars(kind, std::move(scores));
}

}  // namespace plutchik
