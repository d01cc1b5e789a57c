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

#ifndef PLUTCHIK_EMOTION_MODEL_HPP_
#define PLUTCHIK_EMOTION_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace plutchik {

// Tolerance applied to every range and sum check on scores.
inline constexpr double kScoreEpsilon = 1e-9;

// The eight basic emotions in clockwise wheel order starting at the top.
// The underlying value is the wheel index.
enum class Emotion : std::uint8_t {
  kJoy = 0,
  kTrust,
  kFear,
  kSurprise,
  kSadness,
  kDisgust,
  kAnger,
  kAnticipation,
};

inline constexpr std::array<Emotion, 8> kEmotions = {
    Emotion::kJoy,     Emotion::kTrust,   Emotion::kFear,  Emotion::kSurprise,
    Emotion::kSadness, Emotion::kDisgust, Emotion::kAnger, Emotion::kAnticipation,
};

constexpr int wheel_index(Emotion e) { return static_cast<int>(e); }

// Wraps any integer onto the wheel.
constexpr Emotion emotion_at(int wheel_index) {
  return kEmotions[static_cast<std::size_t>(((wheel_index % 8) + 8) % 8)];
}

constexpr Emotion opposite(Emotion e) { return emotion_at(wheel_index(e) + 4); }

// Number of petals between two emotions on the wheel, in [0, 4].
constexpr int circular_distance(Emotion a, Emotion b) {
  const int d = ((wheel_index(a) - wheel_index(b)) % 8 + 8) % 8;
  return d > 4 ? 8 - d : d;
}

std::string_view name(Emotion e);          // "joy"
std::string_view display_name(Emotion e);  // "Joy"
std::optional<Emotion> emotion_from_name(std::string_view lowercase_name);

// Small fixed-size set of emotions, used for highlight and label selections.
class EmotionSet {
 public:
  constexpr EmotionSet() = default;

  static constexpr EmotionSet all() { return EmotionSet(0xFF); }
  static constexpr EmotionSet none() { return EmotionSet(0); }

  constexpr EmotionSet& insert(Emotion e) {
    bits_ = static_cast<std::uint8_t>(bits_ | (1u << wheel_index(e)));
    return *this;
  }
  constexpr bool contains(Emotion e) const { return (bits_ >> wheel_index(e)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_all() const { return bits_ == 0xFF; }
  constexpr int size() const { return __builtin_popcount(bits_); }

  friend constexpr bool operator==(EmotionSet, EmotionSet) = default;

 private:
  constexpr explicit EmotionSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

// Lower / base / higher intensity degree of one emotion, e.g. serenity / joy /
// ecstasy. The petal length is the sum of the three.
struct IntensityTriple {
  double mild = 0.0;
  double medium = 0.0;
  double intense = 0.0;

  double sum() const { return mild + medium + intense; }
  friend bool operator==(const IntensityTriple&, const IntensityTriple&) = default;
};

// Dyad level; the value is the circular distance between the components.
enum class DyadKind : std::uint8_t {
  kPrimary = 1,
  kSecondary = 2,
  kTertiary = 3,
  kOpposite = 4,
};

struct Dyad {
  std::string_view name;
  DyadKind kind;
  Emotion first;
  Emotion second;
  int position;  // slot index within the wheel of its kind

  friend bool operator==(const Dyad& a, const Dyad& b) { return a.name == b.name; }
};

// All 28 dyads: 8 primary, 8 secondary, 8 tertiary, 4 opposite.
std::span<const Dyad> dyad_catalog();
std::span<const Dyad> dyads_of(DyadKind kind);
std::optional<Dyad> dyad_from_name(std::string_view lowercase_name);
std::string display_name(const Dyad& d);

// Components in clockwise wheel order starting from the first one.
inline std::pair<Emotion, Emotion> dyad_components(const Dyad& d) {
  return {d.first, d.second};
}

enum class ScoreKind : std::uint8_t {
  kBasicScalar,
  kBasicIntensity,
  kDyadPrimary,
  kDyadSecondary,
  kDyadTertiary,
  kDyadOpposite,
};

std::string_view to_string(ScoreKind kind);
constexpr bool is_dyad(ScoreKind kind) {
  return kind != ScoreKind::kBasicScalar && kind != ScoreKind::kBasicIntensity;
}
// Requires is_dyad(kind).
DyadKind dyad_kind(ScoreKind kind);
ScoreKind score_kind(DyadKind kind);

using Slot = std::variant<Emotion, Dyad>;

std::string_view slot_name(const Slot& slot);
std::string slot_display_name(const Slot& slot);

// Slots of a wheel in drawing order.
std::vector<Slot> slots_of(ScoreKind kind);
std::size_t slot_count(ScoreKind kind);

// Axis angle in radians, counterclockwise from +x, normalized to (-pi, pi].
// Basic emotions sit at pi/2 - k*pi/4. Primary, secondary and tertiary dyads sit
// on the bisector of their components' axes. Opposite dyads occupy every other
// primary-dyad axis, pi/2 apart.
double angular_position(Emotion e);
double angular_position(const Dyad& d);
double angular_position(const Slot& slot);

// A validated set of scores for one wheel. Immutable after construction.
class ScoreSet {
 public:
  // Scalar scores for every slot of `kind`, in slots_of(kind) order.
  static ScoreSet from_scalars(ScoreKind kind, std::vector<double> scores);
  // Triples for the eight basic emotions, in wheel order.
  static ScoreSet from_triples(std::vector<IntensityTriple> triples);

  ScoreKind kind() const { return kind_; }
  bool has_triples() const { return kind_ == ScoreKind::kBasicIntensity; }
  std::size_t size() const;
  Slot slot(std::size_t i) const;

  // Scalar score, or the triple sum for intensity sets.
  double score(std::size_t i) const;
  // Requires has_triples().
  const IntensityTriple& triple(std::size_t i) const;

  std::span<const double> scalars() const { return scalars_; }
  std::span<const IntensityTriple> triples() const { return triples_; }

  std::optional<std::size_t> find(std::string_view slot_name) const;

  friend bool operator==(const ScoreSet&, const ScoreSet&) = default;

 private:
  ScoreSet() = default;

  ScoreKind kind_ = ScoreKind::kBasicScalar;
  std::vector<double> scalars_;
  std::vector<IntensityTriple> triples_;
};

// One value of an input mapping: a number or a sequence of numbers.
using RawValue = std::variant<double, std::vector<double>>;
using RawScores = std::vector<std::pair<std::string, RawValue>>;

enum class Completeness {
  kStrict,       // every slot of the inferred kind must be present
  kFillMissing,  // absent slots default to zero
};

// Infers the wheel kind from the key set and validates the values.
// Checks run in this order, and the first failure is reported:
//   UnknownKey, WrongArity (duplicate key), InvalidValue (value shape),
//   MixedKinds, WrongArity (missing key), OutOfRange, TripleOverflow.
// Keys are matched case-insensitively.
ScoreSet parse_scores(const RawScores& raw,
                      Completeness completeness = Completeness::kStrict);

// Per-slot arithmetic mean over a homogeneous corpus. The parallel version
// reduces over fixed-size blocks so its result does not depend on the number
// of threads.
ScoreSet aggregate_corpus(std::span<const ScoreSet> texts);

namespace reference {
// Serial single-pass mean, kept as the baseline for aggregate_corpus.
ScoreSet aggregate_corpus(std::span<const ScoreSet> texts);
}  // namespace reference

}  // namespace plutchik

#endif  // PLUTCHIK_EMOTION_MODEL_HPP_
