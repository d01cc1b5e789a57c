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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plutchik/error.hpp"
#include "test_support.hpp"

namespace plutchik {
namespace {

using testing_support::basic;
constexpr double kPi = std::numbers::pi;

// Smallest absolute difference between two angles.
double angle_gap(double a, double b) {
  double d = std::fmod(std::fabs(a - b), 2 * kPi);
  return d > kPi ? 2 * kPi - d : d;
}

ErrorCode parse_error(const RawScores& raw) {
  try {
    parse_scores(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kUsage;
}

TEST(EmotionTest, WheelOrderAndNames) {
  const std::vector<std::string> want = {"joy", "trust", "fear", "surprise",
                                         "sadness", "disgust", "anger", "anticipation"};
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(name(emotion_at(k)), want[k]);
    EXPECT_EQ(emotion_from_name(want[k]), emotion_at(k));
  }
  EXPECT_EQ(display_name(Emotion::kAnticipation), "Anticipation");
  EXPECT_FALSE(emotion_from_name("happiness").has_value());
}

TEST(EmotionTest, OppositeIsAnInvolution) {
  EXPECT_EQ(opposite(Emotion::kJoy), Emotion::kSadness);
  EXPECT_EQ(opposite(Emotion::kTrust), Emotion::kDisgust);
  EXPECT_EQ(opposite(Emotion::kFear), Emotion::kAnger);
  EXPECT_EQ(opposite(Emotion::kSurprise), Emotion::kAnticipation);
  for (Emotion e : kEmotions) {
    EXPECT_EQ(opposite(opposite(e)), e);
    EXPECT_NE(opposite(e), e);
    EXPECT_EQ(circular_distance(e, opposite(e)), 4);
  }
}

TEST(EmotionTest, AxisAngles) {
  EXPECT_NEAR(angular_position(Emotion::kJoy), kPi / 2, 1e-15);
  EXPECT_NEAR(angular_position(Emotion::kTrust), kPi / 4, 1e-15);
  EXPECT_NEAR(angular_position(Emotion::kSadness), -kPi / 2, 1e-15);
  for (Emotion e : kEmotions) {
    const double a = angular_position(e);
    EXPECT_GT(a, -kPi);
    EXPECT_LE(a, kPi);
    EXPECT_NEAR(angle_gap(a, angular_position(opposite(e))), kPi, 1e-12);
    const Emotion next = emotion_at(wheel_index(e) + 1);
    EXPECT_NEAR(angle_gap(a, angular_position(next)), kPi / 4, 1e-12);
  }
}

TEST(EmotionTest, EmotionSet) {
  EXPECT_TRUE(EmotionSet::all().is_all());
  EXPECT_EQ(EmotionSet::all().size(), 8);
  EXPECT_TRUE(EmotionSet::none().empty());
  EmotionSet s;
  s.insert(Emotion::kJoy).insert(Emotion::kAnticipation);
  EXPECT_TRUE(s.contains(Emotion::kJoy));
  EXPECT_FALSE(s.contains(Emotion::kFear));
  EXPECT_EQ(s.size(), 2);
}

TEST(DyadTest, CatalogCountsAndDistances) {
  EXPECT_EQ(dyad_catalog().size(), 28u);
  EXPECT_EQ(dyads_of(DyadKind::kPrimary).size(), 8u);
  EXPECT_EQ(dyads_of(DyadKind::kSecondary).size(), 8u);
  EXPECT_EQ(dyads_of(DyadKind::kTertiary).size(), 8u);
  EXPECT_EQ(dyads_of(DyadKind::kOpposite).size(), 4u);
  std::set<std::pair<int, int>> pairs;
  std::set<std::string_view> names;
  for (const Dyad& d : dyad_catalog()) {
    EXPECT_EQ(circular_distance(d.first, d.second), static_cast<int>(d.kind)) << d.name;
    pairs.insert(std::minmax(wheel_index(d.first), wheel_index(d.second)));
    names.insert(d.name);
    EXPECT_EQ(dyad_from_name(d.name), d);
  }
  // Every unordered pair of distinct emotions appears exactly once.
  EXPECT_EQ(pairs.size(), 28u);
  EXPECT_EQ(names.size(), 28u);
}

TEST(DyadTest, KnownComponents) {
  const auto contempt = dyad_from_name("contempt");
  ASSERT_TRUE(contempt);
  EXPECT_EQ(contempt->kind, DyadKind::kPrimary);
  EXPECT_EQ(dyad_components(*contempt), std::make_pair(Emotion::kDisgust, Emotion::kAnger));
  const auto hope = dyad_from_name("hope");
  ASSERT_TRUE(hope);
  EXPECT_EQ(hope->kind, DyadKind::kSecondary);
  EXPECT_EQ(dyad_components(*hope), std::make_pair(Emotion::kAnticipation, Emotion::kTrust));
  EXPECT_EQ(dyad_from_name("love")->first, Emotion::kJoy);
  EXPECT_EQ(dyad_from_name("bittersweetness")->second, Emotion::kSadness);
  EXPECT_FALSE(dyad_from_name("joy").has_value());
}

TEST(DyadTest, AxesBisectComponents) {
  for (DyadKind kind : {DyadKind::kPrimary, DyadKind::kSecondary, DyadKind::kTertiary}) {
    for (const Dyad& d : dyads_of(kind)) {
      const double a = angular_position(d);
      const double g1 = angle_gap(a, angular_position(d.first));
      const double g2 = angle_gap(a, angular_position(d.second));
      EXPECT_NEAR(g1, g2, 1e-12) << d.name;
      EXPECT_NEAR(g1 + g2, static_cast<int>(kind) * kPi / 4, 1e-12) << d.name;
    }
  }
}

TEST(DyadTest, AxesEvenlySpacedPerWheel) {
  for (DyadKind kind : {DyadKind::kPrimary, DyadKind::kSecondary, DyadKind::kTertiary,
                        DyadKind::kOpposite}) {
    const auto dyads = dyads_of(kind);
    const double step = 2 * kPi / static_cast<double>(dyads.size());
    for (std::size_t i = 0; i < dyads.size(); ++i) {
      const auto& next = dyads[(i + 1) % dyads.size()];
      EXPECT_NEAR(angle_gap(angular_position(dyads[i]), angular_position(next)), step, 1e-12);
    }
  }
}

TEST(DyadTest, FirstComponentIsCounterclockwiseOfAxis) {
  for (const Dyad& d : dyad_catalog()) {
    const double a = angular_position(d);
    const double rel = std::remainder(angular_position(d.first) - a, 2 * kPi);
    EXPECT_GT(rel, 0.0) << d.name;
    const double bound = d.kind == DyadKind::kOpposite ? kPi : kPi / 2 + 1e-12;
    EXPECT_LT(rel, bound) << d.name;
  }
}

TEST(ScoreKindTest, SlotsPerKind) {
  EXPECT_EQ(slot_count(ScoreKind::kBasicScalar), 8u);
  EXPECT_EQ(slot_count(ScoreKind::kBasicIntensity), 8u);
  EXPECT_EQ(slot_count(ScoreKind::kDyadPrimary), 8u);
  EXPECT_EQ(slot_count(ScoreKind::kDyadOpposite), 4u);
  EXPECT_EQ(slot_name(slots_of(ScoreKind::kDyadTertiary)[0]), "delight");
  EXPECT_EQ(slot_display_name(slots_of(ScoreKind::kBasicScalar)[7]), "Anticipation");
}

TEST(ParseTest, ThreeEmotionExample) {
  const ScoreSet s = parse_scores(basic({1, 1, 0, 0, 1, 0, 0, 0}));
  EXPECT_EQ(s.kind(), ScoreKind::kBasicScalar);
  EXPECT_EQ(s.score(0), 1.0);
  EXPECT_EQ(s.score(2), 0.0);
  EXPECT_EQ(s.score(*s.find("sadness")), 1.0);
}

TEST(ParseTest, KeyOrderAndCaseDoNotMatter) {
  RawScores raw = basic({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8});
  std::reverse(raw.begin(), raw.end());
  raw[0].first = "ANTICIPATION";
  raw[3].first = "Sadness";
  EXPECT_EQ(parse_scores(raw), parse_scores(basic({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8})));
}

TEST(ParseTest, IntensityTriples) {
  RawScores raw;
  for (const auto& n : oracle::names_for(ScoreKind::kBasicIntensity)) {
    raw.emplace_back(n, std::vector<double>{0.2, 0.3, 0.1});
  }
  const ScoreSet s = parse_scores(raw);
  EXPECT_EQ(s.kind(), ScoreKind::kBasicIntensity);
  EXPECT_EQ(s.triple(0).mild, 0.2);
  EXPECT_EQ(s.triple(0).medium, 0.3);
  EXPECT_EQ(s.triple(0).intense, 0.1);
  EXPECT_NEAR(s.score(0), 0.6, 1e-15);
}

TEST(ParseTest, DyadWheels) {
  RawScores raw;
  for (const auto& n : oracle::names_for(ScoreKind::kDyadOpposite)) raw.emplace_back(n, 0.5);
  EXPECT_EQ(parse_scores(raw).kind(), ScoreKind::kDyadOpposite);
  raw.clear();
  for (const auto& n : oracle::names_for(ScoreKind::kDyadSecondary)) raw.emplace_back(n, 0.5);
  EXPECT_EQ(parse_scores(raw).kind(), ScoreKind::kDyadSecondary);
}

TEST(ParseTest, Errors) {
  RawScores raw = basic({0, 0, 0, 0, 0, 0, 0, 0});
  raw.emplace_back("happiness", 0.0);
  EXPECT_EQ(parse_error(raw), ErrorCode::kUnknownKey);

  raw = basic({0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(parse_error(raw), ErrorCode::kWrongArity);

  raw = basic({0, 0, 0, 0, 0, 0, 0, 0});
  raw.emplace_back("JOY", 0.0);
  EXPECT_EQ(parse_error(raw), ErrorCode::kWrongArity);

  raw = {{"love", 0.5}, {"optimism", 0.5}, {"joy", 0.5}};
  EXPECT_EQ(parse_error(raw), ErrorCode::kMixedKinds);

  raw = basic({0, 0, 0, 0, 0, 0, 0, 1.5});
  EXPECT_EQ(parse_error(raw), ErrorCode::kOutOfRange);

  raw = basic({0, 0, 0, -0.01, 0, 0, 0, 0});
  EXPECT_EQ(parse_error(raw), ErrorCode::kOutOfRange);

  raw.clear();
  for (const auto& n : oracle::names_for(ScoreKind::kBasicIntensity)) {
    raw.emplace_back(n, std::vector<double>{0.2, 0.5, 0.4});
  }
  EXPECT_EQ(parse_error(raw), ErrorCode::kTripleOverflow);

  raw[2].second = std::vector<double>{0.2, 0.5};
  EXPECT_EQ(parse_error(raw), ErrorCode::kInvalidValue);

  raw = basic({0, 0, 0, 0, 0, 0, 0, 0});
  raw[4].second = std::vector<double>{0.1, 0.1, 0.1};
  EXPECT_EQ(parse_error(raw), ErrorCode::kMixedKinds);

  raw = {{"love", std::vector<double>{0.1, 0.1, 0.1}}};
  EXPECT_EQ(parse_error(raw), ErrorCode::kInvalidValue);

  EXPECT_EQ(parse_error({}), ErrorCode::kWrongArity);
}

TEST(ParseTest, MessagesNameTheOffendingKeys) {
  try {
    parse_scores({{"love", 0.5}, {"joy", 0.5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("love"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("joy"), std::string::npos);
  }
  try {
    parse_scores(basic({0, 0, 0, 0, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("anticipation"), std::string::npos);
  }
}

TEST(ParseTest, BoundaryToleranceClamps) {
  const ScoreSet s = parse_scores(basic({1 + 5e-10, -5e-10, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(s.score(0), 1.0);
  EXPECT_EQ(s.score(1), 0.0);
  EXPECT_EQ(parse_error(basic({1 + 1e-8, 0, 0, 0, 0, 0, 0, 0})), ErrorCode::kOutOfRange);
}

TEST(ParseTest, FillMissing) {
  const ScoreSet s = parse_scores({{"fear", 0.4}}, Completeness::kFillMissing);
  EXPECT_EQ(s.kind(), ScoreKind::kBasicScalar);
  EXPECT_EQ(s.score(2), 0.4);
  EXPECT_EQ(s.score(0), 0.0);
}

TEST(ParseTest, AgreesWithBruteForceOracle) {
  oracle::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const RawScores raw = oracle::random_mapping(rng);
    const oracle::Verdict want = oracle::classify(raw);
    try {
      const ScoreSet s = parse_scores(raw);
      EXPECT_FALSE(want.error.has_value()) << "case " << i;
      EXPECT_EQ(s.kind(), want.kind) << "case " << i;
    } catch (const Error& e) {
      ASSERT_TRUE(want.error.has_value()) << "case " << i << ": " << e.what();
      EXPECT_EQ(e.code(), *want.error) << "case " << i << ": " << e.what();
    }
  }
}

TEST(ScoreSetTest, FactoriesValidate) {
  EXPECT_THROW(ScoreSet::from_scalars(ScoreKind::kDyadOpposite, {0.1, 0.2}), Error);
  EXPECT_THROW(ScoreSet::from_scalars(ScoreKind::kBasicScalar, std::vector<double>(8, 2.0)), Error);
  EXPECT_THROW(ScoreSet::from_triples(std::vector<IntensityTriple>(8, {0.5, 0.5, 0.5})), Error);
  EXPECT_NO_THROW(ScoreSet::from_triples(std::vector<IntensityTriple>(8, {0.5, 0.25, 0.25})));
}

TEST(AggregateTest, TwoTextMean) {
  const std::vector<ScoreSet> texts = {parse_scores(basic({1, 0, 0, 0, 0, 0, 0, 0.5})),
                                       parse_scores(basic({0, 0, 1, 0, 0, 0, 0, 0.5}))};
  const ScoreSet m = aggregate_corpus(texts);
  EXPECT_EQ(m.score(0), 0.5);
  EXPECT_EQ(m.score(2), 0.5);
  EXPECT_EQ(m.score(7), 0.5);
  EXPECT_EQ(m.score(1), 0.0);
}

TEST(AggregateTest, IdenticalTextsAreAFixedPoint) {
  const ScoreSet s = parse_scores(basic({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}));
  const std::vector<ScoreSet> texts(17, s);
  const ScoreSet m = aggregate_corpus(texts);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(m.score(i), s.score(i), 1e-15);
}

TEST(AggregateTest, MatchesMeanOracleWithinConvexHull) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const bool triples = trial % 2 == 1;
    const std::size_t n = 1 + rng.index(300);
    std::vector<ScoreSet> texts;
    for (std::size_t t = 0; t < n; ++t) {
      if (triples) {
        std::vector<IntensityTriple> v;
        for (int k = 0; k < 8; ++k) {
          const double a = rng.unit() / 3, b = rng.unit() / 3, c = rng.unit() / 3;
          v.push_back({a, b, c});
        }
        texts.push_back(ScoreSet::from_triples(v));
      } else {
        std::vector<double> v;
        for (int k = 0; k < 8; ++k) v.push_back(rng.unit());
        texts.push_back(ScoreSet::from_scalars(ScoreKind::kBasicScalar, v));
      }
    }
    const ScoreSet m = aggregate_corpus(texts);
    const auto want = oracle::mean(texts);
    for (std::size_t i = 0; i < 8; ++i) {
      if (triples) {
        EXPECT_NEAR(m.triple(i).mild, want[i][0], 1e-12);
        EXPECT_NEAR(m.triple(i).medium, want[i][1], 1e-12);
        EXPECT_NEAR(m.triple(i).intense, want[i][2], 1e-12);
      } else {
        EXPECT_NEAR(m.score(i), want[i][0], 1e-12);
      }
      double lo = 1, hi = 0;
      for (const ScoreSet& t : texts) {
        lo = std::min(lo, t.score(i));
        hi = std::max(hi, t.score(i));
      }
      EXPECT_GE(m.score(i), lo - 1e-12);
      EXPECT_LE(m.score(i), hi + 1e-12);
    }
  }
}

TEST(AggregateTest, Errors) {
  try {
    aggregate_corpus({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
  const std::vector<ScoreSet> mixed = {
      parse_scores(basic({0, 0, 0, 0, 0, 0, 0, 0})),
      ScoreSet::from_scalars(ScoreKind::kDyadPrimary, std::vector<double>(8, 0.0))};
  try {
    aggregate_corpus(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHeterogeneousKinds);
  }
}

}  // namespace
}  // namespace plutchik
