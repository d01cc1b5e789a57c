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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "plutchik/emotion_model.hpp"
#include "plutchik/error.hpp"

namespace plutchik {
namespace {

// Scores flattened to one row of doubles per text: 8 or 4 scalars, or 24
// triple components in (mild, medium, intense) order.
std::size_t row_width(ScoreKind kind) {
  return kind == ScoreKind::kBasicIntensity ? 24 : slot_count(kind);
}

void check_corpus(std::span<const ScoreSet> texts) {
  if (texts.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus contains no texts");
  const ScoreKind kind = texts.front().kind();
  for (std::size_t i = 1; i < texts.size(); ++i) {
    if (texts[i].kind() != kind) {
      throw Error(ErrorCode::kHeterogeneousKinds,
                  "text " + std::to_string(i) + " is " + std::string(to_string(texts[i].kind())) +
                      " but text 0 is " + std::string(to_string(kind)));
    }
  }
}

void accumulate(const ScoreSet& s, double* row) {
  if (s.has_triples()) {
    const auto triples = s.triples();
    for (std::size_t j = 0; j < triples.size(); ++j) {
      row[3 * j] += triples[j].mild;
      row[3 * j + 1] += triples[j].medium;
      row[3 * j + 2] += triples[j].intense;
    }
  } else {
    const auto scalars = s.scalars();
    for (std::size_t j = 0; j < scalars.size(); ++j) row[j] += scalars[j];
  }
}

ScoreSet from_sums(ScoreKind kind, const std::vector<double>& sums, std::size_t n) {
  const double count = static_cast<double>(n);
  if (kind == ScoreKind::kBasicIntensity) {
    std::vector<IntensityTriple> triples(8);
    for (std::size_t j = 0; j < 8; ++j) {
      triples[j] = {sums[3 * j] / count, sums[3 * j + 1] / count, sums[3 * j + 2] / count};
    }
    return ScoreSet::from_triples(std::move(triples));
  }
  std::vector<double> means(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) means[j] = sums[j] / count;
  return ScoreSet::from_scalars(kind, std::move(means));
}

constexpr std::size_t kBlockSize = 256;

}  // namespace

namespace reference {

ScoreSet aggregate_corpus(std::span<const ScoreSet> texts) {
  check_corpus(texts);
  const ScoreKind kind = texts.front().kind();
  std::vector<double> sums(row_width(kind), 0.0);
  for (const ScoreSet& s : texts) accumulate(s, sums.data());
  return from_sums(kind, sums, texts.size());
}

}  // namespace reference

ScoreSet aggregate_corpus(std::span<const ScoreSet> texts) {
  check_corpus(texts);
  const ScoreKind kind = texts.front().kind();
  const std::size_t width = row_width(kind);
  const std::size_t n = texts.size();
  const std::size_t blocks = (n + kBlockSize - 1) / kBlockSize;

  // Block partitioning is independent of the thread count, and the partial
  // sums are combined serially in block order.
  std::vector<double> partial(blocks * width, 0.0);
  const long long block_count = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < block_count; ++b) {
    double* row = partial.data() + static_cast<std::size_t>(b) * width;
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t end = std::min(n, begin + kBlockSize);
    for (std::size_t i = begin; i < end; ++i) accumulate(texts[i], row);
  }

  std::vector<double> sums(width, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t j = 0; j < width; ++j) sums[j] += partial[b * width + j];
  }
  return from_sums(kind, sums, n);
}

}  // namespace plutchik
