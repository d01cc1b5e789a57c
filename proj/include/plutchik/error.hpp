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

#ifndef PLUTCHIK_ERROR_HPP_
#define PLUTCHIK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace plutchik {

// Every failure the library can report. The numeric values are the process
// exit codes used by the command line tool, so they must stay stable.
enum class ErrorCode : int {
  kUsage = 2,
  kIo = 3,
  kJson = 4,
  kUnknownKey = 5,
  kMixedKinds = 6,
  kWrongArity = 7,
  kOutOfRange = 8,
  kTripleOverflow = 9,
  kInvalidValue = 10,
  kEmptyCorpus = 11,
  kHeterogeneousKinds = 12,
  kUnknownGroupField = 13,
  kInvalidOptionCombination = 14,
  kNonPositiveRatio = 15,
  kInvalidOptions = 16,
  kGridOverflow = 17,
  kTitleMismatch = 18,
};

std::string_view to_string(ErrorCode code);

inline int exit_code(ErrorCode code) { return static_cast<int>(code); }

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plutchik

#endif  // PLUTCHIK_ERROR_HPP_
