// Copyright 2026 The pgjk Authors
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

#ifndef PGJK_ERRORS_HPP
#define PGJK_ERRORS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgjk {

/// Every domain failure the library can report.
enum class Errc {
  NonZeroAtOrigin,
  OutOfRangeOutput,
  MonotonicityViolation,
  IncompleteTable,
  ArityMismatch,
  CapExceeded,
  NonIncreasingThresholds,
  NegativeWeightNonMonotone,
  ProfileDimensionMismatch,
  LevelOutOfRange,
  NotBinaryGame,
  NotTwoLevelInput,
  UnknownPlayer,
  NonZeroEmptyCoalition,
  IncompleteWorthTable,
  OracleCapExceeded,
  NotMinimalCritical,
  ZeroLevelPlayer,
  TrivialGame,
  RecursionCapExceeded,
  DimensionMismatch,
  NotAPermutation,
  NotMergeable,
  ParseError,
  UnsupportedGameKind,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonZeroAtOrigin: return "NonZeroAtOrigin";
    case Errc::OutOfRangeOutput: return "OutOfRangeOutput";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NonIncreasingThresholds: return "NonIncreasingThresholds";
    case Errc::NegativeWeightNonMonotone: return "NegativeWeightNonMonotone";
    case Errc::ProfileDimensionMismatch: return "ProfileDimensionMismatch";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::NotBinaryGame: return "NotBinaryGame";
    case Errc::NotTwoLevelInput: return "NotTwoLevelInput";
    case Errc::UnknownPlayer: return "UnknownPlayer";
    case Errc::NonZeroEmptyCoalition: return "NonZeroEmptyCoalition";
    case Errc::IncompleteWorthTable: return "IncompleteWorthTable";
    case Errc::OracleCapExceeded: return "OracleCapExceeded";
    case Errc::NotMinimalCritical: return "NotMinimalCritical";
    case Errc::ZeroLevelPlayer: return "ZeroLevelPlayer";
    case Errc::TrivialGame: return "TrivialGame";
    case Errc::RecursionCapExceeded: return "RecursionCapExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotMergeable: return "NotMergeable";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedGameKind: return "UnsupportedGameKind";
  }
  return "Unknown";
}

/// Maximum number of witnesses carried by a GameError; the rest are counted.
inline constexpr std::size_t kMaxReportedWitnesses = 10;

class GameError : public std::runtime_error {
 public:
  GameError(Errc code, std::string detail)
      : GameError(code, std::move(detail), {}) {}

  // `witnesses` may be longer than kMaxReportedWitnesses; only the first ones
  // are kept and the total is remembered.
  GameError(Errc code, std::string detail, std::vector<std::string> witnesses)
      : std::runtime_error(format(code, detail, witnesses)),
        code_(code),
        total_witnesses_(witnesses.size()) {
    if (witnesses.size() > kMaxReportedWitnesses) {
      witnesses.resize(kMaxReportedWitnesses);
    }
    witnesses_ = std::move(witnesses);
  }

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& witnesses() const noexcept {
    return witnesses_;
  }
  std::size_t witness_count() const noexcept { return total_witnesses_; }

 private:
  static std::string format(Errc code, const std::string& detail,
                            const std::vector<std::string>& witnesses) {
    std::string msg(to_string(code));
    if (!detail.empty()) msg += ": " + detail;
    const std::size_t shown = std::min(witnesses.size(), kMaxReportedWitnesses);
    for (std::size_t i = 0; i < shown; ++i) {
      msg += (i == 0 ? " [" : "; ") + witnesses[i];
    }
    if (witnesses.size() > shown) {
      msg += "; and " + std::to_string(witnesses.size() - shown) + " more";
    }
    if (shown > 0) msg += "]";
    return msg;
  }

  Errc code_;
  std::vector<std::string> witnesses_;
  std::size_t total_witnesses_;
};

}  // namespace pgjk

#endif  // PGJK_ERRORS_HPP
