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

#ifndef PGJK_AVERAGE_GAME_HPP
#define PGJK_AVERAGE_GAME_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "pgjk/game_core.hpp"
#include "pgjk/indices.hpp"
#include "pgjk/rational.hpp"

namespace pgjk {

struct AverageGameResult {
  TUGame tu;
  /// 1 / (j^n (k-1)).
  Rational scale;
  std::shared_ptr<const JKGame> source;
};

/// The average game
///   w(S) = 1/(j^n (k-1)) * sum_{x in J^n} [v((j-1)_S, x_{-S}) - v(0_S, x_{-S})].
/// The outer sum runs over the full J^n, so every x_{-S} is counted j^|S|
/// times. The work is (2j)^n lookups; that number is held against `cap`.
inline AverageGameResult average_game(const JKGame& v,
                                      std::uint64_t cap = kDefaultTableCap) {
  const int n = v.players();
  const int j = v.input_levels();
  detail::capped_pow(2 * static_cast<std::uint64_t>(j), n, cap);
  const Rational scale(1, boost::multiprecision::cpp_int(v.profile_count()) *
                              (v.output_levels() - 1));
  std::vector<Rational> worth(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < worth.size(); ++mask) {
    std::int64_t total = 0;
    Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
    std::uint64_t idx = 0;
    do {
      std::uint64_t hi = idx;
      std::uint64_t lo = idx;
      for (int pos = 0; pos < n; ++pos) {
        if (!(mask >> pos & 1u)) continue;
        hi += static_cast<std::uint64_t>(j - 1 - x[pos]) * v.stride(pos);
        lo -= static_cast<std::uint64_t>(x[pos]) * v.stride(pos);
      }
      total += v.at(hi) - v.at(lo);
      ++idx;
    } while (next_profile(x, j));
    worth[mask] = scale * total;
  }
  return {TUGame(detail::Unchecked{}, n, std::move(worth)), scale,
          std::make_shared<const JKGame>(v)};
}

struct PgvComparison {
  AverageGameResult average;
  IndexReport pgv_of_average;
  IndexReport jk_value;
  IndexReport variant;
  /// Normalized PGV of the average game equals the normalized
  /// public_good_value_jk. False whenever the comparison is degenerate.
  bool equal_after_normalization;
  /// One of the two value vectors is identically zero.
  bool degenerate;
};

inline PgvComparison compare_pgv_vs_jk(
    const JKGame& v, CoalitionFamily family = CoalitionFamily::mcc,
    std::uint64_t cap = kDefaultTableCap) {
  AverageGameResult average = average_game(v, cap);
  IndexReport pgv = pgv_tu(average.tu, family);
  IndexReport jk = public_good_value_jk(v);
  IndexReport variant = variant_value(v);

  auto is_zero = [](const IndexReport& r) {
    for (const auto& x : r.player_values) {
      if (x != 0) return false;
    }
    return true;
  };
  const bool degenerate = is_zero(pgv) || is_zero(jk);
  const bool equal = !degenerate && detail::normalize(pgv.player_values) ==
                                        detail::normalize(jk.player_values);
  return {std::move(average), std::move(pgv), std::move(jk), std::move(variant),
          equal, degenerate};
}

}  // namespace pgjk

#endif  // PGJK_AVERAGE_GAME_HPP
