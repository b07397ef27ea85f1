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

/**
 * \file pgjk/indices.hpp
 *
 * \brief Public Good index and value computations and their potentials.
 *
 * For (j,k) simple games two values are offered:
 *  - public_good_value_jk: player i collects v(x) from every minimal critical
 *    vector x with x_i != 0. It admits the potential P(v) = sum of v(x) over
 *    all minimal critical vectors, and sums to lambda_total(v).
 *  - variant_value: player i collects only the surplus v(x) - v(x down i),
 *    which equals the number of (x, tau) pairs for which i is critical.
 *
 * Everything is exact; no floating point is involved.
 */

#ifndef PGJK_INDICES_HPP
#define PGJK_INDICES_HPP

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "pgjk/critical_sets.hpp"
#include "pgjk/errors.hpp"
#include "pgjk/game_core.hpp"
#include "pgjk/rational.hpp"

namespace pgjk {

enum class ValueKind {
  potential_value,
  surplus_variant,
  normalized_variant,
  raw_pgi,
  normalized_pgi,
  tu_pgv,
};

inline std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::potential_value: return "potential_value";
    case ValueKind::surplus_variant: return "surplus_variant";
    case ValueKind::normalized_variant: return "normalized_variant";
    case ValueKind::raw_pgi: return "raw_pgi";
    case ValueKind::normalized_pgi: return "normalized_pgi";
    case ValueKind::tu_pgv: return "tu_pgv";
  }
  return "unknown";
}

/// Which coalitions a TU Public Good value sums over.
enum class CoalitionFamily { mcc, rgc };

inline std::string_view to_string(CoalitionFamily family) {
  return family == CoalitionFamily::mcc ? "mcc" : "rgc";
}

/// Minimal critical vectors for (j,k) games, coalitions otherwise.
using CriticalListing = std::variant<MCVSet, std::vector<Coalition>>;

struct IndexReport {
  ValueKind kind;
  std::vector<Rational> player_values;
  Rational potential;
  /// Sum over the listing of worth times support size.
  Rational lambda_total;
  CriticalListing listing;
  /// Player labels, parallel to player_values.
  std::vector<int> labels;
};

inline constexpr int kRecursionMaxPlayers = 20;

namespace detail {

inline std::vector<int> default_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) labels[p] = p + 1;
  return labels;
}

inline std::vector<Rational> normalize(const std::vector<Rational>& raw) {
  Rational total = 0;
  for (const auto& r : raw) total += r;
  if (total == 0) {
    throw GameError(Errc::TrivialGame,
                    "normalization is undefined when every value is zero");
  }
  std::vector<Rational> out;
  out.reserve(raw.size());
  for (const auto& r : raw) out.push_back(r / total);
  return out;
}

inline IndexReport coalition_report(ValueKind kind, int n,
                                    std::vector<Coalition> sets,
                                    const auto& worth_of) {
  IndexReport report{kind, std::vector<Rational>(static_cast<std::size_t>(n)),
                     0, 0, {}, default_labels(n)};
  for (Coalition s : sets) {
    const Rational w = worth_of(s);
    report.potential += w;
    report.lambda_total += w * s.size();
    for (int p : s.members()) report.player_values[p - 1] += w;
  }
  report.listing = std::move(sets);
  return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Simple games

/// PGI_i = number of minimal winning coalitions containing i.
inline IndexReport pgi_raw(const SimpleGame& v) {
  return detail::coalition_report(ValueKind::raw_pgi, v.players(),
                                  minimal_winning_coalitions(v),
                                  [](Coalition) { return Rational(1); });
}

/// PGI normalized to sum to 1. Throws TrivialGame without winning coalitions.
inline IndexReport pgi_normalized(const SimpleGame& v) {
  IndexReport report = pgi_raw(v);
  report.kind = ValueKind::normalized_pgi;
  report.player_values = detail::normalize(report.player_values);
  return report;
}

// ---------------------------------------------------------------------------
// TU games

/// PGV_i = sum of v(S) over S in the chosen family with i in S.
inline IndexReport pgv_tu(const TUGame& v,
                          CoalitionFamily family = CoalitionFamily::mcc) {
  auto sets = family == CoalitionFamily::mcc ? minimal_critical_coalitions(v)
                                             : real_gaining_coalitions(v);
  return detail::coalition_report(ValueKind::tu_pgv, v.players(),
                                  std::move(sets),
                                  [&v](Coalition s) { return v.worth(s); });
}

/// P(v) = sum of v(S) over the minimal critical coalitions.
inline Rational tu_potential(const TUGame& v) {
  Rational total = 0;
  for (Coalition s : minimal_critical_coalitions(v)) total += v.worth(s);
  return total;
}

// ---------------------------------------------------------------------------
// (j,k) simple games

/// P(v) = sum of v(x) over the minimal critical vectors.
inline Rational jk_potential(const JKGame& v) {
  Rational total = 0;
  for (const auto& e : minimal_critical_vectors(v)) total += e.worth;
  return total;
}

/// Lambda(v) = sum over minimal critical vectors of v(x) * |support(x)|.
inline Rational lambda_total(const JKGame& v) {
  Rational total = 0;
  for (const auto& e : minimal_critical_vectors(v)) {
    total += Rational(e.worth) * e.profile.support_size();
  }
  return total;
}

inline IndexReport public_good_value_jk(const JKGame& v) {
  const int n = v.players();
  MCVSet mcv = minimal_critical_vectors(v);
  IndexReport report{ValueKind::potential_value,
                     std::vector<Rational>(static_cast<std::size_t>(n)),
                     0, 0, {}, v.labels()};
  for (const auto& e : mcv) {
    report.potential += e.worth;
    report.lambda_total += Rational(e.worth) * e.profile.support_size();
    for (int pos = 0; pos < n; ++pos) {
      if (e.profile[pos] != 0) report.player_values[pos] += e.worth;
    }
  }
  report.listing = std::move(mcv);
  return report;
}

/// The potential rebuilt from the recursion
///   P(v_S) = (Lambda(v_S) + sum_{i in S} P(v_{S \ i})) / |S|,  P(v_empty) = 0,
/// memoized over all 2^n subgames. Each Lambda(v_S) is computed on the
/// materialized subgame, so this path shares nothing with jk_potential
/// beyond the minimal critical vector enumeration.
inline Rational jk_potential_recursive(const JKGame& v) {
  const int n = v.players();
  if (n > kRecursionMaxPlayers) {
    throw GameError(Errc::RecursionCapExceeded,
                    std::to_string(n) + " players exceed " +
                        std::to_string(kRecursionMaxPlayers));
  }
  std::vector<Rational> memo(std::size_t{1} << n);
  // Every proper subset of a mask is numerically smaller.
  for (std::uint32_t mask = 1; mask < memo.size(); ++mask) {
    const Coalition s(mask);
    Rational acc = lambda_total(subgame(v, s));
    for (int p : s.members()) acc += memo[s.without(p).mask()];
    memo[mask] = acc / s.size();
  }
  return memo.back();
}

/// Psi_i = sum over minimal critical x with x_i != 0 of v(x) - v(x down i).
inline IndexReport variant_value(const JKGame& v) {
  const int n = v.players();
  MCVSet mcv = minimal_critical_vectors(v);
  IndexReport report{ValueKind::surplus_variant,
                     std::vector<Rational>(static_cast<std::size_t>(n)),
                     0, 0, {}, v.labels()};
  for (const auto& e : mcv) {
    report.potential += e.worth;
    report.lambda_total += Rational(e.worth) * e.profile.support_size();
    for (int pos = 0; pos < n; ++pos) {
      if (e.profile[pos] != 0) {
        report.player_values[pos] += e.worth - v.at(e.index - v.stride(pos));
      }
    }
  }
  report.listing = std::move(mcv);
  return report;
}

/// c_i(v): number of pairs (x, tau) with x minimal critical, x_i != 0 and
/// x critical for player i at level tau. Counted level by level.
inline std::int64_t criticality_count(const JKGame& v, int player) {
  detail::check_player(player, v.players());
  std::int64_t count = 0;
  for (const auto& e : minimal_critical_vectors(v)) {
    if (e.profile[player - 1] == 0) continue;
    for (Level tau = 1; tau < v.output_levels(); ++tau) {
      if (is_critical_for(v, e.profile, player, tau)) ++count;
    }
  }
  return count;
}

/// c(v) = sum over players of c_i(v).
inline std::int64_t total_criticality(const JKGame& v) {
  std::int64_t total = 0;
  for (int p = 1; p <= v.players(); ++p) total += criticality_count(v, p);
  return total;
}

/// variant_value normalized to sum to 1. Throws TrivialGame on v == 0.
inline IndexReport normalized_variant(const JKGame& v) {
  IndexReport report = variant_value(v);
  if (std::get<MCVSet>(report.listing).empty()) {
    throw GameError(Errc::TrivialGame, "the game is identically zero");
  }
  report.kind = ValueKind::normalized_variant;
  report.player_values = detail::normalize(report.player_values);
  return report;
}

}  // namespace pgjk

#endif  // PGJK_INDICES_HPP
