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
 * \file pgjk/algebra.hpp
 *
 * \brief Composition of (j,k) simple games, mergeability, relabeling, null
 *  players and the executable axiom checks for the normalized variant value.
 */

#ifndef PGJK_ALGEBRA_HPP
#define PGJK_ALGEBRA_HPP

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgjk/critical_sets.hpp"
#include "pgjk/errors.hpp"
#include "pgjk/game_core.hpp"
#include "pgjk/indices.hpp"

namespace pgjk {

namespace detail {

inline void check_same_shape(const JKGame& v, const JKGame& w) {
  if (!v.same_shape(w)) {
    auto shape = [](const JKGame& g) {
      return "n=" + std::to_string(g.players()) +
             ",j=" + std::to_string(g.input_levels()) +
             ",k=" + std::to_string(g.output_levels());
    };
    throw GameError(Errc::DimensionMismatch, shape(v) + " vs " + shape(w));
  }
}

}  // namespace detail

/// Pointwise maximum.
inline JKGame oplus(const JKGame& v, const JKGame& w) {
  detail::check_same_shape(v, w);
  std::vector<Level> table(v.table().begin(), v.table().end());
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    table[idx] = std::max(table[idx], w.at(idx));
  }
  return JKGame(detail::Unchecked{}, v.players(), v.input_levels(),
                v.output_levels(), std::move(table), v.labels());
}

/// Left fold of oplus; requires at least one game.
inline JKGame oplus_all(std::span<const JKGame> games) {
  JKGame acc = games.front();
  for (std::size_t h = 1; h < games.size(); ++h) acc = oplus(acc, games[h]);
  return acc;
}

// ---------------------------------------------------------------------------
// Mergeability

enum class MergeClause { C1_shared_mcv, C2_le_not_less, C3_ge_not_greater };

inline std::string_view to_string(MergeClause clause) {
  switch (clause) {
    case MergeClause::C1_shared_mcv: return "C1_shared_mcv";
    case MergeClause::C2_le_not_less: return "C2_le_not_less";
    case MergeClause::C3_ge_not_greater: return "C3_ge_not_greater";
  }
  return "unknown";
}

struct MergeViolation {
  Profile x;        ///< from MCV(v)
  Profile x_prime;  ///< from MCV(w)
  MergeClause clause;
};

struct MergeReport {
  bool mergeable = true;
  std::vector<MergeViolation> violations;
};

/// Checks every pair of minimal critical vectors against
///  (1) no shared vector,
///  (2) x <= x' implies v(x) < w(x'),
///  (3) x >= x' implies v(x) > w(x').
/// Violations are listed in (x, x', clause) order, none short-circuited.
inline MergeReport is_mergeable(const JKGame& v, const JKGame& w) {
  detail::check_same_shape(v, w);
  const MCVSet mv = minimal_critical_vectors(v);
  const MCVSet mw = minimal_critical_vectors(w);
  MergeReport report;
  for (const auto& a : mv) {
    for (const auto& b : mw) {
      if (a.profile == b.profile) {
        report.violations.push_back({a.profile, b.profile,
                                     MergeClause::C1_shared_mcv});
      }
      if (componentwise_le(a.profile, b.profile) && !(a.worth < b.worth)) {
        report.violations.push_back({a.profile, b.profile,
                                     MergeClause::C2_le_not_less});
      }
      if (componentwise_le(b.profile, a.profile) && !(a.worth > b.worth)) {
        report.violations.push_back({a.profile, b.profile,
                                     MergeClause::C3_ge_not_greater});
      }
    }
  }
  report.mergeable = report.violations.empty();
  return report;
}

/// For a mergeable pair, verifies MCV(v oplus w) = MCV(v) disjoint-union
/// MCV(w). Throws NotMergeable otherwise.
inline bool mcv_union_check(const JKGame& v, const JKGame& w) {
  if (!is_mergeable(v, w).mergeable) {
    throw GameError(Errc::NotMergeable, "the games are not mergeable");
  }
  const MCVSet mv = minimal_critical_vectors(v);
  const MCVSet mw = minimal_critical_vectors(w);
  const MCVSet merged = minimal_critical_vectors(oplus(v, w));
  std::vector<CriticalVector> united(mv.begin(), mv.end());
  united.insert(united.end(), mw.begin(), mw.end());
  const MCVSet expected(std::move(united));
  for (std::size_t i = 1; i < expected.size(); ++i) {
    if (expected[i - 1].index == expected[i].index) return false;
  }
  return merged == expected;
}

// ---------------------------------------------------------------------------
// Relabeling and null players

/// (pi v)(x) = v(x') with x'_i = x_{pi(i)}. `pi[i-1]` holds pi(i), 1-based.
inline JKGame permute(const JKGame& v, std::span<const int> pi) {
  const int n = v.players();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  bool ok = pi.size() == static_cast<std::size_t>(n);
  for (std::size_t i = 0; ok && i < pi.size(); ++i) {
    ok = pi[i] >= 1 && pi[i] <= n && !hit[pi[i] - 1];
    if (ok) hit[pi[i] - 1] = true;
  }
  if (!ok) {
    std::string listing;
    for (int p : pi) listing += (listing.empty() ? "" : ",") + std::to_string(p);
    throw GameError(Errc::NotAPermutation,
                    "(" + listing + ") is not a permutation of {1.." +
                        std::to_string(n) + "}");
  }
  std::vector<Level> table;
  table.reserve(v.profile_count());
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  Profile source = x;
  do {
    for (int i = 0; i < n; ++i) source[i] = x[pi[i] - 1];
    table.push_back(v(source));
  } while (next_profile(x, v.input_levels()));
  return JKGame(detail::Unchecked{}, n, v.input_levels(), v.output_levels(),
                std::move(table));
}

inline JKGame permute(const JKGame& v, std::initializer_list<int> pi) {
  return permute(v, std::span<const int>(pi.begin(), pi.size()));
}

/// The level of `player` never changes the output.
inline bool is_null_player(const JKGame& v, int player) {
  detail::check_player(player, v.players());
  const int pos = player - 1;
  const std::uint64_t step = v.stride(pos);
  Profile x(std::vector<Level>(static_cast<std::size_t>(v.players()), 0));
  std::uint64_t idx = 0;
  do {
    if (x[pos] + 1 < v.input_levels() && v.at(idx) != v.at(idx + step)) {
      return false;
    }
    ++idx;
  } while (next_profile(x, v.input_levels()));
  return true;
}

// ---------------------------------------------------------------------------
// Single-vector components

/// v^h(y) = worth if y >= x, else 0: the smallest game whose only minimal
/// critical vector is x, at the given worth.
inline JKGame single_mcv_game(int n, int j, int k, const Profile& x,
                              Level worth) {
  return make_table_game(n, j, k, [&](const Profile& y) {
    return componentwise_le(x, y) ? worth : 0;
  });
}

/// One single-vector component per minimal critical vector, in table order.
inline std::vector<JKGame> decompose(const JKGame& v) {
  std::vector<JKGame> parts;
  for (const auto& e : minimal_critical_vectors(v)) {
    parts.push_back(single_mcv_game(v.players(), v.input_levels(),
                                    v.output_levels(), e.profile, e.worth));
  }
  return parts;
}

/// Rebuilds a table from its minimal critical vectors: v(y) is the largest
/// worth among listed vectors below y.
inline JKGame reconstruct(const MCVSet& mcv, int n, int j, int k) {
  return make_table_game(n, j, k, [&](const Profile& y) {
    Level best = 0;
    for (const auto& e : mcv) {
      if (componentwise_le(e.profile, y)) best = std::max(best, e.worth);
    }
    return best;
  });
}

// ---------------------------------------------------------------------------
// Axioms for the normalized variant value

enum class AxiomStatus { passed, failed, vacuous, not_requested };

inline std::string_view to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::passed: return "pass";
    case AxiomStatus::failed: return "FAIL";
    case AxiomStatus::vacuous: return "vacuous";
    case AxiomStatus::not_requested: return "not requested";
  }
  return "unknown";
}

struct AxiomVerdict {
  std::string axiom;  ///< "A1".."A4"
  AxiomStatus status;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_passed() const {
    return std::none_of(verdicts.begin(), verdicts.end(), [](const auto& a) {
      return a.status == AxiomStatus::failed;
    });
  }
};

namespace detail {

inline AxiomReport single_game_axioms(const JKGame& v,
                                      const IndexReport& normalized) {
  const auto& psi = normalized.player_values;
  const int n = v.players();
  AxiomReport report;

  // A1: null players get nothing.
  {
    AxiomVerdict a{"A1", AxiomStatus::vacuous, "no null players"};
    std::string nulls;
    for (int p = 1; p <= n; ++p) {
      if (!is_null_player(v, p)) continue;
      nulls += (nulls.empty() ? "" : ",") + std::to_string(p);
      if (a.status != AxiomStatus::failed) a.status = AxiomStatus::passed;
      if (psi[p - 1] != 0) {
        a.status = AxiomStatus::failed;
        a.detail = "null player " + std::to_string(p) + " gets " +
                   to_string(psi[p - 1]);
      }
    }
    if (a.status == AxiomStatus::passed) a.detail = "null players {" + nulls + "} get 0";
    report.verdicts.push_back(std::move(a));
  }

  // A2: efficiency.
  {
    Rational total = 0;
    for (const auto& r : psi) total += r;
    report.verdicts.push_back(
        {"A2", total == 1 ? AxiomStatus::passed : AxiomStatus::failed,
         "sum = " + to_string(total)});
  }

  // A3: equal shares when there is a single minimal critical vector.
  {
    const auto& mcv = std::get<MCVSet>(normalized.listing);
    AxiomVerdict a{"A3", AxiomStatus::vacuous,
                   std::to_string(mcv.size()) + " minimal critical vectors"};
    if (mcv.size() == 1) {
      const Profile& x = mcv[0].profile;
      const Rational share(1, x.support_size());
      a.status = AxiomStatus::passed;
      a.detail = "support of " + to_string(x) + " shares " + to_string(share);
      for (int pos = 0; pos < n; ++pos) {
        if (x[pos] != 0 && psi[pos] != share) {
          a.status = AxiomStatus::failed;
          a.detail = "player " + std::to_string(pos + 1) + " gets " +
                     to_string(psi[pos]) + ", expected " + to_string(share);
        }
      }
    }
    report.verdicts.push_back(std::move(a));
  }
  return report;
}

}  // namespace detail

/// A1-A3 on v; A4 is reported as not requested.
inline AxiomReport axiom_report(const JKGame& v) {
  AxiomReport report = detail::single_game_axioms(v, normalized_variant(v));
  report.verdicts.push_back(
      {"A4", AxiomStatus::not_requested, "needs a second game"});
  return report;
}

/// A1-A3 on v plus A4 on the mergeable pair (v, w):
///   psi(v + w) = (c(v) psi(v) + c(w) psi(w)) / (c(v) + c(w)).
inline AxiomReport axiom_report(const JKGame& v, const JKGame& w) {
  const IndexReport nv = normalized_variant(v);
  const IndexReport nw = normalized_variant(w);
  if (!is_mergeable(v, w).mergeable) {
    throw GameError(Errc::NotMergeable, "A4 needs a mergeable pair");
  }
  AxiomReport report = detail::single_game_axioms(v, nv);
  const IndexReport merged = normalized_variant(oplus(v, w));
  const Rational cv = total_criticality(v);
  const Rational cw = total_criticality(w);
  AxiomVerdict a{"A4", AxiomStatus::passed,
                 "c(v) = " + to_string(cv) + ", c(w) = " + to_string(cw)};
  for (int p = 0; p < v.players(); ++p) {
    const Rational expected =
        (cv * nv.player_values[p] + cw * nw.player_values[p]) / (cv + cw);
    if (merged.player_values[p] != expected) {
      a.status = AxiomStatus::failed;
      a.detail = "player " + std::to_string(p + 1) + ": " +
                 to_string(merged.player_values[p]) + " != " +
                 to_string(expected);
      break;
    }
  }
  report.verdicts.push_back(std::move(a));
  return report;
}

}  // namespace pgjk

#endif  // PGJK_ALGEBRA_HPP
