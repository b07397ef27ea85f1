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
 * \file pgjk/critical_sets.hpp
 *
 * \brief Minimal winning / critical / real gaining coalitions and minimal
 *  critical vectors.
 *
 * All listings come back in table order (profile index, player 1 most
 * significant). The zero profile and the empty coalition are never listed.
 */

#ifndef PGJK_CRITICAL_SETS_HPP
#define PGJK_CRITICAL_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgjk/errors.hpp"
#include "pgjk/game_core.hpp"

namespace pgjk {

/// Oracle bound on j^n.
inline constexpr std::uint64_t kOracleCap = 19683;  // 3^9

struct CriticalVector {
  Profile profile;
  Level worth;
  std::uint64_t index;

  friend bool operator==(const CriticalVector&, const CriticalVector&) = default;
};

/// The minimal critical vectors of a game together with their worths,
/// sorted by table index.
class MCVSet {
 public:
  MCVSet() = default;
  explicit MCVSet(std::vector<CriticalVector> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const CriticalVector& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<Level> worth_of(const Profile& x) const {
    for (const auto& e : entries_) {
      if (e.profile == x) return e.worth;
    }
    return std::nullopt;
  }
  bool contains(const Profile& x) const { return worth_of(x).has_value(); }

  std::vector<Profile> profiles() const {
    std::vector<Profile> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.profile);
    return out;
  }

  friend bool operator==(const MCVSet&, const MCVSet&) = default;

 private:
  std::vector<CriticalVector> entries_;
};

// ---------------------------------------------------------------------------
// Coalition families

/// S winning with every proper subset losing.
inline std::vector<Coalition> minimal_winning_coalitions(const SimpleGame& v) {
  const int n = v.players();
  std::vector<Coalition> out;
  for (Coalition s : v.winning_coalitions()) {
    bool minimal = true;
    // Upward closure makes the one-player removals sufficient.
    for (int p : s.members()) {
      if (v.is_winning(s.without(p))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  sort_by_profile_index(out, n);
  return out;
}

/// Nonempty S with v(S) > v(S \ i) for every member i.
inline std::vector<Coalition> minimal_critical_coalitions(const TUGame& v) {
  const int n = v.players();
  std::vector<Coalition> out;
  const std::uint32_t size = static_cast<std::uint32_t>(v.worths().size());
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const Coalition s(mask);
    bool critical = true;
    for (int p : s.members()) {
      if (!(v.worth(s) > v.worth(s.without(p)))) {
        critical = false;
        break;
      }
    }
    if (critical) out.push_back(s);
  }
  sort_by_profile_index(out, n);
  return out;
}

/// Nonempty S with v(S) > v(T) for every proper subset T, the empty one
/// included.
inline std::vector<Coalition> real_gaining_coalitions(const TUGame& v) {
  const int n = v.players();
  std::vector<Coalition> out;
  const std::uint32_t size = static_cast<std::uint32_t>(v.worths().size());
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const Rational& top = v.worths()[mask];
    bool gaining = true;
    // Proper submasks, from mask-1 down to 0.
    std::uint32_t sub = mask;
    do {
      sub = (sub - 1) & mask;
      if (!(top > v.worths()[sub])) {
        gaining = false;
        break;
      }
    } while (sub != 0);
    if (gaining) out.push_back(Coalition(mask));
  }
  sort_by_profile_index(out, n);
  return out;
}

// ---------------------------------------------------------------------------
// Minimal critical vectors

/// Fast path: x is minimal critical iff v(x) > 0 and v(x) > v(x down i) for
/// every i with x_i != 0. Monotonicity makes the immediate predecessors
/// sufficient.
inline MCVSet minimal_critical_vectors(const JKGame& v) {
  const int n = v.players();
  const int j = v.input_levels();
  std::vector<CriticalVector> out;
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  std::uint64_t idx = 0;
  do {
    const Level value = v.at(idx);
    if (value > 0) {
      bool critical = true;
      for (int pos = 0; pos < n; ++pos) {
        if (x[pos] != 0 && v.at(idx - v.stride(pos)) >= value) {
          critical = false;
          break;
        }
      }
      if (critical) out.push_back({x, value, idx});
    }
    ++idx;
  } while (next_profile(x, j));
  return MCVSet(std::move(out));
}

/// Definitional check against the whole down-set of every profile.
/// Independent of the fast path; limited to j^n <= kOracleCap.
inline MCVSet minimal_critical_vectors_oracle(const JKGame& v) {
  if (v.profile_count() > kOracleCap) {
    throw GameError(Errc::OracleCapExceeded,
                    std::to_string(v.profile_count()) + " profiles exceed " +
                        std::to_string(kOracleCap));
  }
  const int n = v.players();
  const int j = v.input_levels();
  std::vector<CriticalVector> out;
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  while (next_profile(x, j)) {
    const Level value = v(x);
    bool critical = true;
    // Enumerate every y <= x with y != x as an odometer bounded by x.
    Profile y(std::vector<Level>(static_cast<std::size_t>(n), 0));
    for (;;) {
      if (y != x && !(value > v(y))) {
        critical = false;
        break;
      }
      std::size_t pos = y.size();
      while (pos-- > 0) {
        if (y[pos] < x[pos]) {
          ++y[pos];
          break;
        }
        y[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
    if (critical) out.push_back({x, value, v.index_of(x)});
  }
  return MCVSet(std::move(out));
}

/// Whether the minimal critical vector x is critical for `player` (1-based)
/// at output level tau: v(x) >= tau and v(x down i) < tau.
inline bool is_critical_for(const JKGame& v, const Profile& x, int player,
                            Level tau) {
  evaluate(v, x);
  detail::check_player(player, v.players());
  if (tau < 1 || tau >= v.output_levels()) {
    throw GameError(Errc::LevelOutOfRange,
                    "tau = " + std::to_string(tau) + " outside [1," +
                        std::to_string(v.output_levels() - 1) + "]");
  }
  const Level value = v(x);
  bool critical = value > 0;
  for (std::size_t pos = 0; pos < x.size() && critical; ++pos) {
    if (x[pos] != 0 && v(x.down(pos)) >= value) critical = false;
  }
  if (!critical) {
    throw GameError(Errc::NotMinimalCritical,
                    to_string(x) + " is not a minimal critical vector");
  }
  const std::size_t pos = static_cast<std::size_t>(player - 1);
  if (x[pos] == 0) {
    throw GameError(Errc::ZeroLevelPlayer,
                    "player " + std::to_string(player) + " has level 0 in " +
                        to_string(x));
  }
  return value >= tau && v(x.down(pos)) < tau;
}

}  // namespace pgjk

#endif  // PGJK_CRITICAL_SETS_HPP
