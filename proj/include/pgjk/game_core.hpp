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
 * \file pgjk/game_core.hpp
 *
 * \brief Game representations: (j,k) simple games, simple games and TU games.
 *
 * A (j,k) simple game is stored as an explicit table over all j^n input
 * profiles. Profile x = (x_1, ..., x_n) lives at index sum_i x_i * j^(n-i),
 * so player 1 is the most significant digit and the natural lexicographic
 * order of profiles coincides with table order.
 *
 * Players are numbered 1..n in every public entry point that takes a player.
 * Coalitions are bit masks where bit (i-1) stands for player i.
 */

#ifndef PGJK_GAME_CORE_HPP
#define PGJK_GAME_CORE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgjk/errors.hpp"
#include "pgjk/rational.hpp"

namespace pgjk {

using Level = std::int32_t;

/// Default bound on j^n (and on 2^n for coalition tables).
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

/// Coalitions are 32-bit masks.
inline constexpr int kMaxPlayers = 30;

// ---------------------------------------------------------------------------
// Profile

/// An input profile x in J^n. Comparison operators are lexicographic, which
/// is the table order; use componentwise_le for the game-theoretic order.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Level> levels) : levels_(std::move(levels)) {}
  Profile(std::initializer_list<Level> levels) : levels_(levels) {}

  std::size_t size() const noexcept { return levels_.size(); }
  Level operator[](std::size_t pos) const { return levels_[pos]; }
  Level& operator[](std::size_t pos) { return levels_[pos]; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// Number of positions with a nonzero level.
  int support_size() const {
    return static_cast<int>(
        std::count_if(levels_.begin(), levels_.end(),
                      [](Level l) { return l != 0; }));
  }
  bool is_zero() const { return support_size() == 0; }

  /// x with position `pos` (0-based) decremented; requires x[pos] > 0.
  Profile down(std::size_t pos) const {
    Profile y = *this;
    --y.levels_[pos];
    return y;
  }
  /// x with position `pos` (0-based) incremented.
  Profile up(std::size_t pos) const {
    Profile y = *this;
    ++y.levels_[pos];
    return y;
  }

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<Level> levels_;
};

inline bool componentwise_le(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::string to_string(const Profile& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

/// Advances x to the next profile in table order. Returns false after the
/// last profile (x is then reset to zero).
inline bool next_profile(Profile& x, int j) {
  for (std::size_t pos = x.size(); pos-- > 0;) {
    if (x[pos] + 1 < j) {
      ++x[pos];
      return true;
    }
    x[pos] = 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Coalition

class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  /// From 1-based player numbers.
  static Coalition of(std::initializer_list<int> players) {
    return of(std::span<const int>(players.begin(), players.size()));
  }
  static Coalition of(std::span<const int> players) {
    std::uint32_t mask = 0;
    for (int p : players) {
      if (p < 1 || p > kMaxPlayers) {
        throw GameError(Errc::UnknownPlayer,
                        "player " + std::to_string(p) + " is not representable");
      }
      mask |= std::uint32_t{1} << (p - 1);
    }
    return Coalition(mask);
  }
  static constexpr Coalition grand(int n) {
    return Coalition(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(int player) const noexcept {
    return player >= 1 && player <= 32 && ((mask_ >> (player - 1)) & 1u);
  }
  constexpr bool is_subset_of(Coalition other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr Coalition with(int player) const noexcept {
    return Coalition(mask_ | (std::uint32_t{1} << (player - 1)));
  }
  constexpr Coalition without(int player) const noexcept {
    return Coalition(mask_ & ~(std::uint32_t{1} << (player - 1)));
  }
  /// 1-based members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int p = 1; p <= 32; ++p) {
      if (contains(p)) out.push_back(p);
    }
    return out;
  }

  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint32_t mask_ = 0;
};

inline std::string to_string(Coalition s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

/// Index of the 0/1 profile x^S in a (2,.) table with n players.
inline std::uint64_t profile_index(Coalition s, int n) {
  std::uint64_t idx = 0;
  for (int p = 1; p <= n; ++p) {
    idx = (idx << 1) | (s.contains(p) ? 1u : 0u);
  }
  return idx;
}

inline Coalition coalition_at_profile_index(std::uint64_t idx, int n) {
  std::uint32_t mask = 0;
  for (int p = n; p >= 1; --p, idx >>= 1) {
    if (idx & 1u) mask |= std::uint32_t{1} << (p - 1);
  }
  return Coalition(mask);
}

/// Sorts coalitions by the table index of their 0/1 profiles.
inline void sort_by_profile_index(std::vector<Coalition>& sets, int n) {
  std::sort(sets.begin(), sets.end(), [n](Coalition a, Coalition b) {
    return profile_index(a, n) < profile_index(b, n);
  });
}

/// x^S: level 1 for members of S, 0 otherwise.
inline Profile profile_of(Coalition s, int n) {
  std::vector<Level> levels(static_cast<std::size_t>(n), 0);
  for (int p = 1; p <= n; ++p) levels[p - 1] = s.contains(p) ? 1 : 0;
  return Profile(std::move(levels));
}

/// Players with a nonzero level.
inline Coalition support_of(const Profile& x) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) mask |= std::uint32_t{1} << i;
  }
  return Coalition(mask);
}

namespace detail {

struct Unchecked {};

inline void check_arity(int n, int j, int k) {
  if (n < 0 || n > kMaxPlayers) {
    throw GameError(Errc::ArityMismatch,
                    "player count " + std::to_string(n) + " outside [0," +
                        std::to_string(kMaxPlayers) + "]");
  }
  if (j < 2 || k < 2) {
    throw GameError(Errc::ArityMismatch, "need j >= 2 and k >= 2, got j=" +
                                             std::to_string(j) +
                                             ", k=" + std::to_string(k));
  }
}

/// base^exp, throwing CapExceeded when the result exceeds `cap`.
inline std::uint64_t capped_pow(std::uint64_t base, int exp, std::uint64_t cap,
                                Errc on_overflow = Errc::CapExceeded) {
  std::uint64_t r = 1;
  for (int e = 0; e < exp; ++e) {
    if (r > cap / base) {
      throw GameError(on_overflow,
                      std::to_string(base) + "^" + std::to_string(exp) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    }
    r *= base;
  }
  return r;
}

inline void check_player(int player, int n) {
  if (player < 1 || player > n) {
    throw GameError(Errc::UnknownPlayer, "player " + std::to_string(player) +
                                             " not in {1.." +
                                             std::to_string(n) + "}");
  }
}

inline void check_coalition(Coalition s, int n) {
  if (!s.is_subset_of(Coalition::grand(n))) {
    throw GameError(Errc::UnknownPlayer,
                    "coalition " + to_string(s) + " is not a subset of {1.." +
                        std::to_string(n) + "}");
  }
}

/// All pairs (x, x up i) with table(x) > table(x up i), as witnesses.
inline std::vector<std::string> monotonicity_witnesses(
    int n, int j, std::span<const Level> table) {
  std::vector<std::string> out;
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n), 1);
  for (int pos = n - 2; pos >= 0; --pos) stride[pos] = stride[pos + 1] * j;
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  std::uint64_t idx = 0;
  do {
    for (int pos = 0; pos < n; ++pos) {
      if (x[pos] + 1 < j && table[idx] > table[idx + stride[pos]]) {
        out.push_back(to_string(x) + " -> " + to_string(x.up(pos)));
      }
    }
    ++idx;
  } while (next_profile(x, j));
  return out;
}

}  // namespace detail

/// True iff the table is monotone. Only immediate successors x -> x up i are
/// compared; transitivity covers every other comparable pair.
inline bool is_monotone_table(int n, int j, std::span<const Level> table) {
  return detail::monotonicity_witnesses(n, j, table).empty();
}

// ---------------------------------------------------------------------------
// JKGame

/// Weighted description: v(x) = #{l : sum_i w_i x_i >= t_l}.
struct WeightedRule {
  std::vector<Rational> weights;
  std::vector<Rational> thresholds;

  friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

/// A (j,k) simple game: a monotone map J^n -> K with v(0) = 0. Immutable.
class JKGame {
 public:
  /// No validation. Library code uses this for games that are valid by
  /// construction; everyone else goes through make_table_game.
  JKGame(detail::Unchecked, int n, int j, int k, std::vector<Level> table,
         std::vector<int> labels = {},
         std::optional<WeightedRule> provenance = std::nullopt)
      : n_(n),
        j_(j),
        k_(k),
        table_(std::move(table)),
        labels_(std::move(labels)),
        provenance_(std::move(provenance)),
        stride_(static_cast<std::size_t>(n), 1) {
    if (labels_.empty()) {
      labels_.resize(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) labels_[p] = p + 1;
    }
    for (int pos = n - 2; pos >= 0; --pos) stride_[pos] = stride_[pos + 1] * j;
  }

  int players() const noexcept { return n_; }
  int input_levels() const noexcept { return j_; }
  int output_levels() const noexcept { return k_; }
  std::uint64_t profile_count() const noexcept { return table_.size(); }
  std::span<const Level> table() const noexcept { return table_; }
  Level at(std::uint64_t index) const { return table_[index]; }

  /// Unchecked lookup; see evaluate() for the validating version.
  Level operator()(const Profile& x) const { return table_[index_of(x)]; }

  std::uint64_t index_of(const Profile& x) const {
    std::uint64_t idx = 0;
    for (int pos = 0; pos < n_; ++pos) idx = idx * j_ + x[pos];
    return idx;
  }
  Profile profile_at(std::uint64_t index) const {
    std::vector<Level> levels(static_cast<std::size_t>(n_), 0);
    for (int pos = n_ - 1; pos >= 0; --pos) {
      levels[pos] = static_cast<Level>(index % j_);
      index /= j_;
    }
    return Profile(std::move(levels));
  }
  /// Table distance between x and x down i, for a 0-based position.
  std::uint64_t stride(int position) const { return stride_[position]; }

  /// Original player numbers; subgames keep the labels of their survivors.
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::optional<WeightedRule>& provenance() const noexcept {
    return provenance_;
  }

  /// Identically zero.
  bool is_trivial() const {
    return std::all_of(table_.begin(), table_.end(),
                       [](Level l) { return l == 0; });
  }
  bool same_shape(const JKGame& other) const {
    return n_ == other.n_ && j_ == other.j_ && k_ == other.k_;
  }

  /// Equality of the mappings; labels and provenance are ignored.
  friend bool operator==(const JKGame& a, const JKGame& b) {
    return a.same_shape(b) && a.table_ == b.table_;
  }

 private:
  int n_;
  int j_;
  int k_;
  std::vector<Level> table_;
  std::vector<int> labels_;
  std::optional<WeightedRule> provenance_;
  std::vector<std::uint64_t> stride_;
};

namespace detail {

inline void validate_table(int n, int j, int k, std::span<const Level> table,
                           Errc monotonicity_code) {
  if (table[0] != 0) {
    throw GameError(Errc::NonZeroAtOrigin,
                    "v(0) = " + std::to_string(table[0]));
  }
  std::vector<std::string> out_of_range;
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  std::uint64_t idx = 0;
  do {
    if (table[idx] < 0 || table[idx] >= k) {
      out_of_range.push_back(to_string(x) + " -> " + std::to_string(table[idx]));
    }
    ++idx;
  } while (next_profile(x, j));
  if (!out_of_range.empty()) {
    throw GameError(Errc::OutOfRangeOutput,
                    "outputs must lie in [0," + std::to_string(k - 1) + "]",
                    std::move(out_of_range));
  }
  auto violations = monotonicity_witnesses(n, j, table);
  if (!violations.empty()) {
    throw GameError(monotonicity_code, "v(x) > v(x up i)", std::move(violations));
  }
}

}  // namespace detail

/// Builds and validates a game from its table in index order.
inline JKGame make_table_game(int n, int j, int k, std::vector<Level> table,
                              std::uint64_t cap = kDefaultTableCap) {
  detail::check_arity(n, j, k);
  const std::uint64_t size = detail::capped_pow(j, n, cap);
  if (table.size() != size) {
    throw GameError(Errc::IncompleteTable,
                    "expected " + std::to_string(size) + " entries, got " +
                        std::to_string(table.size()));
  }
  detail::validate_table(n, j, k, table, Errc::MonotonicityViolation);
  return JKGame(detail::Unchecked{}, n, j, k, std::move(table));
}

/// Builds a game by evaluating `rule` on every profile.
template <typename Rule>
  requires std::invocable<Rule&, const Profile&>
JKGame make_table_game(int n, int j, int k, Rule&& rule,
                       std::uint64_t cap = kDefaultTableCap) {
  detail::check_arity(n, j, k);
  const std::uint64_t size = detail::capped_pow(j, n, cap);
  std::vector<Level> table;
  table.reserve(size);
  Profile x(std::vector<Level>(static_cast<std::size_t>(n), 0));
  do {
    table.push_back(static_cast<Level>(rule(x)));
  } while (next_profile(x, j));
  return make_table_game(n, j, k, std::move(table), cap);
}

namespace detail {

// Fills the weighted table with integer arithmetic after scaling every
// weight and threshold to a common denominator.
template <typename Int>
std::vector<Level> weighted_table(int n, int j, const std::vector<Int>& w,
                                  const std::vector<Int>& t,
                                  std::uint64_t size) {
  std::vector<Level> table;
  table.reserve(size);
  std::vector<Level> x(static_cast<std::size_t>(n), 0);
  Int sum = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    // Thresholds are strictly increasing, so count from the bottom.
    Level level = 0;
    while (level < static_cast<Level>(t.size()) && sum >= t[level]) ++level;
    table.push_back(level);
    for (int pos = n - 1; pos >= 0; --pos) {
      if (x[pos] + 1 < j) {
        ++x[pos];
        sum += w[pos];
        break;
      }
      sum -= w[pos] * Int(x[pos]);
      x[pos] = 0;
    }
  }
  return table;
}

}  // namespace detail

inline JKGame make_weighted_game(std::vector<Rational> weights,
                                 std::vector<Rational> thresholds, int j, int k,
                                 std::uint64_t cap = kDefaultTableCap) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const int n = static_cast<int>(weights.size());
  detail::check_arity(n, j, k);
  if (thresholds.size() != static_cast<std::size_t>(k - 1)) {
    throw GameError(Errc::ArityMismatch,
                    "expected k-1 = " + std::to_string(k - 1) +
                        " thresholds, got " + std::to_string(thresholds.size()));
  }
  for (std::size_t l = 1; l < thresholds.size(); ++l) {
    if (!(thresholds[l - 1] < thresholds[l])) {
      throw GameError(Errc::NonIncreasingThresholds,
                      to_string(thresholds[l - 1]) + " >= " +
                          to_string(thresholds[l]));
    }
  }
  const std::uint64_t size = detail::capped_pow(j, n, cap);

  cpp_int common = 1;
  for (const auto* seq : {&weights, &thresholds}) {
    for (const Rational& r : *seq) common = lcm(common, denominator(r));
  }
  std::vector<cpp_int> w, t;
  cpp_int bound = 0;
  for (const Rational& r : weights) {
    w.push_back(numerator(r) * (common / denominator(r)));
    bound += abs(w.back()) * (j - 1);
  }
  for (const Rational& r : thresholds) {
    t.push_back(numerator(r) * (common / denominator(r)));
    if (abs(t.back()) > bound) bound = abs(t.back());
  }

  std::vector<Level> table;
  if (bound < (cpp_int(1) << 62)) {
    std::vector<std::int64_t> w64, t64;
    for (const auto& v : w) w64.push_back(v.convert_to<std::int64_t>());
    for (const auto& v : t) t64.push_back(v.convert_to<std::int64_t>());
    table = detail::weighted_table(n, j, w64, t64, size);
  } else {
    table = detail::weighted_table(n, j, w, t, size);
  }

  detail::validate_table(n, j, k, table, Errc::NegativeWeightNonMonotone);
  return JKGame(detail::Unchecked{}, n, j, k, std::move(table), {},
                WeightedRule{std::move(weights), std::move(thresholds)});
}

/// Checked lookup.
inline Level evaluate(const JKGame& game, const Profile& x) {
  if (x.size() != static_cast<std::size_t>(game.players())) {
    throw GameError(Errc::ProfileDimensionMismatch,
                    "profile " + to_string(x) + " has " +
                        std::to_string(x.size()) + " entries, game has " +
                        std::to_string(game.players()) + " players");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= game.input_levels()) {
      throw GameError(Errc::LevelOutOfRange,
                      "profile " + to_string(x) + " leaves [0," +
                          std::to_string(game.input_levels() - 1) + "]");
    }
  }
  return game(x);
}

/// v_S: players outside S frozen at level 0. The result has |S| players,
/// indexed densely in increasing order, and keeps the original labels.
inline JKGame subgame(const JKGame& game, Coalition s) {
  const int n = game.players();
  detail::check_coalition(s, n);
  const std::vector<int> members = s.members();
  const int m = static_cast<int>(members.size());
  std::vector<Level> table;
  table.reserve(detail::capped_pow(game.input_levels(), m,
                                   std::numeric_limits<std::uint64_t>::max()));
  std::vector<int> labels;
  for (int p : members) labels.push_back(game.labels()[p - 1]);
  Profile x(std::vector<Level>(static_cast<std::size_t>(m), 0));
  do {
    std::uint64_t idx = 0;
    for (int pos = 0; pos < m; ++pos) {
      idx += static_cast<std::uint64_t>(x[pos]) * game.stride(members[pos] - 1);
    }
    table.push_back(game.at(idx));
  } while (next_profile(x, game.input_levels()));
  return JKGame(detail::Unchecked{}, m, game.input_levels(),
                game.output_levels(), std::move(table), std::move(labels));
}

/// v_{-i} = v_{N \ {i}}.
inline JKGame remove_player(const JKGame& game, int player) {
  detail::check_player(player, game.players());
  return subgame(game, Coalition::grand(game.players()).without(player));
}

// ---------------------------------------------------------------------------
// SimpleGame

/// A monotone {0,1}-valued coalition function with v(empty) = 0. v(N) = 1
/// is not required.
class SimpleGame {
 public:
  SimpleGame(detail::Unchecked, int n, std::vector<bool> winning_by_mask)
      : n_(n), winning_(std::move(winning_by_mask)) {}

  int players() const noexcept { return n_; }
  bool is_winning(Coalition s) const { return winning_[s.mask()]; }

  /// Every winning coalition, in profile-index order.
  std::vector<Coalition> winning_coalitions() const {
    std::vector<Coalition> out;
    for (std::uint64_t idx = 0; idx < winning_.size(); ++idx) {
      const Coalition s = coalition_at_profile_index(idx, n_);
      if (winning_[s.mask()]) out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;

 private:
  int n_;
  std::vector<bool> winning_;
};

enum class Closure {
  upward,  ///< the given coalitions generate the winning set
  exact,   ///< the given coalitions are the winning set; must be upward closed
};

inline SimpleGame make_simple_game(int n, const std::vector<Coalition>& winning,
                                   Closure closure = Closure::upward,
                                   std::uint64_t cap = kDefaultTableCap) {
  if (n < 0 || n > kMaxPlayers) {
    throw GameError(Errc::ArityMismatch,
                    "player count " + std::to_string(n) + " out of range");
  }
  const std::uint64_t size = detail::capped_pow(2, n, cap);
  std::vector<bool> win(size, false);
  for (Coalition s : winning) {
    detail::check_coalition(s, n);
    if (s.empty()) {
      throw GameError(Errc::NonZeroEmptyCoalition,
                      "the empty coalition cannot be winning");
    }
    win[s.mask()] = true;
  }
  if (closure == Closure::upward) {
    // Masks are visited in increasing order, so every subset is final first.
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      if (win[mask]) continue;
      for (int p = 0; p < n; ++p) {
        if ((mask >> p & 1u) && win[mask & ~(std::uint64_t{1} << p)]) {
          win[mask] = true;
          break;
        }
      }
    }
  } else {
    std::vector<std::string> violations;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      if (!win[mask]) continue;
      for (int p = 0; p < n; ++p) {
        const std::uint64_t sup = mask | (std::uint64_t{1} << p);
        if (!win[sup]) {
          violations.push_back(
              to_string(Coalition(static_cast<std::uint32_t>(mask))) + " -> " +
              to_string(Coalition(static_cast<std::uint32_t>(sup))));
        }
      }
    }
    if (!violations.empty()) {
      throw GameError(Errc::MonotonicityViolation,
                      "winning set is not upward closed", std::move(violations));
    }
  }
  return SimpleGame(detail::Unchecked{}, n, std::move(win));
}

// ---------------------------------------------------------------------------
// TUGame

/// A coalition function with exact rational worths and v(empty) = 0.
/// Monotonicity is not required; it is recorded in is_monotone().
class TUGame {
 public:
  TUGame(detail::Unchecked, int n, std::vector<Rational> worth_by_mask)
      : n_(n), worth_(std::move(worth_by_mask)) {
    monotone_ = true;
    for (std::size_t mask = 1; mask < worth_.size() && monotone_; ++mask) {
      for (int p = 0; p < n_; ++p) {
        if ((mask >> p & 1u) && worth_[mask & ~(std::size_t{1} << p)] > worth_[mask]) {
          monotone_ = false;
          break;
        }
      }
    }
  }

  int players() const noexcept { return n_; }
  const Rational& worth(Coalition s) const { return worth_[s.mask()]; }
  /// Worths indexed by coalition mask.
  std::span<const Rational> worths() const noexcept { return worth_; }
  bool is_monotone() const noexcept { return monotone_; }

  friend bool operator==(const TUGame& a, const TUGame& b) {
    return a.n_ == b.n_ && a.worth_ == b.worth_;
  }

 private:
  int n_;
  std::vector<Rational> worth_;
  bool monotone_;
};

/// `worth_by_mask[m]` is the worth of the coalition with mask m.
inline TUGame make_tu_game(int n, std::vector<Rational> worth_by_mask,
                           std::uint64_t cap = kDefaultTableCap) {
  if (n < 0 || n > kMaxPlayers) {
    throw GameError(Errc::ArityMismatch,
                    "player count " + std::to_string(n) + " out of range");
  }
  const std::uint64_t size = detail::capped_pow(2, n, cap);
  if (worth_by_mask.size() != size) {
    throw GameError(Errc::IncompleteWorthTable,
                    "expected " + std::to_string(size) + " worths, got " +
                        std::to_string(worth_by_mask.size()));
  }
  if (worth_by_mask[0] != 0) {
    throw GameError(Errc::NonZeroEmptyCoalition,
                    "v(empty) = " + to_string(worth_by_mask[0]));
  }
  return TUGame(detail::Unchecked{}, n, std::move(worth_by_mask));
}

/// Every nonempty coalition must be present; the empty one defaults to 0.
inline TUGame make_tu_game(int n, const std::map<Coalition, Rational>& worth,
                           std::uint64_t cap = kDefaultTableCap) {
  if (n < 0 || n > kMaxPlayers) {
    throw GameError(Errc::ArityMismatch,
                    "player count " + std::to_string(n) + " out of range");
  }
  const std::uint64_t size = detail::capped_pow(2, n, cap);
  std::vector<Rational> table(size);
  std::vector<bool> seen(size, false);
  seen[0] = true;
  for (const auto& [s, value] : worth) {
    detail::check_coalition(s, n);
    table[s.mask()] = value;
    seen[s.mask()] = true;
  }
  std::vector<std::string> missing;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (!seen[mask]) {
      missing.push_back(to_string(Coalition(static_cast<std::uint32_t>(mask))));
    }
  }
  if (!missing.empty()) {
    throw GameError(Errc::IncompleteWorthTable, "coalitions without a worth",
                    std::move(missing));
  }
  return make_tu_game(n, std::move(table), cap);
}

/// Restriction of a TU game to S, re-indexed densely.
inline TUGame subgame(const TUGame& game, Coalition s) {
  detail::check_coalition(s, game.players());
  const std::vector<int> members = s.members();
  const int m = static_cast<int>(members.size());
  std::vector<Rational> worth(std::size_t{1} << m);
  for (std::uint32_t sub = 0; sub < worth.size(); ++sub) {
    std::uint32_t orig = 0;
    for (int pos = 0; pos < m; ++pos) {
      if (sub >> pos & 1u) orig |= std::uint32_t{1} << (members[pos] - 1);
    }
    worth[sub] = game.worth(Coalition(orig));
  }
  return TUGame(detail::Unchecked{}, m, std::move(worth));
}

inline TUGame remove_player(const TUGame& game, int player) {
  detail::check_player(player, game.players());
  return subgame(game, Coalition::grand(game.players()).without(player));
}

// ---------------------------------------------------------------------------
// Embeddings

/// A simple game as a (2,2) simple game: v_hat(x^S) = v(S).
inline JKGame embed_simple(const SimpleGame& simple) {
  const int n = simple.players();
  std::vector<Level> table(std::size_t{1} << n);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    table[idx] = simple.is_winning(coalition_at_profile_index(idx, n)) ? 1 : 0;
  }
  return JKGame(detail::Unchecked{}, n, 2, 2, std::move(table));
}

/// Inverse of embed_simple; requires j = k = 2.
inline SimpleGame extract_simple(const JKGame& game) {
  if (game.input_levels() != 2 || game.output_levels() != 2) {
    throw GameError(Errc::NotBinaryGame,
                    "need a (2,2) game, got (" +
                        std::to_string(game.input_levels()) + "," +
                        std::to_string(game.output_levels()) + ")");
  }
  const int n = game.players();
  std::vector<bool> win(std::size_t{1} << n, false);
  for (std::uint64_t idx = 0; idx < game.profile_count(); ++idx) {
    win[coalition_at_profile_index(idx, n).mask()] = game.at(idx) == 1;
  }
  return SimpleGame(detail::Unchecked{}, n, std::move(win));
}

/// A (2,k) game as the TU game worth(S) = v(x^S), without rescaling.
inline TUGame embed_2k_as_tu(const JKGame& game) {
  if (game.input_levels() != 2) {
    throw GameError(Errc::NotTwoLevelInput,
                    "need j = 2, got j = " + std::to_string(game.input_levels()));
  }
  const int n = game.players();
  std::vector<Rational> worth(std::size_t{1} << n);
  for (std::uint64_t idx = 0; idx < game.profile_count(); ++idx) {
    worth[coalition_at_profile_index(idx, n).mask()] = game.at(idx);
  }
  return TUGame(detail::Unchecked{}, n, std::move(worth));
}

/// A simple game read as a 0/1 TU game.
inline TUGame as_tu(const SimpleGame& simple) {
  const int n = simple.players();
  std::vector<Rational> worth(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < worth.size(); ++mask) {
    worth[mask] = simple.is_winning(Coalition(mask)) ? 1 : 0;
  }
  return TUGame(detail::Unchecked{}, n, std::move(worth));
}

}  // namespace pgjk

#endif  // PGJK_GAME_CORE_HPP
