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

// Generators and brute-force oracles shared by the test suites. Nothing here
// calls into the enumeration code it is used to check.

#ifndef PGJK_TESTS_SUPPORT_HPP
#define PGJK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "pgjk/pgjk.hpp"

namespace pgjk::testing {

/// All profiles of J^n in table order, as plain vectors.
inline std::vector<std::vector<Level>> all_profiles(int n, int j) {
  std::vector<std::vector<Level>> out;
  std::vector<Level> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(x);
    int pos = n - 1;
    while (pos >= 0 && x[pos] == j - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return out;
}

inline bool le(const std::vector<Level>& a, const std::vector<Level>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// The example (3,3) game written straight from its piecewise definition.
inline Level example33_rule(const std::vector<Level>& x) {
  if (x[0] == 2 && x[1] == 2 && x[2] == 2) return 2;
  return 3 * x[0] + 2 * x[1] + x[2] >= 7 ? 1 : 0;
}

inline JKGame example33() {
  return make_weighted_game({3, 2, 1}, {7, 12}, 3, 3);
}

/// The weighted simple game with weights (3,2,1) and quota 3.
inline SimpleGame example_simple() {
  return make_simple_game(3, {Coalition::of({1}), Coalition::of({2, 3})});
}

/// Pairwise monotonicity over every comparable pair.
inline bool brute_monotone(int n, int j, const std::vector<Level>& table) {
  const auto profiles = all_profiles(n, j);
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    for (std::size_t b = 0; b < profiles.size(); ++b) {
      if (le(profiles[a], profiles[b]) && table[a] > table[b]) return false;
    }
  }
  return true;
}

/// Definitional minimal critical vectors: v(x) > v(y) for every y < x.
inline std::map<std::vector<Level>, Level> brute_mcv(const JKGame& v) {
  const auto profiles = all_profiles(v.players(), v.input_levels());
  std::map<std::vector<Level>, Level> out;
  for (std::size_t a = 1; a < profiles.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < profiles.size() && ok; ++b) {
      if (a != b && le(profiles[b], profiles[a]) &&
          !(v.table()[a] > v.table()[b])) {
        ok = false;
      }
    }
    if (ok) out.emplace(profiles[a], v.table()[a]);
  }
  return out;
}

inline std::map<std::vector<Level>, Level> as_map(const MCVSet& mcv) {
  std::map<std::vector<Level>, Level> out;
  for (const auto& e : mcv) out.emplace(e.profile.levels(), e.worth);
  return out;
}

/// Random monotone table: every entry is the max over its immediate
/// predecessors plus a random bump, capped at k-1.
inline JKGame random_monotone_game(std::mt19937_64& rng, int n, int j, int k,
                                   double bump = 0.3) {
  std::bernoulli_distribution step(bump);
  std::uniform_int_distribution<int> jump(1, k - 1);
  const auto profiles = all_profiles(n, j);
  std::vector<Level> table(profiles.size(), 0);
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n), 1);
  for (int pos = n - 2; pos >= 0; --pos) stride[pos] = stride[pos + 1] * j;
  for (std::size_t idx = 1; idx < profiles.size(); ++idx) {
    Level base = 0;
    for (int pos = 0; pos < n; ++pos) {
      if (profiles[idx][pos] > 0) base = std::max(base, table[idx - stride[pos]]);
    }
    if (step(rng)) base = std::min(k - 1, base + jump(rng));
    table[idx] = base;
  }
  return make_table_game(n, j, k, std::move(table));
}

/// Random TU game with small rational worths. Monotone when asked.
inline TUGame random_tu_game(std::mt19937_64& rng, int n, bool monotone) {
  std::uniform_int_distribution<int> num(0, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> worth(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < worth.size(); ++mask) {
    Rational w(num(rng), den(rng));
    if (monotone) {
      // Keep the chance of ties so that not every coalition is critical.
      Rational floor = 0;
      for (int p = 0; p < n; ++p) {
        if (mask >> p & 1u) floor = std::max(floor, worth[mask & ~(1u << p)]);
      }
      w = std::bernoulli_distribution(0.4)(rng) ? floor : floor + w;
    }
    worth[mask] = w;
  }
  return make_tu_game(n, std::move(worth));
}

/// Calls f on every monotone (j,k) game with n players, by depth-first
/// assignment in table order with the predecessor bound as pruning.
inline void for_each_monotone_game(int n, int j, int k,
                                   const std::function<void(const JKGame&)>& f) {
  const auto profiles = all_profiles(n, j);
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n), 1);
  for (int pos = n - 2; pos >= 0; --pos) stride[pos] = stride[pos + 1] * j;
  std::vector<Level> table(profiles.size(), 0);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == profiles.size()) {
      f(make_table_game(n, j, k, table));
      return;
    }
    Level low = 0;
    for (int pos = 0; pos < n; ++pos) {
      if (profiles[idx][pos] > 0) low = std::max(low, table[idx - stride[pos]]);
    }
    for (Level l = low; l < k; ++l) {
      table[idx] = l;
      fill(idx + 1);
    }
  };
  fill(1);
}

/// Every monotone simple game on n players with v(empty) = 0.
inline void for_each_simple_game(int n,
                                 const std::function<void(const SimpleGame&)>& f) {
  for_each_monotone_game(n, 2, 2, [&](const JKGame& g) {
    std::vector<Coalition> winning;
    for (std::uint64_t idx = 0; idx < g.profile_count(); ++idx) {
      if (g.at(idx) == 1) winning.push_back(coalition_at_profile_index(idx, n));
    }
    f(make_simple_game(n, winning, Closure::exact));
  });
}

/// Maps T (original numbering, T subset of S) to the dense numbering of v_S.
inline Coalition relative_to(Coalition t, Coalition s) {
  std::vector<int> dense;
  const auto members = s.members();
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    if (t.contains(members[pos])) dense.push_back(static_cast<int>(pos) + 1);
  }
  return Coalition::of(dense);
}

/// Splits MCV(g) at random into `parts` nonempty groups and rebuilds one game
/// per group. Any two groups are mergeable, and so is each group with the
/// oplus of any others. Needs |MCV(g)| >= parts.
inline std::vector<JKGame> random_mergeable_split(std::mt19937_64& rng,
                                                  const JKGame& g, int parts) {
  const MCVSet mcv = minimal_critical_vectors(g);
  std::vector<std::size_t> owner(mcv.size());
  for (std::size_t i = 0; i < owner.size(); ++i) {
    owner[i] = i < static_cast<std::size_t>(parts) ? i : rng() % parts;
  }
  std::shuffle(owner.begin(), owner.end(), rng);
  std::vector<JKGame> out;
  for (int part = 0; part < parts; ++part) {
    std::vector<CriticalVector> group;
    for (std::size_t i = 0; i < owner.size(); ++i) {
      if (owner[i] == static_cast<std::size_t>(part)) group.push_back(mcv[i]);
    }
    out.push_back(reconstruct(MCVSet(std::move(group)), g.players(),
                              g.input_levels(), g.output_levels()));
  }
  return out;
}

/// Up to `size` pairwise incomparable nonzero profiles, drawn at random.
inline std::vector<Profile> random_antichain(std::mt19937_64& rng, int n, int j,
                                             std::size_t size) {
  std::uniform_int_distribution<Level> level(0, j - 1);
  std::vector<Profile> out;
  for (int attempt = 0; attempt < 200 && out.size() < size; ++attempt) {
    std::vector<Level> x(static_cast<std::size_t>(n));
    for (auto& l : x) l = level(rng);
    const Profile p(x);
    if (p.is_zero()) continue;
    const bool free = std::none_of(out.begin(), out.end(), [&](const Profile& q) {
      return componentwise_le(p, q) || componentwise_le(q, p);
    });
    if (free) out.push_back(p);
  }
  return out;
}

}  // namespace pgjk::testing

#endif  // PGJK_TESTS_SUPPORT_HPP
