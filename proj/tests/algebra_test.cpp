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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "pgjk/pgjk.hpp"
#include "support.hpp"

namespace pgjk {
namespace {

using testing::example33;
using R = std::vector<Rational>;

JKGame u1() { return single_mcv_game(3, 2, 2, Profile{1, 1, 0}, 1); }
JKGame u2() { return single_mcv_game(3, 2, 2, Profile{0, 1, 1}, 1); }

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GameError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GameError thrown";
  return Errc::ParseError;
}

TEST(Oplus, Examples) {
  const JKGame v = example33();
  EXPECT_EQ(oplus(v, v), v);
  EXPECT_EQ(oplus(v, make_table_game(3, 3, 3, std::vector<Level>(27, 0))), v);
  EXPECT_EQ(testing::as_map(minimal_critical_vectors(oplus(u1(), u2()))),
            (std::map<std::vector<Level>, Level>{{{1, 1, 0}, 1}, {{0, 1, 1}, 1}}));
  EXPECT_EQ(error_of([&] { oplus(v, u1()); }), Errc::DimensionMismatch);
}

TEST(Oplus, SemilatticeLaws) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const int j = 2 + trial % 2;
    const int k = 2 + (trial / 2) % 2;
    const JKGame a = testing::random_monotone_game(rng, n, j, k);
    const JKGame b = testing::random_monotone_game(rng, n, j, k);
    const JKGame c = testing::random_monotone_game(rng, n, j, k);
    const JKGame ab = oplus(a, b);
    ASSERT_EQ(ab, oplus(b, a));
    ASSERT_EQ(oplus(ab, c), oplus(a, oplus(b, c)));
    ASSERT_EQ(oplus(a, a), a);
    for (std::uint64_t idx = 0; idx < a.profile_count(); ++idx) {
      ASSERT_EQ(ab.at(idx), std::max(a.at(idx), b.at(idx)));
    }
    ASSERT_TRUE(is_monotone_table(n, j, ab.table()));
    const std::vector<JKGame> all{a, b, c};
    ASSERT_EQ(oplus_all(all), oplus(ab, c));
  }
}

TEST(IsMergeable, Examples) {
  EXPECT_TRUE(is_mergeable(u1(), u2()).mergeable);
  EXPECT_TRUE(is_mergeable(u1(), u2()).violations.empty());

  const MergeReport self = is_mergeable(u1(), u1());
  EXPECT_FALSE(self.mergeable);
  ASSERT_FALSE(self.violations.empty());
  EXPECT_EQ(self.violations[0].clause, MergeClause::C1_shared_mcv);

  const JKGame v = single_mcv_game(2, 2, 2, Profile{1, 0}, 1);
  const JKGame w = single_mcv_game(2, 2, 2, Profile{1, 1}, 1);
  const MergeReport r = is_mergeable(v, w);
  EXPECT_FALSE(r.mergeable);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].clause, MergeClause::C2_le_not_less);
  EXPECT_EQ(r.violations[0].x, (Profile{1, 0}));
  EXPECT_EQ(r.violations[0].x_prime, (Profile{1, 1}));

  const MergeReport flipped = is_mergeable(w, v);
  ASSERT_EQ(flipped.violations.size(), 1u);
  EXPECT_EQ(flipped.violations[0].clause, MergeClause::C3_ge_not_greater);
  EXPECT_EQ(error_of([&] { is_mergeable(v, u1()); }), Errc::DimensionMismatch);
}

TEST(IsMergeable, MatchesClauseDefinitionOnRandomPairs) {
  std::mt19937_64 rng(22);
  int mergeable = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const JKGame v = testing::random_monotone_game(rng, 2, 3, 3, 0.2);
    const JKGame w = testing::random_monotone_game(rng, 2, 3, 3, 0.2);
    const auto mv = testing::brute_mcv(v);
    const auto mw = testing::brute_mcv(w);
    bool expected = true;
    for (const auto& [x, vx] : mv) {
      for (const auto& [y, wy] : mw) {
        if (x == y) expected = false;
        if (testing::le(x, y) && !(vx < wy)) expected = false;
        if (testing::le(y, x) && !(vx > wy)) expected = false;
      }
    }
    const MergeReport r = is_mergeable(v, w);
    ASSERT_EQ(r.mergeable, expected);
    ASSERT_EQ(r.mergeable, r.violations.empty());
    mergeable += expected ? 1 : 0;
  }
  EXPECT_GT(mergeable, 0);
}

TEST(McvUnionCheck, Examples) {
  EXPECT_TRUE(mcv_union_check(u1(), u2()));
  EXPECT_EQ(minimal_critical_vectors(oplus(u1(), u2())).size(), 2u);
  EXPECT_EQ(error_of([] { mcv_union_check(u1(), u1()); }), Errc::NotMergeable);
  EXPECT_EQ(error_of([] { mcv_union_check(example33(), example33()); }),
            Errc::NotMergeable);
}

TEST(McvUnionCheck, MergeablePairsUniteTheirVectors) {
  std::mt19937_64 rng(23);
  int pairs = 0;
  for (int trial = 0; pairs < 300 && trial < 5000; ++trial) {
    const int n = 2 + trial % 3;
    const JKGame g = testing::random_monotone_game(rng, n, 3, 3, 0.3);
    if (minimal_critical_vectors(g).size() < 2) continue;
    const auto parts = testing::random_mergeable_split(rng, g, 2);
    ASSERT_TRUE(is_mergeable(parts[0], parts[1]).mergeable);
    ASSERT_TRUE(mcv_union_check(parts[0], parts[1]));
    ASSERT_EQ(oplus(parts[0], parts[1]), g);
    ++pairs;
  }
  EXPECT_EQ(pairs, 300);
}

TEST(McvUnionCheck, IncomparableGeneratorsAddUpCriticality) {
  std::mt19937_64 rng(28);
  std::uniform_int_distribution<Level> worth(1, 3);
  int pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const auto chain = testing::random_antichain(rng, n, 4, 2 + trial % 4);
    if (chain.size() < 2) continue;
    JKGame acc = single_mcv_game(n, 4, 4, chain[0], worth(rng));
    for (std::size_t h = 1; h < chain.size(); ++h) {
      const JKGame next = single_mcv_game(n, 4, 4, chain[h], worth(rng));
      ASSERT_TRUE(mcv_union_check(acc, next));
      const JKGame merged = oplus(acc, next);
      for (int i = 1; i <= n; ++i) {
        ASSERT_EQ(criticality_count(merged, i),
                  criticality_count(acc, i) + criticality_count(next, i));
      }
      ASSERT_TRUE(axiom_report(acc, next).all_passed());
      acc = merged;
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 300);
}

TEST(McvUnionCheck, ComparableVectorsBreakCriticalityAdditivity) {
  // (1,0) in w sits below (2,1) down 2 in v, so the merged game loses one
  // critical level at (2,1) for each player.
  const JKGame v = single_mcv_game(2, 3, 3, Profile{2, 1}, 2);
  const JKGame w = single_mcv_game(2, 3, 3, Profile{1, 0}, 1);
  ASSERT_TRUE(mcv_union_check(v, w));
  const JKGame merged = oplus(v, w);
  EXPECT_EQ(variant_value(v).player_values, (R{2, 2}));
  EXPECT_EQ(variant_value(w).player_values, (R{1, 0}));
  EXPECT_EQ(variant_value(merged).player_values, (R{2, 1}));
  const AxiomReport r = axiom_report(v, w);
  EXPECT_EQ(r.verdicts[3].status, AxiomStatus::failed);
  EXPECT_FALSE(r.all_passed());
}

TEST(McvUnionCheck, SequentialChains) {
  std::mt19937_64 rng(24);
  int chains = 0;
  for (int trial = 0; chains < 100 && trial < 5000; ++trial) {
    const JKGame g = testing::random_monotone_game(rng, 3, 3, 3, 0.4);
    const std::size_t size = minimal_critical_vectors(g).size();
    if (size < 3) continue;
    const int parts = 3 + static_cast<int>(rng() % (size - 2));
    const auto pieces = testing::random_mergeable_split(rng, g, parts);
    JKGame acc = pieces[0];
    for (std::size_t h = 1; h < pieces.size(); ++h) {
      ASSERT_TRUE(mcv_union_check(pieces[h], acc));
      acc = oplus(acc, pieces[h]);
    }
    ASSERT_EQ(acc, g);
    ++chains;
  }
  EXPECT_EQ(chains, 100);
}

TEST(Permute, Examples) {
  const JKGame v = example33();
  EXPECT_EQ(permute(v, {1, 2, 3}), v);
  const JKGame swapped = permute(v, {3, 2, 1});
  EXPECT_EQ(public_good_value_jk(swapped).player_values, (R{4, 5, 6}));
  EXPECT_EQ(permute(swapped, {3, 2, 1}), v);
  EXPECT_EQ(error_of([&] { permute(v, {1, 1, 2}); }), Errc::NotAPermutation);
  EXPECT_EQ(error_of([&] { permute(v, {1, 2}); }), Errc::NotAPermutation);
  EXPECT_EQ(error_of([&] { permute(v, {0, 1, 2}); }), Errc::NotAPermutation);
}

TEST(Permute, Equivariance) {
  // MCV(pi v) holds y with y_{pi(i)} = x_i for every x in MCV(v).
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const JKGame v = testing::random_monotone_game(rng, n, 3, 3, 0.3);
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    const JKGame moved = permute(v, pi);
    std::map<std::vector<Level>, Level> expected;
    for (const auto& e : minimal_critical_vectors(v)) {
      std::vector<Level> y(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) y[pi[i] - 1] = e.profile[i];
      expected[y] = e.worth;
    }
    ASSERT_EQ(testing::as_map(minimal_critical_vectors(moved)), expected);
    const R psi = public_good_value_jk(v).player_values;
    const R variant = variant_value(v).player_values;
    const R moved_psi = public_good_value_jk(moved).player_values;
    const R moved_variant = variant_value(moved).player_values;
    for (int i = 0; i < n; ++i) {
      ASSERT_EQ(moved_psi[pi[i] - 1], psi[i]);
      ASSERT_EQ(moved_variant[pi[i] - 1], variant[i]);
    }
  }
}

TEST(IsNullPlayer, Examples) {
  const JKGame dummy = make_weighted_game({2, 1, 0}, {2}, 3, 2);
  EXPECT_TRUE(is_null_player(dummy, 3));
  EXPECT_FALSE(is_null_player(dummy, 1));
  for (int p = 1; p <= 3; ++p) EXPECT_FALSE(is_null_player(example33(), p));
  const JKGame zero = make_table_game(3, 2, 2, std::vector<Level>(8, 0));
  for (int p = 1; p <= 3; ++p) EXPECT_TRUE(is_null_player(zero, p));
  EXPECT_EQ(error_of([&] { is_null_player(zero, 4); }), Errc::UnknownPlayer);
}

TEST(IsNullPlayer, NullPlayersSitAtZeroInEveryMcv) {
  std::mt19937_64 rng(26);
  int nulls = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 4;
    const JKGame v = testing::random_monotone_game(rng, n, 2 + trial % 2, 3, 0.15);
    for (int p = 1; p <= n; ++p) {
      if (!is_null_player(v, p)) continue;
      ++nulls;
      for (const auto& e : minimal_critical_vectors(v)) ASSERT_EQ(e.profile[p - 1], 0);
    }
  }
  EXPECT_GT(nulls, 50);
}

TEST(Decompose, ComponentsRebuildTheGame) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    const int j = 2 + trial % 2;
    const int k = 2 + (trial / 2) % 2;
    const JKGame v = testing::random_monotone_game(rng, n, j, k, 0.35);
    const MCVSet mcv = minimal_critical_vectors(v);
    ASSERT_EQ(reconstruct(mcv, n, j, k), v);
    const std::vector<JKGame> parts = decompose(v);
    ASSERT_EQ(parts.size(), mcv.size());
    for (std::size_t h = 0; h < parts.size(); ++h) {
      const MCVSet single = minimal_critical_vectors(parts[h]);
      ASSERT_EQ(single.size(), 1u);
      ASSERT_EQ(single[0], mcv[h]);
    }
    if (!parts.empty()) {
      ASSERT_EQ(oplus_all(parts), v);
    }
  }
}

TEST(AxiomReport, ExampleGame) {
  const AxiomReport r = axiom_report(example33());
  ASSERT_EQ(r.verdicts.size(), 4u);
  EXPECT_EQ(r.verdicts[0].status, AxiomStatus::vacuous);
  EXPECT_EQ(r.verdicts[1].status, AxiomStatus::passed);
  EXPECT_EQ(r.verdicts[2].status, AxiomStatus::vacuous);
  EXPECT_EQ(r.verdicts[3].status, AxiomStatus::not_requested);
  EXPECT_TRUE(r.all_passed());
}

TEST(AxiomReport, SingleVectorAndNullPlayer) {
  const AxiomReport r = axiom_report(single_mcv_game(3, 3, 3, Profile{2, 1, 0}, 2));
  EXPECT_EQ(r.verdicts[0].status, AxiomStatus::passed);
  EXPECT_EQ(r.verdicts[2].status, AxiomStatus::passed);
  EXPECT_TRUE(r.all_passed());
}

TEST(AxiomReport, MergeablePair) {
  const AxiomReport r = axiom_report(u1(), u2());
  EXPECT_EQ(r.verdicts[3].status, AxiomStatus::passed);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(normalized_variant(oplus(u1(), u2())).player_values,
            (R{Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
}

TEST(AxiomReport, Errors) {
  const JKGame zero = make_table_game(3, 2, 2, std::vector<Level>(8, 0));
  EXPECT_EQ(error_of([&] { axiom_report(zero); }), Errc::TrivialGame);
  EXPECT_EQ(error_of([] { axiom_report(u1(), u1()); }), Errc::NotMergeable);
}

}  // namespace
}  // namespace pgjk
