// Copyright 2026 The augrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "augrc/search.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <gtest/gtest.h>

#include "augrc/augment.hpp"
#include "augrc/efficiency.hpp"
#include "augrc/errors.hpp"
#include "test_util.hpp"

namespace augrc {
namespace {

SearchConfig Small(Strategy strategy, uint64_t seed = 5) {
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.strategy = strategy;
  cfg.restarts = 4;
  cfg.max_iters = 1500;
  cfg.threads = 1;
  return cfg;
}

// Best E_con over every 2 x 4 array on labels 1..4 with each label twice.
double ExhaustiveOptimum442() {
  std::vector<int> a{1, 2, 3, 4}, b;
  double best = 0.0;
  do {
    b = {1, 2, 3, 4};
    do {
      bool binary = true;
      for (int j = 0; j < 4; ++j) binary &= a[j] != b[j];
      if (!binary) continue;
      const ContractionDesign c(4, LabelGrid::FromRows({a, b}));
      if (!testing::Connected(testing::PlotLevelInfo(c))) continue;
      best = std::max(best, testing::OracleECon(c));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return best;
}

TEST(RandomContraction, ValidAndDeterministic) {
  const std::vector<int> r(12, 2);
  const ContractionDesign a = RandomContraction(12, 8, 3, r, 1);
  EXPECT_TRUE(ValidateContraction(a).ok());
  EXPECT_EQ(a, RandomContraction(12, 8, 3, r, 1));
  EXPECT_NE(a, RandomContraction(12, 8, 3, r, 2));
}

TEST(RandomContraction, SeedSweepOnFourByFour) {
  std::set<LabelGrid> seen;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const ContractionDesign c = RandomContraction(4, 4, 2, {2, 2, 2, 2}, seed);
    ASSERT_TRUE(ValidateContraction(c).ok());
    seen.insert(c.cells());
  }
  EXPECT_GT(seen.size(), 1u);
}

TEST(RandomContraction, CoversPropertyGrid) {
  for (const auto& p : testing::PropertyGrid()) {
    const ContractionDesign c = RandomContraction(p.v, p.s, p.k, BalancedReplication(p.v, p.k, p.s), 77);
    EXPECT_TRUE(ValidateContraction(c).ok()) << p.v << " " << p.s << " " << p.k;
  }
}

TEST(RandomContraction, RejectsImpossibleReplication) {
  EXPECT_THROW(RandomContraction(4, 4, 2, {3, 2, 2, 1}, 1), InfeasibleError);
  EXPECT_THROW(RandomContraction(4, 4, 2, {2, 2, 2}, 1), InfeasibleError);
  EXPECT_THROW(RandomContraction(4, 4, 2, {2, 2, 2, 1}, 1), InfeasibleError);
  EXPECT_THROW(RandomContraction(3, 4, 2, {3, 3, 2}, 1), InfeasibleError);
}

TEST(Moves, WithinColumnKeepsColumnIncidence) {
  // Every row of a 3 x 3 Latin square holds every label, so no
  // within-column swap keeps the rows binary.
  EXPECT_FALSE(IsValidMove(testing::LatinSquare3(), Move{Move::Kind::kWithinColumn, 0, 0, 1, 0}));
  // Example 1 admits none either: column 4 holds 1 (row 1) and 3 (row 2), and
  // row 1 already holds 3.
  EXPECT_FALSE(IsValidMove(testing::Example1(), Move{Move::Kind::kWithinColumn, 0, 3, 1, 3}));
  std::optional<ContractionDesign> found;
  std::optional<Move> move;
  for (const ContractionDesign& d : testing::RandomContractions(20, 42)) {
    for (const Move& candidate : NeighborMoves(d)) {
      if (candidate.kind == Move::Kind::kWithinColumn) {
        found = d;
        move = candidate;
        break;
      }
    }
    if (found) break;
  }
  ASSERT_TRUE(found.has_value());
  const ContractionDesign& c = *found;
  const Move& m = *move;
  const ContractionDesign d = ApplyMove(c, m);
  EXPECT_TRUE(ValidateContraction(d).ok());
  EXPECT_EQ(Incidence(d).column_incidence, Incidence(c).column_incidence);
}

TEST(Moves, RowSwapRejectedWhenColumnWouldRepeat) {
  const ContractionDesign c = testing::Example1();
  ASSERT_EQ(c.at(0, 0), 3);
  ASSERT_EQ(c.at(0, 3), 1);
  EXPECT_FALSE(IsValidMove(c, Move{Move::Kind::kWithinRow, 0, 0, 0, 3}));
}

TEST(Moves, NeighborhoodIsValid) {
  EXPECT_FALSE(NeighborMoves(testing::Example1()).empty());
  for (const ContractionDesign& c : testing::RandomContractions(10, 41)) {
    const std::vector<Move> moves = NeighborMoves(c);
    for (const Move& m : moves) {
      ASSERT_TRUE(IsValidMove(c, m));
      const ContractionDesign d = ApplyMove(c, m);
      ASSERT_TRUE(ValidateContraction(d).ok());
      EXPECT_EQ(d.replication(), c.replication());
      EXPECT_NE(d.cells(), c.cells());
      if (m.kind == Move::Kind::kWithinColumn) {
        EXPECT_EQ(m.j1, m.j2);
        EXPECT_EQ(Incidence(d).column_incidence, Incidence(c).column_incidence);
      }
      if (m.kind == Move::Kind::kWithinRow) {
        EXPECT_EQ(m.i1, m.i2);
        EXPECT_EQ(Incidence(d).row_incidence, Incidence(c).row_incidence);
      }
    }
  }
}

TEST(Names, RoundTrip) {
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  for (Objective o : {Objective::kECon, Objective::kEAug}) EXPECT_EQ(ParseObjective(ObjectiveName(o)), o);
  EXPECT_FALSE(ParseStrategy("tabu").has_value());
  EXPECT_FALSE(ParseObjective("a-opt").has_value());
}

TEST(ValidateConfig, RejectsBadValues) {
  SearchConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(ValidateConfig(cfg), InfeasibleError);
  cfg = {};
  cfg.max_iters = 0;
  EXPECT_THROW(ValidateConfig(cfg), InfeasibleError);
  cfg = {};
  cfg.anneal.decay = 1.0;
  EXPECT_THROW(ValidateConfig(cfg), InfeasibleError);
  cfg = {};
  cfg.time_budget_seconds = 0.0;
  EXPECT_THROW(ValidateConfig(cfg), InfeasibleError);
  EXPECT_NO_THROW(ValidateConfig(SearchConfig{}));
}

TEST(SearchContraction, RejectsInfeasible) {
  EXPECT_THROW(SearchContraction(10, 3, 2, Small(Strategy::kAnneal)), InfeasibleError);
}

TEST(SearchContraction, DeterministicAndThreadIndependent) {
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    SearchConfig cfg = Small(s);
    const SearchResult a = SearchContraction(12, 8, 3, cfg);
    const SearchResult b = SearchContraction(12, 8, 3, cfg);
    cfg.threads = 3;
    const SearchResult c = SearchContraction(12, 8, 3, cfg);
    for (const SearchResult* other : {&b, &c}) {
      EXPECT_EQ(a.best, other->best);
      EXPECT_EQ(a.objective, other->objective);
      EXPECT_EQ(a.trace, other->trace);
      EXPECT_EQ(a.restart_of_best, other->restart_of_best);
    }
  }
}

TEST(SearchContraction, EveryEvaluatedDesignIsValid) {
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    SearchConfig cfg = Small(s);
    cfg.max_iters = 300;
    cfg.threads = 2;
    std::mutex mu;
    long evaluated = 0, invalid = 0;
    cfg.on_evaluate = [&](const ContractionDesign& d) {
      const bool ok = ValidateContraction(d).ok();
      std::lock_guard<std::mutex> lock(mu);
      ++evaluated;
      invalid += !ok;
    };
    SearchContraction(10, 6, 3, cfg);
    EXPECT_GT(evaluated, 0);
    EXPECT_EQ(invalid, 0);
  }
}

TEST(SearchContraction, TraceAndObjectiveConsistent) {
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    const SearchResult r = SearchContraction(12, 8, 3, Small(s));
    ASSERT_FALSE(r.trace.empty());
    for (size_t i = 1; i < r.trace.size(); ++i) {
      EXPECT_GE(r.trace[i].objective, r.trace[i - 1].objective);
      EXPECT_GT(r.trace[i].iteration, r.trace[i - 1].iteration);
    }
    EXPECT_DOUBLE_EQ(r.trace.back().objective, r.objective);
    EXPECT_NEAR(ECon(r.best), r.objective, 1e-9);
    EXPECT_TRUE(ValidateContraction(r.best).ok());
    EXPECT_FALSE(r.budget_exhausted);
  }
}

TEST(SearchContraction, EAugObjective) {
  SearchConfig cfg = Small(Strategy::kAnneal);
  cfg.objective = Objective::kEAug;
  const SearchResult r = SearchContraction(24, 16, 5, cfg);
  EXPECT_NEAR(FullReport(r.best, false).e_aug_formula, r.objective, 1e-9);
}

TEST(SearchContraction, TimeBudgetReturnsBestSoFar) {
  SearchConfig cfg = Small(Strategy::kAnneal);
  cfg.max_iters = 100000000;
  cfg.restarts = 2;
  cfg.time_budget_seconds = 0.2;
  const SearchResult r = SearchContraction(12, 8, 3, cfg);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_TRUE(ValidateContraction(r.best).ok());
  EXPECT_NEAR(ECon(r.best), r.objective, 1e-9);
  EXPECT_LT(r.elapsed_seconds, 5.0);
}

TEST(SearchContraction, MatchesExhaustiveOptimumOnFourByFour) {
  const double optimum = ExhaustiveOptimum442();
  for (Strategy s : {Strategy::kHillClimb, Strategy::kAnneal, Strategy::kColumnFirst}) {
    const SearchResult r = SearchContraction(4, 4, 2, Small(s));
    EXPECT_NEAR(r.objective, optimum, 1e-9) << StrategyName(s);
  }
}

TEST(SearchAugmentedDirect, ValidBaseline) {
  SearchConfig cfg = Small(Strategy::kAnneal);
  cfg.max_iters = 400;
  const DirectSearchResult r = SearchAugmentedDirect(12, 8, 3, cfg);
  const ValidationReport rep = ValidateAugmented(r.best);
  EXPECT_TRUE(rep.ok()) << rep.ToString();
  EXPECT_GT(r.objective, 0.0);
  EXPECT_LT(r.objective, 1.0);
  EXPECT_NEAR(EAugDirect(r.best), r.objective, 1e-9);
  const DirectSearchResult again = SearchAugmentedDirect(12, 8, 3, cfg);
  EXPECT_EQ(again.best, r.best);
  EXPECT_EQ(again.trace, r.trace);
  cfg.strategy = Strategy::kColumnFirst;
  EXPECT_THROW(SearchAugmentedDirect(12, 8, 3, cfg), InfeasibleError);
}

TEST(SearchAugmentedDirect, TinyExhaustiveComparison) {
  // Contraction route: every 2 x 3 array on 3 labels.
  double contraction_best = 0.0;
  std::vector<int> a{1, 2, 3}, b;
  do {
    b = {1, 2, 3};
    do {
      bool binary = true;
      for (int j = 0; j < 3; ++j) binary &= a[j] != b[j];
      if (!binary) continue;
      const ContractionDesign c(3, LabelGrid::FromRows({a, b}));
      contraction_best = std::max(contraction_best, EAugDirect(Augment(c)));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));

  // Direct route: each column places checks 4 and 5 in an ordered pair of rows.
  double direct_best = 0.0;
  const std::vector<std::pair<int, int>> placements{{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
  for (const auto& p0 : placements) {
    for (const auto& p1 : placements) {
      for (const auto& p2 : placements) {
        LabelGrid g(3, 3, 0);
        const std::pair<int, int> cols[3] = {p0, p1, p2};
        for (int j = 0; j < 3; ++j) {
          g(cols[j].first, j) = 4;
          g(cols[j].second, j) = 5;
        }
        Label next = 1;
        for (int j = 0; j < 3; ++j)
          for (int i = 0; i < 3; ++i)
            if (g(i, j) == 0) g(i, j) = next++;
        const AugmentedDesign d(2, g);
        if (!testing::Connected(InfoMatrixAugmented(d))) continue;
        direct_best = std::max(direct_best, EAugDirect(d));
      }
    }
  }
  RecordProperty("contraction_route_optimum", std::to_string(contraction_best));
  RecordProperty("direct_route_optimum", std::to_string(direct_best));
  EXPECT_GT(contraction_best, 0.0);
  EXPECT_GT(direct_best, 0.0);

  const DirectSearchResult r = SearchAugmentedDirect(3, 3, 2, Small(Strategy::kHillClimb));
  EXPECT_LE(r.objective, direct_best + 1e-12);
}

}  // namespace
}  // namespace augrc
