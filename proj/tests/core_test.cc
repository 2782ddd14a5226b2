// Copyright 2026 The satproof Authors
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

#include "satproof/core.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace satproof {
namespace {

std::vector<int32_t> Dimacs(const Clause& c) { return c.ToDimacs(); }

TEST(NormalizeTest, RemovesDuplicates) {
  const std::vector<int32_t> raw = {1, 2, 1};
  auto c = Normalize(raw);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(Dimacs(*c), (std::vector<int32_t>{1, 2}));
}

TEST(NormalizeTest, ComplementaryPairIsTautology) {
  const std::vector<int32_t> raw = {1, -1};
  EXPECT_FALSE(Normalize(raw).has_value());
  EXPECT_TRUE(Clause({1, -1}).is_tautology());
}

TEST(NormalizeTest, EmptyClause) {
  auto c = Normalize(std::vector<int32_t>{});
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->empty());
}

TEST(NormalizeTest, ZeroIsMalformed) {
  const std::vector<int32_t> raw = {1, 0};
  EXPECT_THROW(Normalize(raw), MalformedLiteral);
}

TEST(LiteralTest, NegationIsAnInvolution) {
  for (int32_t v = -50; v <= 50; ++v) {
    if (v == 0) continue;
    const Literal l(v);
    EXPECT_EQ(~~l, l);
    EXPECT_EQ((~l).variable(), l.variable());
    EXPECT_NE((~l).code(), l.code());
  }
}

TEST(ResolveTest, TextbookResolvent) {
  auto r = Resolve(Clause{1, 2}, Clause{-1, 3}, Literal(1));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(Dimacs(*r), (std::vector<int32_t>{2, 3}));
}

TEST(ResolveTest, UnitConflictGivesEmptyClause) {
  auto r = Resolve(Clause{1}, Clause{-1}, Literal(1));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->empty());
}

TEST(ResolveTest, ComplementaryResultIsTautology) {
  EXPECT_FALSE(Resolve(Clause{1, 2}, Clause{-1, -2}, Literal(1)).has_value());
}

TEST(ResolveTest, MissingPivotThrows) {
  EXPECT_THROW(Resolve(Clause{1, 2}, Clause{3}, Literal(1)), InvalidResolution);
  EXPECT_THROW(Resolve(Clause{2}, Clause{-1}, Literal(1)), InvalidResolution);
}

TEST(ResolveTest, SoundOnTruthTables) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const int vars = 2 + iter % 11;
    auto cnf = oracle::RandomCnf(rng, vars, 2, 1, 5);
    const int pivot = std::abs(cnf[0][0]);
    // Force a clash on `pivot`.
    std::vector<int> c = cnf[0];
    std::vector<int> d;
    for (int l : cnf[1]) {
      if (std::abs(l) != pivot) d.push_back(l);
    }
    d.push_back(-c[0]);
    auto r = Resolve(Clause::FromDimacs(c), Clause::FromDimacs(d), Literal(c[0]));
    if (!r) continue;
    const uint64_t rows = uint64_t{1} << vars;
    for (uint64_t a = 0; a < rows; ++a) {
      if (oracle::Satisfies(c, a) && oracle::Satisfies(d, a)) {
        ASSERT_TRUE(oracle::Satisfies(r->ToDimacs(), a));
      }
    }
  }
}

TEST(FormulaTest, FirstIdIsOne) {
  Formula f;
  EXPECT_EQ(f.AddClause(Clause{1, 2}), ClauseId{1});
  EXPECT_EQ(f.AddClause(Clause{3}), ClauseId{2});
}

TEST(FormulaTest, RemoveByContentIgnoresOrder) {
  Formula f;
  f.AddClause(Clause{1, 2});
  EXPECT_EQ(f.RemoveClauseByContent(Clause{2, 1}), ClauseId{1});
  EXPECT_EQ(f.size(), 0u);
}

TEST(FormulaTest, RemoveAbsentClauseIsNoOp) {
  Formula f;
  f.AddClause(Clause{1, 2});
  EXPECT_FALSE(f.RemoveClauseByContent(Clause{3}).has_value());
  EXPECT_EQ(f.size(), 1u);
}

TEST(FormulaTest, RemoveUnknownIdThrows) {
  Formula f;
  f.AddClause(Clause{1});
  EXPECT_THROW(f.RemoveClause(ClauseId{5}), UnknownClause);
  f.RemoveClause(ClauseId{1});
  EXPECT_THROW(f.RemoveClause(ClauseId{1}), UnknownClause);
}

TEST(FormulaTest, DuplicatesGetDistinctIdsAndIdsAreNotReused) {
  Formula f;
  const ClauseId a = f.AddClause(Clause{1, 2});
  const ClauseId b = f.AddClause(Clause{2, 1});
  EXPECT_NE(a, b);
  EXPECT_EQ(f.FindByContent(Clause{1, 2}).size(), 2u);
  EXPECT_EQ(f.RemoveClauseByContent(Clause{1, 2}), b);
  EXPECT_EQ(f.AddClause(Clause{4}), ClauseId{3});
}

TEST(FormulaTest, OccurrenceIndexMatchesRebuild) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    Formula f;
    std::vector<ClauseId> live;
    for (int op = 0; op < 200; ++op) {
      if (live.empty() || rng() % 3 != 0) {
        auto raw = oracle::RandomCnf(rng, 8, 1, 0, 4)[0];
        live.push_back(f.AddClause(Clause::FromDimacs(raw)));
      } else if (rng() % 2) {
        const size_t i = rng() % live.size();
        f.RemoveClause(live[i]);
        live.erase(live.begin() + i);
      } else {
        const size_t i = rng() % live.size();
        auto removed = f.RemoveClauseByContent(f.clause(live[i]));
        ASSERT_TRUE(removed.has_value());
        live.erase(std::find(live.begin(), live.end(), *removed));
      }
      ASSERT_EQ(f.size(), live.size());
    }
    for (int v = 1; v <= 8; ++v) {
      for (int sign : {1, -1}) {
        const Literal l(sign * v);
        std::vector<ClauseId> expected;
        f.ForEach([&](ClauseId id, const Clause& c) {
          if (c.contains(l)) expected.push_back(id);
        });
        auto occ = f.Occurrences(l);
        EXPECT_EQ(std::vector<ClauseId>(occ.begin(), occ.end()), expected);
      }
    }
  }
}

}  // namespace
}  // namespace satproof
