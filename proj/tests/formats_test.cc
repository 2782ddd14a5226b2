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

#include "satproof/formats.h"

#include <random>

#include "generators.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace satproof {
namespace {

std::vector<ClauseId> Ids(std::initializer_list<uint64_t> ids) {
  std::vector<ClauseId> out;
  for (uint64_t v : ids) out.push_back(ClauseId{v});
  return out;
}

std::string Bytes(std::initializer_list<unsigned char> b) {
  return std::string(b.begin(), b.end());
}

TEST(DimacsTest, TwoClauseFile) {
  auto doc = ParseDimacs("p cnf 2 2\n1 2 0\n-1 0\n");
  EXPECT_EQ(doc.declared_vars, 2u);
  EXPECT_EQ(doc.declared_clauses, 2u);
  EXPECT_EQ(oracle::ToRaw(doc.formula), (oracle::RawCnf{{1, 2}, {-1}}));
  EXPECT_EQ(doc.formula.clause(ClauseId{2}), (Clause{-1}));
}

TEST(DimacsTest, SkipsComments) {
  auto doc = ParseDimacs("c x\np cnf 1 1\n1 0\n");
  EXPECT_EQ(oracle::ToRaw(doc.formula), (oracle::RawCnf{{1}}));
}

TEST(DimacsTest, UnterminatedClauseReportsLine) {
  try {
    ParseDimacs("p cnf 2 1\n1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), 2u);
  }
}

TEST(DimacsTest, MissingHeader) {
  EXPECT_THROW(ParseDimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(ParseDimacs(""), ParseError);
}

TEST(DimacsTest, OutOfRangeLiteralWarnsOrFails) {
  auto doc = ParseDimacs("p cnf 1 1\n1 2 0\n");
  EXPECT_EQ(doc.warnings.size(), 1u);
  EXPECT_THROW(ParseDimacs("p cnf 1 1\n1 2 0\n", /*strict=*/true), ParseError);
}

TEST(DimacsTest, KeepsTautologiesForIdAlignment) {
  auto doc = ParseDimacs("p cnf 2 2\n1 -1 0\n2 0\n");
  EXPECT_EQ(doc.formula.size(), 2u);
  EXPECT_TRUE(doc.formula.clause(ClauseId{1}).is_tautology());
}

TEST(DratTextTest, UnitThenEmpty) {
  auto steps = ParseDratText("1 0\n0\n");
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0], ProofStep::Add(Clause{1}));
  EXPECT_EQ(steps[1], ProofStep::Add(Clause{}));
  EXPECT_EQ(WriteDratText(steps), "1 0\n0\n");
}

TEST(DratTextTest, Deletion) {
  auto steps = ParseDratText("d 1 2 0\n");
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0], ProofStep::Delete(Clause{1, 2}));
}

TEST(DratTextTest, WhitespaceInsensitive) {
  EXPECT_EQ(ParseDratText("1 2\n0 d\n1\t2 0 0"), ParseDratText("1 2 0\nd 1 2 0\n0\n"));
}

TEST(DratTextTest, Unterminated) { EXPECT_THROW(ParseDratText("1 2"), ParseError); }

TEST(DratBinaryTest, EncodesLiterals) {
  const std::string bytes = Bytes({0x61, 0x02, 0x05, 0x00});
  auto steps = ParseDratBinary(bytes);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0], ProofStep::Add(Clause{1, -2}));
  EXPECT_EQ(WriteDratBinary(steps), bytes);
}

TEST(DratBinaryTest, MultiByteLiteral) {
  // 100 -> u = 200 = 0xc8 -> 0xc8 0x01.
  const std::string bytes = Bytes({0x64, 0xc8, 0x01, 0x00});
  auto steps = ParseDratBinary(bytes);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0], ProofStep::Delete(Clause{100}));
  EXPECT_EQ(WriteDratBinary(steps), bytes);
}

TEST(DratBinaryTest, Errors) {
  auto offset_of = [](const std::string& bytes) -> size_t {
    try {
      ParseDratBinary(bytes);
    } catch (const ParseError& e) {
      return e.location();
    }
    return SIZE_MAX;
  };
  EXPECT_EQ(offset_of(Bytes({0x61, 0x02, 0x00, 0x78})), 3u);  // unknown tag
  EXPECT_EQ(offset_of(Bytes({0x61, 0x01, 0x00})), 1u);        // u = 1
  EXPECT_EQ(offset_of(Bytes({0x61, 0x80, 0x00})), 1u);        // u = 0
  EXPECT_EQ(offset_of(Bytes({0x61, 0x02})), 0u);              // truncated
  EXPECT_EQ(offset_of(Bytes({0x61, 0x82})), 1u);              // truncated literal
}

TEST(DratDetectTest, FirstByteAndNul) {
  EXPECT_TRUE(LooksLikeBinaryDrat(Bytes({0x61, 0x02, 0x00})));
  EXPECT_FALSE(LooksLikeBinaryDrat("d 1 2 0\n"));
  EXPECT_FALSE(LooksLikeBinaryDrat("1 0\n"));
  EXPECT_EQ(ParseDrat("d 1 2 0\n").size(), 1u);
}

TEST(LratTest, RupChain) {
  auto lines = ParseLrat("3 2 0 1 2 0\n", 2);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].id, ClauseId{3});
  EXPECT_EQ(lines[0].step.clause, (Clause{2}));
  EXPECT_EQ(lines[0].step.hints.rup_chain, Ids({1, 2}));
  EXPECT_TRUE(lines[0].step.hints.rat_groups.empty());
}

TEST(LratTest, DeletionRecord) {
  auto lines = ParseLrat("4 d 1 0\n", 3);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_FALSE(lines[0].step.is_add());
  EXPECT_EQ(lines[0].step.deleted_ids, Ids({1}));
}

TEST(LratTest, EmptyClauseWithChain) {
  auto lines = ParseLrat("3 2 0 1 2 0\n5 0 3 2 0\n", 2);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_TRUE(lines[1].step.clause.empty());
  EXPECT_EQ(lines[1].step.hints.rup_chain, Ids({3, 2}));
}

TEST(LratTest, RatGroups) {
  auto lines = ParseLrat("5 1 0 4 -2 1 3 -3 0\n", 4);
  const HintBlock& h = lines[0].step.hints;
  EXPECT_EQ(h.rup_chain, Ids({4}));
  ASSERT_EQ(h.rat_groups.size(), 2u);
  EXPECT_EQ(h.rat_groups[0], (RatGroup{ClauseId{2}, Ids({1, 3})}));
  EXPECT_EQ(h.rat_groups[1], (RatGroup{ClauseId{3}, {}}));
}

TEST(LratTest, Errors) {
  EXPECT_THROW(ParseLrat("4 1 0 1 0\n3 2 0 1 0\n", 2), ParseError);  // order
  EXPECT_THROW(ParseLrat("2 1 0 1 0\n", 2), ParseError);   // id not fresh
  EXPECT_THROW(ParseLrat("3 1 0 7 0\n", 2), ParseError);   // unknown hint
  EXPECT_THROW(ParseLrat("3 d 1 0\n4 1 0 1 0\n", 2), ParseError);  // deleted
  EXPECT_THROW(ParseLrat("3 1 0 1\n", 2), ParseError);     // unterminated
}

TEST(ErTest, ExtensionFamily) {
  auto lines = ParseEr("4 e 3 1 2 0\n");
  ASSERT_EQ(lines.size(), 1u);
  const auto& ext = std::get<Extension>(lines[0].step);
  EXPECT_EQ(ext.fresh, Variable{3});
  EXPECT_EQ(ext.p, Literal(1));
  auto family = ExtensionClauses(ext);
  ASSERT_EQ(family.size(), 3u);
  EXPECT_EQ(family[0], (Clause{3, -1}));
  EXPECT_EQ(family[1], (Clause{3, -2}));
  EXPECT_EQ(family[2], (Clause{-3, 1, 2}));
}

TEST(ErTest, EmptyConjunction) {
  auto family = ExtensionClauses(Extension{Variable{4}, Literal(1), {}});
  ASSERT_EQ(family.size(), 2u);
  EXPECT_EQ(family[0], (Clause{4, -1}));
  EXPECT_EQ(family[1], (Clause{4}));
}

TEST(ErTest, ChainSyntax) {
  auto lines = ParseEr("7 2 3 0 4 6 0\n");
  ASSERT_EQ(lines.size(), 1u);
  const auto& chain = std::get<ChainStep>(lines[0].step);
  EXPECT_EQ(chain.claimed, (Clause{2, 3}));
  EXPECT_EQ(chain.antecedents, Ids({4, 6}));
}

TEST(ErTest, Errors) {
  EXPECT_THROW(ParseEr("4 2 0 0\n"), ParseError);                 // no antecedents
  EXPECT_THROW(ParseEr("4 e 3 1 2 0\n5 1 0 4 0\n"), ParseError);  // id collision
  EXPECT_THROW(ParseEr("4 e 3 3 0\n"), ParseError);               // x in body
  EXPECT_THROW(ParseEr("4 5 0 1 0\n5 e 4 1 0\n"), ParseError);    // not fresh
}

TEST(RoundTripProperty, AllFormats) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const int vars = 2 + static_cast<int>(rng() % 20);
    const Formula f = testgen::RandomFormula(rng, vars, static_cast<int>(rng() % 30));
    const auto reparsed = ParseDimacs(WriteDimacs(f), /*strict=*/true);
    ASSERT_EQ(oracle::ToRaw(reparsed.formula), oracle::ToRaw(f));
    ASSERT_EQ(reparsed.declared_vars, f.num_vars());

    const auto drat = testgen::RandomDrat(rng, vars, static_cast<int>(rng() % 40));
    ASSERT_EQ(ParseDratText(WriteDratText(drat)), drat);
    ASSERT_EQ(ParseDratBinary(WriteDratBinary(drat)), drat);
    ASSERT_EQ(ParseDrat(WriteDratBinary(drat)), ParseDrat(WriteDratText(drat)));

    const uint64_t m = rng() % 10;
    const auto lrat = testgen::RandomLrat(rng, vars, m, static_cast<int>(rng() % 40));
    ASSERT_EQ(ParseLrat(WriteLrat(lrat), m), lrat);

    const auto er = testgen::RandomEr(rng, vars, static_cast<int>(rng() % 40));
    ASSERT_EQ(ParseEr(WriteEr(er)), er);
  }
}

TEST(DratBinaryProperty, TruncationsAreRejected) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto drat = testgen::RandomDrat(rng, 30, 1 + static_cast<int>(rng() % 10));
    const std::string bytes = WriteDratBinary(drat);
    std::vector<size_t> boundaries = {0};
    for (size_t k = 1; k <= drat.size(); ++k) {
      boundaries.push_back(WriteDratBinary({drat.begin(), drat.begin() + k}).size());
    }
    for (size_t cut = 0; cut <= bytes.size(); ++cut) {
      const std::string_view prefix(bytes.data(), cut);
      const bool at_boundary =
          std::find(boundaries.begin(), boundaries.end(), cut) != boundaries.end();
      if (at_boundary) {
        EXPECT_NO_THROW(ParseDratBinary(prefix));
      } else {
        EXPECT_THROW(ParseDratBinary(prefix), ParseError) << "cut " << cut;
      }
    }
  }
}

}  // namespace
}  // namespace satproof
