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

// Independent reference implementations used only by tests. They operate on
// plain integer vectors and share no code with the library's checking paths.

#ifndef SATPROOF_TESTS_ORACLES_H_
#define SATPROOF_TESTS_ORACLES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "satproof/core.h"

namespace satproof::oracle {

using RawClause = std::vector<int>;
using RawCnf = std::vector<RawClause>;

RawCnf ToRaw(const Formula& formula);
Formula FromRaw(const RawCnf& cnf);
int MaxVar(const RawCnf& cnf);

// Bit i-1 of `assignment` is the value of variable i.
bool Satisfies(const RawClause& clause, uint64_t assignment);
bool Satisfies(const RawCnf& cnf, uint64_t assignment);
// Exhaustive enumeration over variables 1..num_vars.
std::optional<uint64_t> FindModel(const RawCnf& cnf, int num_vars);
bool IsUnsat(const RawCnf& cnf);
bool Entails(const RawCnf& cnf, const RawClause& clause);

struct NaiveUp {
  bool conflict = false;
  std::set<int> assigned;  // literals made true
};
// Iterate-until-stable unit propagation: every round scans all clauses.
NaiveUp NaiveUnitPropagate(const RawCnf& cnf, const std::vector<int>& assumed);
// C is RUP in F according to naive propagation.
bool NaiveRup(const RawCnf& cnf, const RawClause& clause);

// Reference checkers over raw documents: true iff the document derives the
// empty clause under the plain definitions (DRAT in specified mode).
struct RawDratStep {
  bool add = true;
  RawClause clause;
};
bool NaiveDratValid(const RawCnf& cnf, const std::vector<RawDratStep>& proof,
                    bool first_literal_pivot);

struct RawLratLine {
  int64_t id = 0;
  bool add = true;
  RawClause clause;
  std::vector<int64_t> rup;
  std::vector<std::pair<int64_t, std::vector<int64_t>>> groups;
  std::vector<int64_t> deleted;
};
bool NaiveLratValid(const RawCnf& cnf, const std::vector<RawLratLine>& lines);

struct RawErLine {
  enum Kind { kExtend, kChain, kDelete };
  int64_t id = 0;
  Kind kind = kChain;
  int fresh = 0;
  int p = 0;
  std::vector<int> ls;
  RawClause claimed;
  std::vector<int64_t> ids;
};
bool NaiveErValid(const RawCnf& cnf, int num_vars,
                  const std::vector<RawErLine>& lines);

RawCnf RandomCnf(std::mt19937_64& rng, int vars, int clauses, int min_width,
                 int max_width);

}  // namespace satproof::oracle

#endif  // SATPROOF_TESTS_ORACLES_H_
