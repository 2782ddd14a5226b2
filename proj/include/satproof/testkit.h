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

#ifndef SATPROOF_TESTKIT_H_
#define SATPROOF_TESTKIT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "satproof/core.h"
#include "satproof/formats.h"

namespace satproof {

class OracleRangeError : public Error {
 public:
  using Error::Error;
};

inline constexpr uint32_t kBruteForceMaxVars = 24;

// model[v] is the value of variable v (index 0 unused).
using Model = std::vector<bool>;

// Exhaustive truth-table search. Throws OracleRangeError above
// kBruteForceMaxVars variables.
std::optional<Model> BruteForce(const Formula& formula);
// formula |= clause, i.e. formula & ~clause is unsatisfiable.
bool Entails(const Formula& formula, const Clause& clause);
bool SatisfiesAll(const Formula& formula, const Model& model);

struct SolveStats {
  uint64_t conflicts = 0;
  uint64_t decisions = 0;
  uint64_t propagations = 0;
};

struct SolveResult {
  bool sat = false;
  Model model;                    // when sat
  std::vector<ProofStep> proof;  // when unsat; ends with the empty clause
  SolveStats stats;
};

// Minimal CDCL: watched literals, first-UIP learning, VSIDS-style activity,
// phase saving, geometric restarts and learned-clause reduction. Every
// learned clause and every deletion is logged to the DRAT proof. The seed
// drives initial phases and occasional random decisions.
SolveResult CdclSolve(const Formula& formula, uint64_t seed = 0);

// n+1 pigeons into n holes; x(i,j) = (i-1)*n + j.
Formula GenPhp(int n);
// `clauses` clauses of `width` distinct variables over 1..vars.
Formula GenRandom(int vars, int clauses, int width, uint64_t seed);

}  // namespace satproof

#endif  // SATPROOF_TESTKIT_H_
