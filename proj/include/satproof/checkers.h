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

#ifndef SATPROOF_CHECKERS_H_
#define SATPROOF_CHECKERS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satproof/core.h"
#include "satproof/formats.h"
#include "satproof/propagate.h"

namespace satproof {

// Specified DRAT applies every deletion literally. Operational DRAT ignores
// deletions of clauses that are unit or reasons under top-level propagation.
enum class Flavor { kSpecified, kOperational };

struct CheckMode {
  Flavor flavor = Flavor::kSpecified;
  PivotPolicy pivot_policy = PivotPolicy::kFirstLiteral;

  static CheckMode Specified() { return {}; }
  static CheckMode Operational() { return {Flavor::kOperational}; }
};

enum class RejectReason {
  kNone,
  kNotRat,
  kNoBottom,
  kBadHint,
  kMissingRatCandidate,
  kUnknownId,
  kIdOrder,
  kNotFresh,
  kNoPivot,
  kNotSubsumed,
};

std::string_view ToString(RejectReason reason);

// What the checker learned about one proof step. For additions `id` is the
// id given to the new clause; for deletions it is the removed clause (invalid
// when the deletion was ignored).
struct StepRecord {
  ProofStep::Kind kind = ProofStep::Kind::kAdd;
  Clause clause;
  ClauseId id;
  std::vector<ClauseId> antecedents;
  std::optional<Literal> pivot;
  std::vector<RatGroup> rat_groups;
  bool ignored = false;
};

struct CheckReport {
  bool verified = false;
  // Index of the rejected step (proof length for kNoBottom).
  size_t rejected_step = 0;
  RejectReason reason = RejectReason::kNone;
  // For kNoPivot: 1-based position in the antecedent list.
  size_t reason_position = 0;
  std::string detail;

  uint64_t steps_checked = 0;
  uint64_t rat_steps = 0;
  uint64_t visited_clauses_total = 0;
  uint64_t ignored_deletions = 0;
  std::optional<ClauseId> bottom;
  // Filled only when requested; one entry per checked step.
  std::vector<StepRecord> per_step;
};

// Checks additions for RUP, then RAT (with the mode's pivot policy), in
// proof order. Stops at the first checked empty clause; steps after it are
// ignored. A formula that already contains the empty clause verifies
// without consulting the proof.
CheckReport CheckDrat(const Formula& formula,
                      const std::vector<ProofStep>& proof, CheckMode mode,
                      bool record_steps = false);

// Hint-guided checking. Ids of additions must increase and exceed every id
// of the formula. For RAT steps the pivot is the first literal, and the
// candidate groups must cover exactly the live clauses containing its
// negation; each group is replayed as the RUP chain followed by the group's
// own chain, under the negated resolvent. A step whose RUP chain runs out
// is accepted as a RAT with no candidates when no live clause contains the
// negated first literal.
CheckReport CheckLrat(const Formula& formula,
                      const std::vector<LratLine>& proof);

// Incremental ER checking; CheckEr and the translator's self-check share it.
class ErChecker {
 public:
  explicit ErChecker(Formula formula);

  // Applies one step; returns false (and fills the report) on rejection.
  bool Apply(const ErLine& line);
  bool verified() const { return report_.verified; }
  const CheckReport& report() const { return report_; }
  const Formula& formula() const { return formula_; }
  // Left fold of the antecedents; nullopt if some step has zero or several
  // clashing variables, with `failed_position` set (1-based).
  std::optional<Clause> Fold(const std::vector<ClauseId>& antecedents,
                             size_t* failed_position);

 private:
  bool Reject(RejectReason reason, std::string detail, size_t position = 0);

  Formula formula_;
  uint32_t max_var_ = 0;
  ClauseId next_id_;
  size_t index_ = 0;
  CheckReport report_;
  std::vector<uint8_t> mark_;
};

CheckReport CheckEr(const Formula& formula, const std::vector<ErLine>& proof);

}  // namespace satproof

#endif  // SATPROOF_CHECKERS_H_
