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

// Backward checking, trimming, LRAT emission and translation to extended
// resolution.

#ifndef SATPROOF_PIPELINE_H_
#define SATPROOF_PIPELINE_H_

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "satproof/checkers.h"
#include "satproof/core.h"
#include "satproof/formats.h"

namespace satproof {

class ForwardRejected : public Error {
 public:
  ForwardRejected(size_t step, RejectReason reason, const std::string& detail)
      : Error("proof rejected at step " + std::to_string(step) + " (" +
              std::string(ToString(reason)) + "): " + detail),
        step_(step),
        reason_(reason) {}
  size_t step() const { return step_; }
  RejectReason reason() const { return reason_; }

 private:
  size_t step_;
  RejectReason reason_;
};

class TranslationInvariantViolation : public Error {
 public:
  using Error::Error;
};

struct CheckedStep {
  StepRecord record;
  bool core = false;
};

struct CheckedProof {
  Formula formula;
  CheckMode mode;
  // Steps up to and including the first empty-clause addition.
  std::vector<CheckedStep> steps;
  std::set<ClauseId> core_formula_ids;
  // Set when the formula itself contains the empty clause.
  std::optional<ClauseId> formula_bottom;

  size_t num_core_additions() const;
};

// Throws ForwardRejected when the forward check fails.
CheckedProof BackwardCheck(const Formula& formula,
                           const std::vector<ProofStep>& proof,
                           CheckMode mode);

struct TrimmedProof {
  std::vector<ProofStep> drat;
  Formula core_cnf;
};

// Core additions in order, with deletions placed after each clause's last
// use. Checked against `core_cnf`.
TrimmedProof EmitTrimmed(const CheckedProof& cp);

// Checked against the original formula; addition ids continue after it.
std::vector<LratLine> EmitLrat(const CheckedProof& cp);

// Every emitted line is re-checked; a failure throws
// TranslationInvariantViolation.
std::vector<ErLine> ToEr(const Formula& formula, const CheckedProof& cp);

}  // namespace satproof

#endif  // SATPROOF_PIPELINE_H_
