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

#ifndef SATPROOF_FORMATS_H_
#define SATPROOF_FORMATS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "satproof/core.h"

namespace satproof {

// Raised by every parser. `location` is a 1-based line number for text
// formats and a 0-based byte offset for binary DRAT.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, size_t location)
      : Error(message), location_(location) {}
  size_t location() const { return location_; }

 private:
  size_t location_;
};

// LRAT hints: a RUP chain, then one group per RAT candidate.
struct HintBlock {
  std::vector<ClauseId> rup_chain;
  std::vector<RatGroup> rat_groups;

  bool empty() const { return rup_chain.empty() && rat_groups.empty(); }
  friend bool operator==(const HintBlock&, const HintBlock&) = default;
};

// A DRAT or LRAT step. DRAT deletes by content (`clause`); LRAT deletes by
// id (`deleted_ids`) and carries hints on additions.
struct ProofStep {
  enum class Kind { kAdd, kDelete };

  Kind kind = Kind::kAdd;
  Clause clause;
  HintBlock hints;
  std::vector<ClauseId> deleted_ids;

  static ProofStep Add(Clause c) { return {Kind::kAdd, std::move(c), {}, {}}; }
  static ProofStep Delete(Clause c) {
    return {Kind::kDelete, std::move(c), {}, {}};
  }
  bool is_add() const { return kind == Kind::kAdd; }

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct LratLine {
  ClauseId id;
  ProofStep step;

  friend bool operator==(const LratLine&, const LratLine&) = default;
};

// Definition x <-> (p | (l1 & ... & lk)) over a fresh variable x.
struct Extension {
  Variable fresh;
  Literal p;
  std::vector<Literal> ls;

  friend bool operator==(const Extension&, const Extension&) = default;
};

// Linear resolution: fold the antecedents left to right; the result must
// subsume `claimed`.
struct ChainStep {
  Clause claimed;
  std::vector<ClauseId> antecedents;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct Deletion {
  std::vector<ClauseId> ids;

  friend bool operator==(const Deletion&, const Deletion&) = default;
};

using ErStep = std::variant<Extension, ChainStep, Deletion>;

struct ErLine {
  ClauseId id;
  ErStep step;

  friend bool operator==(const ErLine&, const ErLine&) = default;
};

// Clauses of the definition, in id order:
//   {x,~p}, {x,~l1,...,~lk}, {~x,p,l1}, ..., {~x,p,lk}.
// With k = 0 this is {x,~p}, {x}.
std::vector<Clause> ExtensionClauses(const Extension& extension);

struct DimacsDocument {
  Formula formula;
  uint32_t declared_vars = 0;
  uint64_t declared_clauses = 0;
  std::vector<std::string> warnings;
};

// In strict mode out-of-range literals and clause-count mismatches are
// errors; otherwise they are reported as warnings.
DimacsDocument ParseDimacs(std::string_view text, bool strict = false);
std::string WriteDimacs(const Formula& formula);

std::vector<ProofStep> ParseDratText(std::string_view text);
std::vector<ProofStep> ParseDratBinary(std::string_view bytes);
// Binary when the first byte is 'a' or 'd' and the input holds a NUL byte
// (text DRAT never does).
bool LooksLikeBinaryDrat(std::string_view bytes);
std::vector<ProofStep> ParseDrat(std::string_view bytes);
std::string WriteDratText(const std::vector<ProofStep>& steps);
std::string WriteDratBinary(const std::vector<ProofStep>& steps);

// `num_original_clauses`, when known, enables the liveness check on hints
// and the lower bound on addition ids.
std::vector<LratLine> ParseLrat(
    std::string_view text,
    std::optional<uint64_t> num_original_clauses = std::nullopt);
std::string WriteLrat(const std::vector<LratLine>& lines);

std::vector<ErLine> ParseEr(std::string_view text);
std::string WriteEr(const std::vector<ErLine>& lines);

}  // namespace satproof

#endif  // SATPROOF_FORMATS_H_
