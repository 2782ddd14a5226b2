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

#ifndef SATPROOF_PROPAGATE_H_
#define SATPROOF_PROPAGATE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "satproof/core.h"

namespace satproof {

enum class Value : int8_t { kFalse = -1, kUnassigned = 0, kTrue = 1 };

// Partial assignment in assignment order. Each entry carries the id of the
// clause that forced it; an invalid id marks an assumption.
class Trail {
 public:
  struct Entry {
    Literal literal;
    ClauseId reason;  // invalid for assumptions

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Value value(Literal l) const;
  bool assigned(Variable v) const;
  // The variable must be unassigned.
  void Assign(Literal l, ClauseId reason);
  void Assume(Literal l) { Assign(l, ClauseId{}); }
  // Unassigns everything past the first `size` entries.
  void Rollback(size_t size);

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }
  const Entry& operator[](size_t i) const { return entries_[i]; }
  // Literals in assignment order.
  std::vector<Literal> Literals() const;

  friend bool operator==(const Trail& a, const Trail& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  std::vector<Value> values_;  // indexed by Literal::code()
};

struct PropagationOutcome {
  bool conflict = false;
  ClauseId conflict_clause;
  uint64_t visited_clauses = 0;
  // On conflict: the reasons contributing to the conflict in propagation
  // order, followed by the conflict clause itself. Replayable as an LRAT
  // hint chain.
  std::vector<ClauseId> antecedents;
};

struct RupResult {
  bool rup = false;
  std::vector<ClauseId> antecedents;
  uint64_t visited_clauses = 0;
};

struct GuidedResult {
  enum class Status { kRup, kBadHint, kUnknownId };
  Status status = Status::kBadHint;
  // 1-based index of the offending hint, or the chain length when the chain
  // ran out without producing a conflict.
  size_t position = 0;
  // Set for kBadHint when every hint was unit and no conflict followed.
  bool exhausted = false;
  uint64_t visited_clauses = 0;

  bool ok() const { return status == Status::kRup; }
};

struct RatResult {
  bool rat = false;
  std::vector<RatGroup> groups;
  // When not RAT: the first candidate whose resolvent is not RUP.
  ClauseId witness;
  uint64_t visited_clauses = 0;
};

enum class PivotPolicy { kFirstLiteral, kAny };

struct PivotSearch {
  std::optional<Literal> pivot;
  // Result for the accepted pivot, or for the last pivot tried.
  RatResult result;
  // Work over every pivot tried.
  uint64_t visited_clauses = 0;

  bool found() const { return pivot.has_value(); }
};

// Two-watched-literal unit propagation over an owned formula. Unit and empty
// clauses are kept on dedicated lists; tautological clauses are never
// attached and so never serve as reasons.
//
// Every query starts from the empty trail and restores the trail, the watch
// lists and the watched-literal order of each clause before returning.
class Propagator {
 public:
  Propagator() = default;
  explicit Propagator(Formula formula);

  const Formula& formula() const { return formula_; }
  const Trail& trail() const { return trail_; }

  ClauseId AddClause(Clause clause);
  void AddClauseWithId(ClauseId id, Clause clause);
  // Throws UnknownClause.
  Clause RemoveClause(ClauseId id);
  std::optional<ClauseId> RemoveClauseByContent(const Clause& clause);

  // Assumes the negation of every literal of `clause` and propagates.
  RupResult CheckRup(const Clause& clause);
  // Replays `chain` under the negation of `clause`: every hinted clause must
  // be unit (its open literal is assigned) or falsified (success).
  GuidedResult CheckRupGuided(const Clause& clause,
                              std::span<const ClauseId> chain);
  // Checks every resolvent of `clause` on `pivot` with the live clauses
  // containing ~pivot, in id order. Throws ContractViolation when the pivot
  // is not in the clause.
  RatResult CheckRat(const Clause& clause, Literal pivot);
  // Tries the first literal, or every literal in clause order under kAny.
  PivotSearch FindPivot(const Clause& clause, PivotPolicy policy);

  // Propagates the formula with no assumptions and leaves the fixpoint on
  // the trail until ClearTopLevel(). Used for operational deletion checks.
  PropagationOutcome PropagateTopLevel();
  void ClearTopLevel();
  // True when the clause is the reason of a current trail entry, or has
  // exactly one non-false literal and it is true.
  bool IsUnitOrReason(ClauseId id) const;

  // Low-level access for tests and the free functions below.
  void Assume(Literal l);
  PropagationOutcome Propagate();
  void Reset();

  using WatchLists = std::vector<std::vector<ClauseId>>;
  const WatchLists& watches() const { return watches_; }
  // Current working literal order of a clause (watched literals first).
  std::span<const Literal> WorkingLiterals(ClauseId id) const;

 private:
  struct UndoEntry {
    enum class Kind { kSwap, kMove } kind;
    ClauseId clause;
    uint32_t a = 0;  // swap: position; move: from literal code
    uint32_t b = 0;  // swap: position; move: insertion index
    uint32_t to = 0;
  };

  void EnsureVar(uint32_t var);
  void Attach(ClauseId id, const Clause& clause);
  void Detach(ClauseId id, const Clause& clause);
  void SwapLiterals(ClauseId id, uint32_t i, uint32_t j);
  void Undo(size_t mark);
  // Runs unit clauses then watched propagation from `head`.
  PropagationOutcome PropagateFrom(size_t head);
  std::vector<ClauseId> AnalyzeConflict(ClauseId conflict, size_t base);
  // Assumes ~l for each literal; returns false when the clause is a
  // tautology (an assumption clashes).
  bool AssumeNegation(const Clause& clause);

  friend PropagationOutcome Propagate(const Formula&, Trail&);

  Formula formula_;
  Trail trail_;
  size_t top_level_mark_ = 0;
  WatchLists watches_;  // by Literal::code(): clauses watching that literal
  std::vector<std::vector<Literal>> working_;  // by clause id
  std::vector<ClauseId> units_;                // sorted
  std::vector<UndoEntry> undo_;
  std::vector<uint8_t> seen_;
};

// Free-function forms over an immutable formula. `trail` is extended in
// place to the propagation fixpoint (or up to the conflict).
PropagationOutcome Propagate(const Formula& formula, Trail& trail);
RupResult CheckRup(const Formula& formula, const Clause& clause);
GuidedResult CheckRupGuided(const Formula& formula, const Clause& clause,
                            std::span<const ClauseId> chain);
RatResult CheckRat(const Formula& formula, const Clause& clause,
                   Literal pivot);
PivotSearch FindPivot(const Formula& formula, const Clause& clause,
                      PivotPolicy policy);

}  // namespace satproof

#endif  // SATPROOF_PROPAGATE_H_
