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

#include "satproof/propagate.h"

#include <algorithm>
#include <cassert>

namespace satproof {

Value Trail::value(Literal l) const {
  const uint32_t code = l.code();
  return code < values_.size() ? values_[code] : Value::kUnassigned;
}

bool Trail::assigned(Variable v) const {
  return value(Literal(v, false)) != Value::kUnassigned;
}

void Trail::Assign(Literal l, ClauseId reason) {
  const uint32_t needed = std::max(l.code(), (~l).code()) + 1;
  if (values_.size() < needed) values_.resize(needed, Value::kUnassigned);
  assert(values_[l.code()] == Value::kUnassigned);
  values_[l.code()] = Value::kTrue;
  values_[(~l).code()] = Value::kFalse;
  entries_.push_back({l, reason});
}

void Trail::Rollback(size_t size) {
  while (entries_.size() > size) {
    const Literal l = entries_.back().literal;
    values_[l.code()] = Value::kUnassigned;
    values_[(~l).code()] = Value::kUnassigned;
    entries_.pop_back();
  }
}

std::vector<Literal> Trail::Literals() const {
  std::vector<Literal> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.literal);
  return out;
}

Propagator::Propagator(Formula formula) : formula_(std::move(formula)) {
  EnsureVar(formula_.num_vars());
  formula_.ForEach([this](ClauseId id, const Clause& c) { Attach(id, c); });
}

void Propagator::EnsureVar(uint32_t var) {
  const size_t codes = 2 * static_cast<size_t>(var) + 2;
  if (watches_.size() < codes) watches_.resize(codes);
  if (seen_.size() < var + 1) seen_.resize(var + 1, 0);
}

void Propagator::Attach(ClauseId id, const Clause& clause) {
  EnsureVar(clause.MaxVariable());
  if (working_.size() <= id.value) working_.resize(id.value + 1);
  working_[id.value].assign(clause.begin(), clause.end());
  if (clause.is_tautology() || clause.empty()) return;
  if (clause.is_unit()) {
    units_.insert(std::lower_bound(units_.begin(), units_.end(), id), id);
    return;
  }
  watches_[clause[0].code()].push_back(id);
  watches_[clause[1].code()].push_back(id);
}

void Propagator::Detach(ClauseId id, const Clause& clause) {
  std::vector<Literal>& lits = working_[id.value];
  if (!clause.is_tautology() && !clause.empty()) {
    if (clause.is_unit()) {
      units_.erase(std::lower_bound(units_.begin(), units_.end(), id));
    } else {
      for (int w = 0; w < 2; ++w) {
        auto& list = watches_[lits[w].code()];
        list.erase(std::find(list.begin(), list.end(), id));
      }
    }
  }
  lits.clear();
}

ClauseId Propagator::AddClause(Clause clause) {
  const ClauseId id = formula_.next_id();
  AddClauseWithId(id, std::move(clause));
  return id;
}

void Propagator::AddClauseWithId(ClauseId id, Clause clause) {
  assert(trail_.empty());
  Attach(id, clause);
  formula_.AddClauseWithId(id, std::move(clause));
}

Clause Propagator::RemoveClause(ClauseId id) {
  assert(trail_.empty());
  Detach(id, formula_.clause(id));
  return formula_.RemoveClause(id);
}

std::optional<ClauseId> Propagator::RemoveClauseByContent(
    const Clause& clause) {
  const std::vector<ClauseId> ids = formula_.FindByContent(clause);
  if (ids.empty()) return std::nullopt;
  RemoveClause(ids.back());
  return ids.back();
}

std::span<const Literal> Propagator::WorkingLiterals(ClauseId id) const {
  if (id.value >= working_.size()) return {};
  return working_[id.value];
}

void Propagator::SwapLiterals(ClauseId id, uint32_t i, uint32_t j) {
  std::swap(working_[id.value][i], working_[id.value][j]);
  undo_.push_back({UndoEntry::Kind::kSwap, id, i, j, 0});
}

void Propagator::Undo(size_t mark) {
  while (undo_.size() > mark) {
    const UndoEntry e = undo_.back();
    undo_.pop_back();
    if (e.kind == UndoEntry::Kind::kSwap) {
      std::swap(working_[e.clause.value][e.a], working_[e.clause.value][e.b]);
    } else {
      auto& to = watches_[e.to];
      assert(!to.empty() && to.back() == e.clause);
      to.pop_back();
      auto& from = watches_[e.a];
      from.insert(from.begin() + e.b, e.clause);
    }
  }
}

void Propagator::Assume(Literal l) {
  EnsureVar(l.variable().index);
  trail_.Assume(l);
}

bool Propagator::AssumeNegation(const Clause& clause) {
  EnsureVar(clause.MaxVariable());
  for (Literal l : clause) {
    const Value v = trail_.value(l);
    if (v == Value::kTrue) return false;
    if (v == Value::kUnassigned) trail_.Assume(~l);
  }
  return true;
}

PropagationOutcome Propagator::PropagateFrom(size_t head) {
  PropagationOutcome out;
  auto conflict = [&](ClauseId id) {
    out.conflict = true;
    out.conflict_clause = id;
    out.antecedents = AnalyzeConflict(id, 0);
    return out;
  };

  if (auto empty = formula_.FirstEmptyClause()) {
    ++out.visited_clauses;
    return conflict(*empty);
  }
  for (ClauseId id : units_) {
    ++out.visited_clauses;
    const Literal l = working_[id.value][0];
    const Value v = trail_.value(l);
    if (v == Value::kTrue) continue;
    if (v == Value::kFalse) return conflict(id);
    trail_.Assign(l, id);
  }

  while (head < trail_.size()) {
    const Literal falsified = ~trail_[head++].literal;
    if (falsified.code() >= watches_.size()) continue;
    std::vector<ClauseId>& ws = watches_[falsified.code()];
    size_t i = 0;
    size_t j = 0;
    std::optional<ClauseId> conflict_id;
    while (i < ws.size()) {
      const ClauseId id = ws[i++];
      ++out.visited_clauses;
      std::vector<Literal>& lits = working_[id.value];
      if (lits[0] == falsified) SwapLiterals(id, 0, 1);
      if (trail_.value(lits[0]) == Value::kTrue) {
        ws[j++] = id;
        continue;
      }
      bool moved = false;
      for (uint32_t k = 2; k < lits.size(); ++k) {
        if (trail_.value(lits[k]) != Value::kFalse) {
          SwapLiterals(id, 1, k);
          watches_[lits[1].code()].push_back(id);
          undo_.push_back({UndoEntry::Kind::kMove, id, falsified.code(),
                           static_cast<uint32_t>(j), lits[1].code()});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = id;
      if (trail_.value(lits[0]) == Value::kFalse) {
        conflict_id = id;
        while (i < ws.size()) ws[j++] = ws[i++];
        break;
      }
      trail_.Assign(lits[0], id);
    }
    ws.resize(j);
    if (conflict_id) return conflict(*conflict_id);
  }
  return out;
}

std::vector<ClauseId> Propagator::AnalyzeConflict(ClauseId conflict,
                                                  size_t base) {
  std::vector<uint32_t> touched;
  auto mark = [&](Literal l) {
    const uint32_t v = l.variable().index;
    if (!seen_[v]) {
      seen_[v] = 1;
      touched.push_back(v);
    }
  };
  for (Literal l : formula_.clause(conflict)) mark(l);
  std::vector<ClauseId> chain;
  for (size_t pos = trail_.size(); pos-- > base;) {
    const Trail::Entry& e = trail_[pos];
    if (!seen_[e.literal.variable().index] || !e.reason.valid()) continue;
    chain.push_back(e.reason);
    for (Literal l : formula_.clause(e.reason)) mark(l);
  }
  for (uint32_t v : touched) seen_[v] = 0;
  std::reverse(chain.begin(), chain.end());
  chain.push_back(conflict);
  return chain;
}

PropagationOutcome Propagator::Propagate() { return PropagateFrom(0); }

void Propagator::Reset() {
  trail_.Rollback(0);
  Undo(0);
}

RupResult Propagator::CheckRup(const Clause& clause) {
  assert(trail_.empty());
  const size_t mark = undo_.size();
  RupResult result;
  if (!AssumeNegation(clause)) {
    result.rup = true;
  } else {
    PropagationOutcome out = PropagateFrom(0);
    result.rup = out.conflict;
    result.antecedents = std::move(out.antecedents);
    result.visited_clauses = out.visited_clauses;
  }
  trail_.Rollback(0);
  Undo(mark);
  return result;
}

GuidedResult Propagator::CheckRupGuided(const Clause& clause,
                                        std::span<const ClauseId> chain) {
  assert(trail_.empty());
  GuidedResult result;
  if (!AssumeNegation(clause)) {
    trail_.Rollback(0);
    result.status = GuidedResult::Status::kRup;
    return result;
  }
  result.status = GuidedResult::Status::kBadHint;
  result.position = chain.size();
  result.exhausted = true;
  for (size_t k = 0; k < chain.size(); ++k) {
    ++result.visited_clauses;
    const ClauseId id = chain[k];
    result.exhausted = false;
    if (!formula_.IsLive(id)) {
      result.status = GuidedResult::Status::kUnknownId;
      result.position = k + 1;
      break;
    }
    const Clause& hinted = formula_.clause(id);
    if (hinted.is_tautology()) {
      result.position = k + 1;
      break;
    }
    int open = 0;
    bool satisfied = false;
    Literal last_open;
    for (Literal l : hinted) {
      const Value v = trail_.value(l);
      if (v == Value::kTrue) {
        satisfied = true;
        break;
      }
      if (v == Value::kUnassigned) {
        ++open;
        last_open = l;
      }
    }
    if (!satisfied && open == 0) {
      result.status = GuidedResult::Status::kRup;
      break;
    }
    if (satisfied || open > 1) {
      result.position = k + 1;
      break;
    }
    EnsureVar(last_open.variable().index);
    trail_.Assign(last_open, id);
    result.exhausted = true;
  }
  trail_.Rollback(0);
  return result;
}

RatResult Propagator::CheckRat(const Clause& clause, Literal pivot) {
  if (!clause.contains(pivot)) {
    throw ContractViolation("RAT pivot " + std::to_string(pivot.dimacs()) +
                            " is not in " + clause.ToString());
  }
  RatResult result;
  result.rat = true;
  const auto occ = formula_.Occurrences(~pivot);
  const std::vector<ClauseId> candidates(occ.begin(), occ.end());
  std::vector<Literal> lits;
  for (ClauseId candidate : candidates) {
    ++result.visited_clauses;
    lits.clear();
    for (Literal l : clause) {
      if (l != pivot) lits.push_back(l);
    }
    for (Literal l : formula_.clause(candidate)) {
      if (l != ~pivot) lits.push_back(l);
    }
    const Clause resolvent = Clause::FromLiterals(lits);
    if (resolvent.is_tautology()) {
      result.groups.push_back({candidate, {}});
      continue;
    }
    RupResult rup = CheckRup(resolvent);
    result.visited_clauses += rup.visited_clauses;
    if (!rup.rup) {
      result.rat = false;
      result.witness = candidate;
      result.groups.clear();
      return result;
    }
    result.groups.push_back({candidate, std::move(rup.antecedents)});
  }
  return result;
}

PivotSearch Propagator::FindPivot(const Clause& clause, PivotPolicy policy) {
  PivotSearch search;
  const size_t tries = policy == PivotPolicy::kAny ? clause.size()
                                                   : std::min<size_t>(1, clause.size());
  for (size_t i = 0; i < tries; ++i) {
    search.result = CheckRat(clause, clause[i]);
    search.visited_clauses += search.result.visited_clauses;
    if (search.result.rat) {
      search.pivot = clause[i];
      break;
    }
  }
  return search;
}

PropagationOutcome Propagator::PropagateTopLevel() {
  assert(trail_.empty());
  top_level_mark_ = undo_.size();
  return PropagateFrom(0);
}

void Propagator::ClearTopLevel() {
  trail_.Rollback(0);
  Undo(top_level_mark_);
}

bool Propagator::IsUnitOrReason(ClauseId id) const {
  for (const Trail::Entry& e : trail_.entries()) {
    if (e.reason == id) return true;
  }
  const Clause& c = formula_.clause(id);
  int non_false = 0;
  bool has_true = false;
  for (Literal l : c) {
    const Value v = trail_.value(l);
    if (v != Value::kFalse) ++non_false;
    if (v == Value::kTrue) has_true = true;
  }
  return non_false == 1 && has_true;
}

PropagationOutcome Propagate(const Formula& formula, Trail& trail) {
  Propagator engine(formula);
  for (const Trail::Entry& e : trail.entries()) {
    engine.EnsureVar(e.literal.variable().index);
    engine.trail_.Assign(e.literal, e.reason);
  }
  PropagationOutcome out = engine.PropagateFrom(0);
  trail = engine.trail_;
  return out;
}

RupResult CheckRup(const Formula& formula, const Clause& clause) {
  return Propagator(formula).CheckRup(clause);
}

GuidedResult CheckRupGuided(const Formula& formula, const Clause& clause,
                            std::span<const ClauseId> chain) {
  return Propagator(formula).CheckRupGuided(clause, chain);
}

RatResult CheckRat(const Formula& formula, const Clause& clause,
                   Literal pivot) {
  return Propagator(formula).CheckRat(clause, pivot);
}

PivotSearch FindPivot(const Formula& formula, const Clause& clause,
                      PivotPolicy policy) {
  return Propagator(formula).FindPivot(clause, policy);
}

}  // namespace satproof
