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

#include "satproof/checkers.h"

#include <algorithm>
#include <unordered_set>

namespace satproof {

std::string_view ToString(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "none";
    case RejectReason::kNotRat: return "not-rat";
    case RejectReason::kNoBottom: return "no-bottom";
    case RejectReason::kBadHint: return "bad-hint";
    case RejectReason::kMissingRatCandidate: return "missing-rat-candidate";
    case RejectReason::kUnknownId: return "unknown-id";
    case RejectReason::kIdOrder: return "id-order";
    case RejectReason::kNotFresh: return "not-fresh";
    case RejectReason::kNoPivot: return "no-pivot";
    case RejectReason::kNotSubsumed: return "not-subsumed";
  }
  return "unknown";
}

namespace {

void Reject(CheckReport& report, size_t step, RejectReason reason,
            std::string detail) {
  report.verified = false;
  report.rejected_step = step;
  report.reason = reason;
  report.detail = std::move(detail);
}

}  // namespace

CheckReport CheckDrat(const Formula& formula,
                      const std::vector<ProofStep>& proof, CheckMode mode,
                      bool record_steps) {
  CheckReport report;
  if (auto bottom = formula.FirstEmptyClause()) {
    report.verified = true;
    report.bottom = bottom;
    return report;
  }
  Propagator engine(formula);
  for (size_t i = 0; i < proof.size(); ++i) {
    const ProofStep& step = proof[i];
    ++report.steps_checked;
    StepRecord record;
    record.kind = step.kind;
    record.clause = step.clause;

    if (!step.is_add()) {
      const std::vector<ClauseId> ids = engine.formula().FindByContent(step.clause);
      if (ids.empty()) {
        record.ignored = true;
      } else {
        bool skip = false;
        if (mode.flavor == Flavor::kOperational) {
          report.visited_clauses_total += engine.PropagateTopLevel().visited_clauses;
          skip = engine.IsUnitOrReason(ids.back());
          engine.ClearTopLevel();
        }
        if (skip) {
          record.ignored = true;
        } else {
          engine.RemoveClause(ids.back());
          record.id = ids.back();
        }
      }
      if (record.ignored) ++report.ignored_deletions;
      if (record_steps) report.per_step.push_back(std::move(record));
      continue;
    }

    RupResult rup = engine.CheckRup(step.clause);
    report.visited_clauses_total += rup.visited_clauses;
    if (rup.rup) {
      record.antecedents = std::move(rup.antecedents);
    } else if (step.clause.empty()) {
      Reject(report, i, RejectReason::kNotRat,
             "empty clause is not derivable by unit propagation");
      return report;
    } else {
      PivotSearch search = engine.FindPivot(step.clause, mode.pivot_policy);
      report.visited_clauses_total += search.visited_clauses;
      if (!search.found()) {
        Reject(report, i, RejectReason::kNotRat,
               "clause " + step.clause.ToString() + " is neither RUP nor RAT");
        return report;
      }
      ++report.rat_steps;
      record.pivot = search.pivot;
      record.rat_groups = std::move(search.result.groups);
    }
    record.id = engine.AddClause(step.clause);
    const bool bottom = step.clause.empty();
    if (record_steps) report.per_step.push_back(std::move(record));
    if (bottom) {
      report.verified = true;
      report.bottom = engine.formula().FirstEmptyClause();
      return report;
    }
  }
  Reject(report, proof.size(), RejectReason::kNoBottom,
         "proof ends without the empty clause");
  return report;
}

CheckReport CheckLrat(const Formula& formula,
                      const std::vector<LratLine>& proof) {
  CheckReport report;
  if (auto bottom = formula.FirstEmptyClause()) {
    report.verified = true;
    report.bottom = bottom;
    return report;
  }
  Propagator engine(formula);
  ClauseId last_added{formula.next_id().value - 1};
  std::vector<ClauseId> chain;
  std::vector<Literal> lits;

  for (size_t i = 0; i < proof.size(); ++i) {
    const LratLine& line = proof[i];
    const ProofStep& step = line.step;
    ++report.steps_checked;

    if (!step.is_add()) {
      for (ClauseId id : step.deleted_ids) {
        if (!engine.formula().IsLive(id)) {
          Reject(report, i, RejectReason::kUnknownId,
                 "deletion of unknown clause " + std::to_string(id.value));
          return report;
        }
        engine.RemoveClause(id);
      }
      continue;
    }
    if (line.id <= last_added) {
      Reject(report, i, RejectReason::kIdOrder,
             "clause id " + std::to_string(line.id.value) + " is not fresh");
      return report;
    }

    const Clause& clause = step.clause;
    const HintBlock& hints = step.hints;
    auto guided_failure = [&](const GuidedResult& g) {
      if (g.status == GuidedResult::Status::kUnknownId) {
        Reject(report, i, RejectReason::kUnknownId,
               "hint " + std::to_string(g.position) + " is not live");
      } else {
        Reject(report, i, RejectReason::kBadHint,
               "hint " + std::to_string(g.position) +
                   " is neither unit nor falsified");
      }
      return report;
    };

    if (hints.rat_groups.empty()) {
      GuidedResult g = engine.CheckRupGuided(clause, hints.rup_chain);
      report.visited_clauses_total += g.visited_clauses;
      if (!g.ok()) {
        const bool no_candidates =
            !clause.empty() && engine.formula().Occurrences(~clause[0]).empty();
        if (!(g.exhausted && no_candidates)) {
          if (g.exhausted && !clause.empty() && hints.rup_chain.empty()) {
            Reject(report, i, RejectReason::kMissingRatCandidate,
                   "RAT step without candidate groups");
            return report;
          }
          return guided_failure(g);
        }
        ++report.rat_steps;
      }
    } else {
      if (clause.empty()) {
        Reject(report, i, RejectReason::kBadHint,
               "RAT hints on the empty clause");
        return report;
      }
      ++report.rat_steps;
      const Literal pivot = clause[0];
      const auto occ = engine.formula().Occurrences(~pivot);
      report.visited_clauses_total += occ.size();
      std::unordered_set<ClauseId> covered;
      for (const RatGroup& group : hints.rat_groups) {
        if (!engine.formula().IsLive(group.candidate)) {
          Reject(report, i, RejectReason::kUnknownId,
                 "RAT candidate " + std::to_string(group.candidate.value) +
                     " is not live");
          return report;
        }
        const Clause& d = engine.formula().clause(group.candidate);
        if (!d.contains(~pivot) || !covered.insert(group.candidate).second) {
          Reject(report, i, RejectReason::kBadHint,
                 "clause " + std::to_string(group.candidate.value) +
                     " is not a distinct RAT candidate");
          return report;
        }
      }
      for (ClauseId candidate : occ) {
        if (!covered.count(candidate)) {
          Reject(report, i, RejectReason::kMissingRatCandidate,
                 "no hints for RAT candidate " +
                     std::to_string(candidate.value));
          return report;
        }
      }
      for (const RatGroup& group : hints.rat_groups) {
        lits.clear();
        for (Literal l : clause) {
          if (l != pivot) lits.push_back(l);
        }
        for (Literal l : engine.formula().clause(group.candidate)) {
          if (l != ~pivot) lits.push_back(l);
        }
        const Clause resolvent = Clause::FromLiterals(lits);
        if (resolvent.is_tautology()) continue;
        chain = hints.rup_chain;
        chain.insert(chain.end(), group.chain.begin(), group.chain.end());
        GuidedResult g = engine.CheckRupGuided(resolvent, chain);
        report.visited_clauses_total += g.visited_clauses;
        if (!g.ok()) return guided_failure(g);
      }
    }
    engine.AddClauseWithId(line.id, clause);
    last_added = line.id;
    if (clause.empty()) {
      report.verified = true;
      report.bottom = line.id;
      return report;
    }
  }
  Reject(report, proof.size(), RejectReason::kNoBottom,
         "proof ends without the empty clause");
  return report;
}

ErChecker::ErChecker(Formula formula)
    : formula_(std::move(formula)),
      max_var_(formula_.num_vars()),
      next_id_(formula_.next_id()) {
  if (auto bottom = formula_.FirstEmptyClause()) {
    report_.verified = true;
    report_.bottom = bottom;
  }
}

bool ErChecker::Reject(RejectReason reason, std::string detail,
                       size_t position) {
  satproof::Reject(report_, index_, reason, std::move(detail));
  report_.reason_position = position;
  return false;
}

std::optional<Clause> ErChecker::Fold(const std::vector<ClauseId>& antecedents,
                                      size_t* failed_position) {
  mark_.assign(2 * static_cast<size_t>(max_var_) + 2, 0);
  std::vector<Literal> r;
  auto add = [&](Literal l) {
    if (l.code() >= mark_.size()) mark_.resize(l.code() + 2, 0);
    if (!mark_[l.code()]) {
      mark_[l.code()] = 1;
      r.push_back(l);
    }
  };
  auto marked = [&](Literal l) {
    return l.code() < mark_.size() && mark_[l.code()];
  };
  for (Literal l : formula_.clause(antecedents[0])) add(l);
  for (size_t i = 1; i < antecedents.size(); ++i) {
    const Clause& next = formula_.clause(antecedents[i]);
    std::optional<Literal> clash;
    int clashes = 0;
    for (Literal l : next) {
      if (marked(~l)) {
        ++clashes;
        clash = l;
      }
    }
    if (clashes != 1) {
      *failed_position = i + 1;
      return std::nullopt;
    }
    const Literal removed = ~*clash;
    mark_[removed.code()] = 0;
    r.erase(std::find(r.begin(), r.end(), removed));
    for (Literal l : next) {
      if (l != *clash) add(l);
    }
  }
  return Clause::FromLiterals(r);
}

bool ErChecker::Apply(const ErLine& line) {
  if (report_.verified) return true;
  ++report_.steps_checked;
  struct Visitor {
    ErChecker& self;
    const ClauseId id;

    bool operator()(const Extension& ext) {
      if (id < self.next_id_) {
        return self.Reject(RejectReason::kIdOrder,
                           "clause id " + std::to_string(id.value) +
                               " is not fresh");
      }
      if (ext.fresh.index <= self.max_var_) {
        return self.Reject(RejectReason::kNotFresh,
                           "variable " + std::to_string(ext.fresh.index) +
                               " already occurs");
      }
      bool known = ext.p.variable().index <= self.max_var_;
      for (Literal l : ext.ls) known = known && l.variable().index <= self.max_var_;
      if (!known) {
        return self.Reject(RejectReason::kNotFresh,
                           "definition body mentions an unknown variable");
      }
      self.max_var_ = ext.fresh.index;
      uint64_t next = id.value;
      for (Clause& c : ExtensionClauses(ext)) {
        self.formula_.AddClauseWithId(ClauseId{next++}, std::move(c));
      }
      self.next_id_ = ClauseId{next};
      return true;
    }

    bool operator()(const ChainStep& chain) {
      if (id < self.next_id_) {
        return self.Reject(RejectReason::kIdOrder,
                           "clause id " + std::to_string(id.value) +
                               " is not fresh");
      }
      if (chain.antecedents.empty()) {
        return self.Reject(RejectReason::kNoPivot, "empty antecedent list", 0);
      }
      for (ClauseId a : chain.antecedents) {
        if (!self.formula_.IsLive(a)) {
          return self.Reject(RejectReason::kUnknownId,
                             "antecedent " + std::to_string(a.value) +
                                 " is not live");
        }
      }
      self.report_.visited_clauses_total += chain.antecedents.size();
      size_t position = 0;
      auto folded = self.Fold(chain.antecedents, &position);
      if (!folded) {
        return self.Reject(RejectReason::kNoPivot,
                           "no unique clashing variable at antecedent " +
                               std::to_string(position),
                           position);
      }
      if (!folded->SubsetOf(chain.claimed)) {
        return self.Reject(RejectReason::kNotSubsumed,
                           "resolvent " + folded->ToString() +
                               " does not subsume " + chain.claimed.ToString());
      }
      self.max_var_ = std::max(self.max_var_, chain.claimed.MaxVariable());
      self.formula_.AddClauseWithId(id, chain.claimed);
      self.next_id_ = ClauseId{id.value + 1};
      if (chain.claimed.empty()) {
        self.report_.verified = true;
        self.report_.bottom = id;
      }
      return true;
    }

    bool operator()(const Deletion& deletion) {
      for (ClauseId d : deletion.ids) {
        if (!self.formula_.IsLive(d)) {
          return self.Reject(RejectReason::kUnknownId,
                             "deletion of unknown clause " +
                                 std::to_string(d.value));
        }
        self.formula_.RemoveClause(d);
      }
      return true;
    }
  };
  const bool ok = std::visit(Visitor{*this, line.id}, line.step);
  ++index_;
  return ok;
}

CheckReport CheckEr(const Formula& formula, const std::vector<ErLine>& proof) {
  ErChecker checker(formula);
  for (const ErLine& line : proof) {
    if (checker.verified()) break;
    if (!checker.Apply(line)) return checker.report();
  }
  CheckReport report = checker.report();
  if (!report.verified) {
    Reject(report, proof.size(), RejectReason::kNoBottom,
           "proof ends without the empty clause");
  }
  return report;
}

}  // namespace satproof
