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

#include "satproof/pipeline.h"

#include <algorithm>
#include <unordered_set>

namespace satproof {

size_t CheckedProof::num_core_additions() const {
  size_t n = 0;
  for (const CheckedStep& s : steps) {
    n += s.core && s.record.kind == ProofStep::Kind::kAdd;
  }
  return n;
}

CheckedProof BackwardCheck(const Formula& formula,
                           const std::vector<ProofStep>& proof,
                           CheckMode mode) {
  CheckedProof cp;
  cp.formula = formula;
  cp.mode = mode;
  if (auto bottom = formula.FirstEmptyClause()) {
    cp.formula_bottom = bottom;
    cp.core_formula_ids.insert(*bottom);
    return cp;
  }
  CheckReport report = CheckDrat(formula, proof, mode, /*record_steps=*/true);
  if (!report.verified) {
    throw ForwardRejected(report.rejected_step, report.reason, report.detail);
  }
  std::unordered_map<ClauseId, size_t> added_at;
  for (StepRecord& record : report.per_step) {
    if (record.kind == ProofStep::Kind::kAdd) {
      added_at[record.id] = cp.steps.size();
    }
    cp.steps.push_back({std::move(record), false});
  }

  auto mark = [&](ClauseId id) {
    auto it = added_at.find(id);
    if (it != added_at.end()) {
      cp.steps[it->second].core = true;
    } else {
      cp.core_formula_ids.insert(id);
    }
  };
  cp.steps.back().core = true;
  for (size_t i = cp.steps.size(); i-- > 0;) {
    const CheckedStep& step = cp.steps[i];
    if (!step.core || step.record.kind != ProofStep::Kind::kAdd) continue;
    for (ClauseId id : step.record.antecedents) mark(id);
    for (const RatGroup& group : step.record.rat_groups) {
      for (ClauseId id : group.chain) mark(id);
    }
  }
  for (CheckedStep& step : cp.steps) {
    if (step.record.kind != ProofStep::Kind::kDelete || step.record.ignored) {
      continue;
    }
    const ClauseId id = step.record.id;
    auto it = added_at.find(id);
    step.core = it != added_at.end() ? cp.steps[it->second].core
                                     : cp.core_formula_ids.count(id) > 0;
  }
  return cp;
}

namespace {

// Per-clause bookkeeping shared by the emitters.
struct Usage {
  std::unordered_map<ClauseId, size_t> added_at;
  std::unordered_map<ClauseId, size_t> last_use;
  // Deletions to emit after each step, in id order.
  std::vector<std::vector<ClauseId>> delete_after;

  const Clause& ClauseOf(const CheckedProof& cp, ClauseId id) const {
    auto it = added_at.find(id);
    return it != added_at.end() ? cp.steps[it->second].record.clause
                                : cp.formula.clause(id);
  }
};

Usage AnalyzeUsage(const CheckedProof& cp) {
  Usage usage;
  std::unordered_set<ClauseId> deleted;
  for (size_t i = 0; i < cp.steps.size(); ++i) {
    const CheckedStep& step = cp.steps[i];
    const StepRecord& r = step.record;
    if (r.kind == ProofStep::Kind::kDelete) {
      if (!r.ignored) deleted.insert(r.id);
      continue;
    }
    if (!step.core) continue;
    usage.added_at[r.id] = i;
    for (ClauseId id : r.antecedents) usage.last_use[id] = i;
    for (const RatGroup& g : r.rat_groups) {
      usage.last_use[g.candidate] = i;
      for (ClauseId id : g.chain) usage.last_use[id] = i;
    }
  }
  usage.delete_after.resize(cp.steps.size());
  const size_t bottom_step = cp.steps.empty() ? 0 : cp.steps.size() - 1;
  for (const auto& [id, at] : usage.last_use) {
    if (at >= bottom_step) continue;
    const bool core_addition = usage.added_at.count(id) > 0;
    const bool core_original = cp.core_formula_ids.count(id) > 0;
    // Original clauses stay unless the proof itself removed them.
    if (core_addition || (core_original && deleted.count(id))) {
      usage.delete_after[at].push_back(id);
    }
  }
  for (auto& ids : usage.delete_after) std::sort(ids.begin(), ids.end());
  return usage;
}

bool IsCoreAddition(const CheckedStep& step) {
  return step.core && step.record.kind == ProofStep::Kind::kAdd;
}

}  // namespace

TrimmedProof EmitTrimmed(const CheckedProof& cp) {
  TrimmedProof out;
  out.core_cnf.DeclareVariables(cp.formula.num_vars());
  for (ClauseId id : cp.core_formula_ids) {
    out.core_cnf.AddClause(cp.formula.clause(id));
  }
  if (cp.formula_bottom) {
    out.drat.push_back(ProofStep::Add(Clause()));
    return out;
  }
  const Usage usage = AnalyzeUsage(cp);
  for (size_t i = 0; i < cp.steps.size(); ++i) {
    if (!IsCoreAddition(cp.steps[i])) continue;
    out.drat.push_back(ProofStep::Add(cp.steps[i].record.clause));
    for (ClauseId id : usage.delete_after[i]) {
      out.drat.push_back(ProofStep::Delete(usage.ClauseOf(cp, id)));
    }
  }
  return out;
}

std::vector<LratLine> EmitLrat(const CheckedProof& cp) {
  std::vector<LratLine> out;
  uint64_t next = cp.formula.next_id().value;
  if (cp.formula_bottom) {
    ProofStep step = ProofStep::Add(Clause());
    step.hints.rup_chain = {*cp.formula_bottom};
    out.push_back({ClauseId{next}, std::move(step)});
    return out;
  }
  const Usage usage = AnalyzeUsage(cp);
  std::unordered_map<ClauseId, ClauseId> renumber;
  auto map_id = [&](ClauseId id) {
    auto it = renumber.find(id);
    return it == renumber.end() ? id : it->second;
  };
  auto is_core = [&](ClauseId id) {
    return usage.added_at.count(id) > 0 || cp.core_formula_ids.count(id) > 0;
  };

  ClauseId last{next - 1};
  std::vector<ClauseId> unused;
  for (ClauseId id : cp.formula.LiveIds()) {
    if (!cp.core_formula_ids.count(id)) unused.push_back(id);
  }
  if (!unused.empty()) {
    ProofStep del;
    del.kind = ProofStep::Kind::kDelete;
    del.deleted_ids = std::move(unused);
    out.push_back({last, std::move(del)});
  }

  for (size_t i = 0; i < cp.steps.size(); ++i) {
    if (!IsCoreAddition(cp.steps[i])) continue;
    const StepRecord& r = cp.steps[i].record;
    ProofStep step = ProofStep::Add(r.clause);
    if (r.pivot) {
      // The LRAT pivot is the first literal.
      std::vector<Literal> lits = {*r.pivot};
      for (Literal l : r.clause) {
        if (l != *r.pivot) lits.push_back(l);
      }
      step.clause = Clause::FromLiterals(lits);
      for (const RatGroup& g : r.rat_groups) {
        if (!is_core(g.candidate)) continue;
        RatGroup mapped{map_id(g.candidate), {}};
        for (ClauseId id : g.chain) mapped.chain.push_back(map_id(id));
        step.hints.rat_groups.push_back(std::move(mapped));
      }
    } else {
      for (ClauseId id : r.antecedents) {
        step.hints.rup_chain.push_back(map_id(id));
      }
    }
    last = ClauseId{next++};
    renumber[r.id] = last;
    out.push_back({last, std::move(step)});
    if (!usage.delete_after[i].empty()) {
      ProofStep del;
      del.kind = ProofStep::Kind::kDelete;
      for (ClauseId id : usage.delete_after[i]) {
        del.deleted_ids.push_back(map_id(id));
      }
      out.push_back({last, std::move(del)});
    }
  }
  return out;
}

namespace {

class ErTranslator {
 public:
  ErTranslator(const Formula& formula, const CheckedProof& cp)
      : cp_(cp), usage_(AnalyzeUsage(cp)), checker_(formula) {
    next_id_ = formula.next_id().value;
    uint32_t max_var = formula.num_vars();
    for (const CheckedStep& s : cp.steps) {
      max_var = std::max(max_var, s.record.clause.MaxVariable());
    }
    next_var_ = max_var + 1;
    for (ClauseId id : cp.core_formula_ids) image_[id] = id;
  }

  std::vector<ErLine> Run() {
    if (cp_.formula_bottom) {
      Emit(ChainStep{Clause(), {*cp_.formula_bottom}});
      return std::move(out_);
    }
    for (size_t i = 0; i < cp_.steps.size(); ++i) {
      if (!IsCoreAddition(cp_.steps[i])) continue;
      const StepRecord& r = cp_.steps[i].record;
      if (r.pivot) {
        TranslateRat(i, r);
      } else {
        std::vector<ClauseId> chain = Images(r.antecedents);
        image_[r.id] = EmitDerived(Map(r.clause), chain, {});
      }
      if (checker_.verified()) break;
      for (ClauseId id : usage_.delete_after[i]) {
        retired_.push_back(image_.at(id));
        image_.erase(id);
      }
      FlushDeletions();
    }
    if (!checker_.verified()) {
      throw TranslationInvariantViolation("translation does not reach the empty clause");
    }
    return std::move(out_);
  }

 private:
  Literal Map(Literal l) const {
    auto it = sigma_.find(l.variable().index);
    if (it == sigma_.end()) return l;
    return l.negative() ? ~it->second : it->second;
  }

  Clause Map(const Clause& c) const {
    std::vector<Literal> lits;
    for (Literal l : c) lits.push_back(Map(l));
    return Clause::FromLiterals(lits);
  }

  std::vector<ClauseId> Images(const std::vector<ClauseId>& ids) const {
    std::vector<ClauseId> out;
    for (ClauseId id : ids) {
      auto it = image_.find(id);
      if (it == image_.end()) {
        throw TranslationInvariantViolation("clause " + std::to_string(id.value) +
                                            " has no image");
      }
      out.push_back(it->second);
    }
    return out;
  }

  ClauseId Emit(ErStep step) {
    const ClauseId id{next_id_};
    if (const auto* ext = std::get_if<Extension>(&step)) {
      next_id_ += ext->ls.size() + 2;
    } else if (!std::holds_alternative<Deletion>(step)) {
      ++next_id_;
    }
    ErLine line{std::holds_alternative<Deletion>(step) ? ClauseId{next_id_ - 1} : id,
                std::move(step)};
    if (!checker_.Apply(line)) {
      throw TranslationInvariantViolation("emitted step fails re-checking: " +
                                          checker_.report().detail);
    }
    out_.push_back(std::move(line));
    return id;
  }

  // Replays a unit-propagation chain for `claim` and emits the linear
  // resolution it induces, followed by `suffix` resolved on demand.
  ClauseId EmitDerived(const Clause& claim, const std::vector<ClauseId>& chain,
                       const std::vector<ClauseId>& suffix) {
    std::vector<ClauseId> antecedents = RupOrder(claim, chain);
    size_t position = 0;
    std::optional<Clause> folded = checker_.Fold(antecedents, &position);
    for (ClauseId id : suffix) {
      if (!folded) break;
      const Clause& next = checker_.formula().clause(id);
      bool clash = false;
      for (Literal l : next) clash = clash || folded->contains(~l);
      if (!clash) continue;
      antecedents.push_back(id);
      folded = checker_.Fold(antecedents, &position);
    }
    if (!folded) {
      throw TranslationInvariantViolation("derivation of " + claim.ToString() +
                                          " has no unique pivot");
    }
    return Emit(ChainStep{*folded, std::move(antecedents)});
  }

  std::vector<ClauseId> RupOrder(const Clause& claim,
                                 const std::vector<ClauseId>& chain) const {
    std::unordered_map<uint32_t, bool> value;
    auto val = [&](Literal l) -> int {
      auto it = value.find(l.variable().index);
      if (it == value.end()) return 0;
      return it->second != l.negative() ? 1 : -1;
    };
    auto assign = [&](Literal l) { value[l.variable().index] = !l.negative(); };
    for (Literal l : claim) assign(~l);

    std::vector<std::pair<ClauseId, Literal>> reasons;
    std::optional<ClauseId> conflict;
    for (ClauseId id : chain) {
      std::optional<Literal> open;
      int unassigned = 0;
      for (Literal l : checker_.formula().clause(id)) {
        const int v = val(l);
        if (v > 0) {
          throw TranslationInvariantViolation("chain clause " + std::to_string(id.value) +
                                              " is satisfied");
        }
        if (v == 0) {
          ++unassigned;
          open = l;
        }
      }
      if (unassigned == 0) {
        conflict = id;
        break;
      }
      if (unassigned > 1) {
        throw TranslationInvariantViolation("chain clause " + std::to_string(id.value) +
                                            " is not unit");
      }
      assign(*open);
      reasons.push_back({id, *open});
    }
    if (!conflict) {
      throw TranslationInvariantViolation("chain for " + claim.ToString() +
                                          " ends without a conflict");
    }
    std::vector<ClauseId> order = {*conflict};
    std::set<Literal> resolvent;
    for (Literal l : checker_.formula().clause(*conflict)) resolvent.insert(l);
    for (size_t k = reasons.size(); k-- > 0;) {
      const auto& [id, implied] = reasons[k];
      if (!resolvent.erase(~implied)) continue;
      order.push_back(id);
      for (Literal l : checker_.formula().clause(id)) {
        if (l != implied) resolvent.insert(l);
      }
    }
    return order;
  }

  void TranslateRat(size_t index, const StepRecord& r) {
    const Literal p = *r.pivot;
    const Literal mapped_p = Map(p);
    Extension ext{Variable{next_var_++}, mapped_p, {}};
    std::vector<Literal> rest;
    for (Literal l : r.clause) {
      if (l == p) continue;
      rest.push_back(l);
      ext.ls.push_back(~Map(l));
    }
    const uint64_t base = Emit(ext).value;
    const ClauseId positive{base};
    const ClauseId definition{base + 1};
    auto body = [&](size_t i) { return ClauseId{base + 2 + i}; };
    const Literal x = Literal(ext.fresh, false);

    std::unordered_map<ClauseId, const RatGroup*> groups;
    for (const RatGroup& g : r.rat_groups) groups[g.candidate] = &g;

    std::vector<ClauseId> tracked;
    for (const auto& entry : image_) tracked.push_back(entry.first);
    std::sort(tracked.begin(), tracked.end());
    std::vector<std::pair<ClauseId, ClauseId>> updates;
    for (ClauseId id : tracked) {
      const ClauseId img = image_.at(id);
      auto use = usage_.last_use.find(id);
      if (use == usage_.last_use.end() || use->second <= index) continue;
      const Clause& original = usage_.ClauseOf(cp_, id);
      const Clause& current = checker_.formula().clause(img);
      if (original.contains(p) && !original.contains(~p)) {
        if (current.contains(mapped_p)) {
          updates.push_back({id, Emit(ChainStep{
                                     *Resolve(current, checker_.formula().clause(positive),
                                              mapped_p),
                                     {img, positive}})});
        }
        continue;
      }
      if (!original.contains(~p) || original.contains(p) ||
          !current.contains(~mapped_p)) {
        continue;
      }
      auto g = groups.find(id);
      if (g == groups.end()) {
        throw TranslationInvariantViolation("candidate " + std::to_string(id.value) +
                                            " has no recorded group");
      }
      std::vector<ClauseId> suffix;
      for (size_t i = 0; i < rest.size(); ++i) suffix.push_back(body(i));
      suffix.push_back(img);
      if (g->second->chain.empty()) {
        // Tautological resolvent: some l_i clashes with the candidate.
        for (size_t i = 0; i < rest.size(); ++i) {
          if (!original.contains(~rest[i])) continue;
          std::vector<ClauseId> ants = {body(i), img};
          size_t position = 0;
          auto folded = checker_.Fold(ants, &position);
          if (!folded) break;
          updates.push_back({id, Emit(ChainStep{*folded, ants})});
          break;
        }
        if (updates.empty() || updates.back().first != id) {
          throw TranslationInvariantViolation("no clashing literal for candidate " +
                                              std::to_string(id.value));
        }
        continue;
      }
      std::vector<Literal> resolvent;
      for (Literal l : rest) resolvent.push_back(Map(l));
      for (Literal l : original) {
        if (l != ~p) resolvent.push_back(Map(l));
      }
      updates.push_back({id, EmitDerived(Clause::FromLiterals(resolvent),
                                         Images(g->second->chain), suffix)});
    }

    for (const auto& [id, img] : updates) {
      retired_.push_back(image_[id]);
      image_[id] = img;
    }
    sigma_[p.variable().index] = p.negative() ? ~x : x;
    image_[r.id] = definition;
    retired_.push_back(positive);
    for (size_t i = 0; i < rest.size(); ++i) retired_.push_back(body(i));
  }

  void FlushDeletions() {
    if (retired_.empty()) return;
    std::sort(retired_.begin(), retired_.end());
    retired_.erase(std::unique(retired_.begin(), retired_.end()), retired_.end());
    Emit(Deletion{std::move(retired_)});
    retired_.clear();
  }

  const CheckedProof& cp_;
  const Usage usage_;
  ErChecker checker_;
  uint64_t next_id_ = 1;
  uint32_t next_var_ = 1;
  std::unordered_map<uint32_t, Literal> sigma_;
  std::unordered_map<ClauseId, ClauseId> image_;
  std::vector<ClauseId> retired_;
  std::vector<ErLine> out_;
};

}  // namespace

std::vector<ErLine> ToEr(const Formula& formula, const CheckedProof& cp) {
  return ErTranslator(formula, cp).Run();
}

}  // namespace satproof
