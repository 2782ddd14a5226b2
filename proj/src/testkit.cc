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

#include "satproof/testkit.h"

#include <algorithm>
#include <random>

namespace satproof {

std::optional<Model> BruteForce(const Formula& formula) {
  const uint32_t n = formula.num_vars();
  if (n > kBruteForceMaxVars) {
    throw OracleRangeError("brute force is limited to " +
                           std::to_string(kBruteForceMaxVars) +
                           " variables, formula has " + std::to_string(n));
  }
  std::vector<std::vector<int32_t>> clauses;
  formula.ForEach([&](ClauseId, const Clause& c) {
    clauses.push_back(c.ToDimacs());
  });
  const uint64_t rows = uint64_t{1} << n;
  for (uint64_t a = 0; a < rows; ++a) {
    bool all = true;
    for (const auto& c : clauses) {
      bool sat = false;
      for (int32_t l : c) {
        const bool v = (a >> (std::abs(l) - 1)) & 1;
        if ((l > 0) == v) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) {
      Model m(n + 1, false);
      for (uint32_t v = 1; v <= n; ++v) m[v] = (a >> (v - 1)) & 1;
      return m;
    }
  }
  return std::nullopt;
}

bool Entails(const Formula& formula, const Clause& clause) {
  Formula with_negation = formula;
  for (Literal l : clause) {
    with_negation.AddClause(Clause::FromLiterals(std::vector<Literal>{~l}));
  }
  return !BruteForce(with_negation).has_value();
}

bool SatisfiesAll(const Formula& formula, const Model& model) {
  bool ok = true;
  formula.ForEach([&](ClauseId, const Clause& c) {
    bool sat = false;
    for (Literal l : c) {
      const uint32_t v = l.variable().index;
      if (v < model.size() && model[v] != l.negative()) sat = true;
    }
    ok = ok && sat;
  });
  return ok;
}

namespace {

constexpr int kNoReason = -1;

class CdclSolver {
 public:
  CdclSolver(const Formula& formula, uint64_t seed)
      : formula_(formula), rng_(seed), num_vars_(formula.num_vars()) {
    values_.assign(num_vars_ + 1, 0);
    level_.assign(num_vars_ + 1, 0);
    reason_.assign(num_vars_ + 1, kNoReason);
    activity_.assign(num_vars_ + 1, 0.0);
    seen_.assign(num_vars_ + 1, 0);
    phase_.resize(num_vars_ + 1);
    for (uint32_t v = 1; v <= num_vars_; ++v) phase_[v] = rng_() % 2;
    watches_.resize(2 * static_cast<size_t>(num_vars_) + 2);
  }

  SolveResult Run() {
    if (!Load()) return Unsat();
    double restart_limit = 100;
    uint64_t conflicts_since_restart = 0;
    max_learnts_ = static_cast<double>(formula_.size()) / 3 + 20;
    while (true) {
      const int conflict = Propagate();
      if (conflict != kNoReason) {
        ++result_.stats.conflicts;
        ++conflicts_since_restart;
        if (trail_lim_.empty()) return Unsat();
        int backtrack_level = 0;
        std::vector<Literal> learnt = Analyze(conflict, &backtrack_level);
        Backtrack(backtrack_level);
        result_.proof.push_back(ProofStep::Add(Clause::FromLiterals(learnt)));
        if (learnt.size() == 1) {
          Enqueue(learnt[0], kNoReason);
        } else {
          const int ci = AddLearnt(std::move(learnt));
          Enqueue(clauses_[ci].lits[0], ci);
        }
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
        continue;
      }
      if (conflicts_since_restart >= restart_limit) {
        conflicts_since_restart = 0;
        restart_limit *= 1.5;
        Backtrack(0);
        continue;
      }
      if (static_cast<double>(num_learnts_) >= max_learnts_ + trail_.size()) {
        ReduceDb();
      }
      const std::optional<Literal> decision = PickBranch();
      if (!decision) return Sat();
      ++result_.stats.decisions;
      trail_lim_.push_back(trail_.size());
      Enqueue(*decision, kNoReason);
    }
  }

 private:
  struct StoredClause {
    std::vector<Literal> lits;
    bool learnt = false;
    bool deleted = false;
    double activity = 0;
  };

  int Value(Literal l) const {
    const int v = values_[l.variable().index];
    return l.negative() ? -v : v;
  }

  void Enqueue(Literal l, int reason) {
    const uint32_t v = l.variable().index;
    values_[v] = l.negative() ? -1 : 1;
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns false when the input is refuted during loading.
  bool Load() {
    bool ok = true;
    formula_.ForEach([&](ClauseId, const Clause& c) {
      if (!ok || c.is_tautology()) return;
      if (c.empty()) {
        ok = false;
        return;
      }
      if (c.is_unit()) {
        const int v = Value(c[0]);
        if (v < 0) ok = false;
        if (v == 0) Enqueue(c[0], kNoReason);
        return;
      }
      StoredClause stored;
      stored.lits.assign(c.begin(), c.end());
      clauses_.push_back(std::move(stored));
      Attach(static_cast<int>(clauses_.size()) - 1);
    });
    return ok;
  }

  void Attach(int ci) {
    const auto& lits = clauses_[ci].lits;
    watches_[lits[0].code()].push_back(ci);
    watches_[lits[1].code()].push_back(ci);
  }

  int AddLearnt(std::vector<Literal> lits) {
    StoredClause stored;
    stored.lits = std::move(lits);
    stored.learnt = true;
    stored.activity = clause_inc_;
    clauses_.push_back(std::move(stored));
    const int ci = static_cast<int>(clauses_.size()) - 1;
    Attach(ci);
    ++num_learnts_;
    return ci;
  }

  int Propagate() {
    while (qhead_ < trail_.size()) {
      const Literal falsified = ~trail_[qhead_++];
      ++result_.stats.propagations;
      std::vector<int>& ws = watches_[falsified.code()];
      size_t i = 0;
      size_t j = 0;
      int conflict = kNoReason;
      while (i < ws.size()) {
        const int ci = ws[i++];
        StoredClause& c = clauses_[ci];
        if (c.deleted) continue;
        auto& lits = c.lits;
        if (lits[0] == falsified) std::swap(lits[0], lits[1]);
        if (Value(lits[0]) > 0) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < lits.size(); ++k) {
          if (Value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1].code()].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (Value(lits[0]) < 0) {
          conflict = ci;
          while (i < ws.size()) ws[j++] = ws[i++];
          break;
        }
        Enqueue(lits[0], ci);
      }
      ws.resize(j);
      if (conflict != kNoReason) return conflict;
    }
    return kNoReason;
  }

  void BumpVar(uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  void BumpClause(StoredClause& c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
      for (StoredClause& s : clauses_) s.activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  std::vector<Literal> Analyze(int conflict, int* backtrack_level) {
    const int current = static_cast<int>(trail_lim_.size());
    std::vector<Literal> learnt = {Literal()};
    int open = 0;
    std::optional<Literal> p;
    size_t index = trail_.size();
    int reason = conflict;
    while (true) {
      StoredClause& c = clauses_[reason];
      if (c.learnt) BumpClause(c);
      for (size_t k = p ? 1 : 0; k < c.lits.size(); ++k) {
        const Literal q = c.lits[k];
        const uint32_t v = q.variable().index;
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        BumpVar(v);
        if (level_[v] == current) {
          ++open;
        } else {
          learnt.push_back(q);
        }
      }
      do {
        --index;
      } while (!seen_[trail_[index].variable().index]);
      p = trail_[index];
      seen_[p->variable().index] = 0;
      --open;
      if (open == 0) break;
      reason = reason_[p->variable().index];
    }
    learnt[0] = ~*p;
    for (size_t k = 1; k < learnt.size(); ++k) seen_[learnt[k].variable().index] = 0;

    *backtrack_level = 0;
    if (learnt.size() > 1) {
      size_t max_at = 1;
      for (size_t k = 2; k < learnt.size(); ++k) {
        if (level_[learnt[k].variable().index] >
            level_[learnt[max_at].variable().index]) {
          max_at = k;
        }
      }
      std::swap(learnt[1], learnt[max_at]);
      *backtrack_level = level_[learnt[1].variable().index];
    }
    return learnt;
  }

  void Backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    const size_t keep = trail_lim_[level];
    for (size_t k = trail_.size(); k-- > keep;) {
      const uint32_t v = trail_[k].variable().index;
      phase_[v] = !trail_[k].negative();
      values_[v] = 0;
      reason_[v] = kNoReason;
    }
    trail_.resize(keep);
    trail_lim_.resize(level);
    qhead_ = std::min(qhead_, keep);
  }

  std::optional<Literal> PickBranch() {
    uint32_t best = 0;
    if (num_vars_ > 0 && rng_() % 50 == 0) {
      const uint32_t v = 1 + static_cast<uint32_t>(rng_() % num_vars_);
      if (values_[v] == 0) best = v;
    }
    if (best == 0) {
      for (uint32_t v = 1; v <= num_vars_; ++v) {
        if (values_[v] == 0 && (best == 0 || activity_[v] > activity_[best])) {
          best = v;
        }
      }
    }
    if (best == 0) return std::nullopt;
    return Literal(Variable{best}, !phase_[best]);
  }

  bool Locked(int ci) const {
    const Literal first = clauses_[ci].lits[0];
    return Value(first) > 0 && reason_[first.variable().index] == ci;
  }

  void ReduceDb() {
    std::vector<int> learnts;
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (clauses_[ci].learnt && !clauses_[ci].deleted) {
        learnts.push_back(static_cast<int>(ci));
      }
    }
    std::stable_sort(learnts.begin(), learnts.end(), [&](int a, int b) {
      return clauses_[a].activity < clauses_[b].activity;
    });
    for (size_t k = 0; k < learnts.size() / 2; ++k) {
      StoredClause& c = clauses_[learnts[k]];
      if (c.lits.size() <= 2 || Locked(learnts[k])) continue;
      c.deleted = true;
      --num_learnts_;
      result_.proof.push_back(ProofStep::Delete(Clause::FromLiterals(c.lits)));
    }
    max_learnts_ *= 1.1;
  }

  SolveResult Unsat() {
    result_.sat = false;
    result_.proof.push_back(ProofStep::Add(Clause()));
    return std::move(result_);
  }

  SolveResult Sat() {
    result_.sat = true;
    result_.proof.clear();
    result_.model.assign(num_vars_ + 1, false);
    for (uint32_t v = 1; v <= num_vars_; ++v) {
      result_.model[v] = values_[v] != 0 ? values_[v] > 0 : phase_[v];
    }
    return std::move(result_);
  }

  const Formula& formula_;
  std::mt19937_64 rng_;
  uint32_t num_vars_;
  std::vector<StoredClause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> values_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<uint8_t> seen_;
  std::vector<bool> phase_;
  std::vector<Literal> trail_;
  std::vector<size_t> trail_lim_;
  size_t qhead_ = 0;
  double var_inc_ = 1;
  double clause_inc_ = 1;
  double max_learnts_ = 0;
  size_t num_learnts_ = 0;
  SolveResult result_;
};

}  // namespace

SolveResult CdclSolve(const Formula& formula, uint64_t seed) {
  return CdclSolver(formula, seed).Run();
}

Formula GenPhp(int n) {
  if (n < 1) throw ContractViolation("pigeonhole size must be at least 1");
  Formula f;
  auto x = [n](int pigeon, int hole) {
    return static_cast<int32_t>((pigeon - 1) * n + hole);
  };
  f.DeclareVariables(static_cast<uint32_t>((n + 1) * n));
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<int32_t> c;
    for (int j = 1; j <= n; ++j) c.push_back(x(i, j));
    f.AddClause(Clause::FromDimacs(c));
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n + 1; ++i) {
      for (int k = i + 1; k <= n + 1; ++k) {
        f.AddClause(Clause{-x(i, j), -x(k, j)});
      }
    }
  }
  return f;
}

Formula GenRandom(int vars, int clauses, int width, uint64_t seed) {
  if (vars < 1 || width < 0 || width > vars) {
    throw ContractViolation("clause width must lie in [0, vars]");
  }
  std::mt19937_64 rng(seed);
  Formula f;
  f.DeclareVariables(static_cast<uint32_t>(vars));
  std::vector<int32_t> pool(vars);
  for (int v = 0; v < vars; ++v) pool[v] = v + 1;
  for (int i = 0; i < clauses; ++i) {
    // Partial Fisher-Yates picks `width` distinct variables.
    for (int k = 0; k < width; ++k) {
      const int pick = k + static_cast<int>(rng() % (vars - k));
      std::swap(pool[k], pool[pick]);
    }
    std::vector<int32_t> c;
    for (int k = 0; k < width; ++k) c.push_back(rng() % 2 ? pool[k] : -pool[k]);
    f.AddClause(Clause::FromDimacs(c));
  }
  return f;
}

}  // namespace satproof
