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

#ifndef SATPROOF_CORE_H_
#define SATPROOF_CORE_H_

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace satproof {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. a RAT pivot not in the
// clause, a resolution pivot missing from a premise).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class MalformedLiteral : public Error {
 public:
  using Error::Error;
};

class InvalidResolution : public Error {
 public:
  using Error::Error;
};

class UnknownClause : public Error {
 public:
  using Error::Error;
};

struct Variable {
  uint32_t index = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

// A literal in DIMACS convention: +v or -v for variable v >= 1.
class Literal {
 public:
  constexpr Literal() = default;
  // Throws MalformedLiteral for 0.
  explicit Literal(int32_t dimacs);
  constexpr Literal(Variable var, bool negative)
      : value_(negative ? -static_cast<int32_t>(var.index)
                        : static_cast<int32_t>(var.index)) {}

  constexpr int32_t dimacs() const { return value_; }
  constexpr Variable variable() const {
    return Variable{static_cast<uint32_t>(value_ < 0 ? -value_ : value_)};
  }
  constexpr bool negative() const { return value_ < 0; }
  constexpr Literal negated() const { return FromRaw(-value_); }
  constexpr Literal operator~() const { return negated(); }
  // Dense index suitable for per-literal tables: 2 * var + negative.
  constexpr uint32_t code() const {
    return 2 * variable().index + (negative() ? 1u : 0u);
  }

  friend constexpr bool operator==(Literal a, Literal b) {
    return a.value_ == b.value_;
  }
  // Orders by variable, positive before negative.
  friend constexpr bool operator<(Literal a, Literal b) {
    return a.code() < b.code();
  }

 private:
  static constexpr Literal FromRaw(int32_t v) {
    Literal l;
    l.value_ = v;
    return l;
  }
  int32_t value_ = 0;
};

struct ClauseId {
  uint64_t value = 0;

  constexpr bool valid() const { return value != 0; }
  friend auto operator<=>(const ClauseId&, const ClauseId&) = default;
};

// One RAT candidate (a live clause containing the negated pivot) together
// with the hint chain proving its resolvent; the chain is empty when the
// resolvent is tautological.
struct RatGroup {
  ClauseId candidate;
  std::vector<ClauseId> chain;

  friend bool operator==(const RatGroup&, const RatGroup&) = default;
};

// A clause as a set of literals. Literals keep their first-occurrence order;
// duplicates are dropped on construction. A clause holding a complementary
// pair is representable (input CNFs may contain such clauses) and is flagged
// as a tautology.
class Clause {
 public:
  Clause() = default;
  // Removes duplicates. Throws MalformedLiteral on a zero entry.
  static Clause FromDimacs(std::span<const int32_t> literals);
  static Clause FromLiterals(std::span<const Literal> literals);
  Clause(std::initializer_list<int32_t> literals);

  std::span<const Literal> literals() const { return literals_; }
  size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool is_unit() const { return literals_.size() == 1; }
  bool is_tautology() const { return tautology_; }
  bool contains(Literal l) const;
  Literal operator[](size_t i) const { return literals_[i]; }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  // Literal-set equality, ignoring order.
  bool SameLiterals(const Clause& other) const;
  // Every literal of this clause occurs in `other`.
  bool SubsetOf(const Clause& other) const;
  // Sorted DIMACS integers; a canonical key for set-semantics lookups.
  std::vector<int32_t> SortedKey() const;
  std::vector<int32_t> ToDimacs() const;
  uint32_t MaxVariable() const;
  std::string ToString() const;

  // Order-sensitive: two clauses are equal as documents when they list the
  // same literals in the same order.
  friend bool operator==(const Clause& a, const Clause& b) {
    return a.literals_ == b.literals_;
  }

 private:
  std::vector<Literal> literals_;
  bool tautology_ = false;
};

// Returns nullopt when the literal list contains a complementary pair.
// Throws MalformedLiteral on a zero entry.
std::optional<Clause> Normalize(std::span<const int32_t> literals);

// Resolvent of `c` and `d` on `pivot` (pivot in c, ~pivot in d); nullopt if
// the resolvent is tautological. Throws InvalidResolution otherwise.
std::optional<Clause> Resolve(const Clause& c, const Clause& d, Literal pivot);

struct SortedKeyHash {
  size_t operator()(const std::vector<int32_t>& key) const;
};

// CNF with stable clause identities. Ids are assigned densely from 1 in
// insertion order and never reused. Maintains an occurrence index from each
// literal to the ids of live clauses containing it (kept in id order) and a
// content index for set-semantics deletion.
class Formula {
 public:
  Formula() = default;

  ClauseId AddClause(Clause clause);
  // Inserts under an explicit id, which must be >= next_id().
  void AddClauseWithId(ClauseId id, Clause clause);
  // Throws UnknownClause if `id` is not live.
  Clause RemoveClause(ClauseId id);
  // Removes the most recently added live clause whose literal set equals
  // `clause`. Returns its id, or nullopt when no such clause is live.
  std::optional<ClauseId> RemoveClauseByContent(const Clause& clause);

  bool IsLive(ClauseId id) const;
  // Throws UnknownClause if not live.
  const Clause& clause(ClauseId id) const;
  // Live ids with the given literal set, in id order.
  std::vector<ClauseId> FindByContent(const Clause& clause) const;
  std::span<const ClauseId> Occurrences(Literal l) const;

  // Calls f(id, clause) for every live clause in id order.
  void ForEach(const std::function<void(ClauseId, const Clause&)>& f) const;
  std::vector<ClauseId> LiveIds() const;

  size_t size() const { return live_; }
  ClauseId next_id() const { return ClauseId{clauses_.size()}; }
  // max(declared variable count, largest variable seen).
  uint32_t num_vars() const { return num_vars_; }
  void DeclareVariables(uint32_t n);
  bool HasEmptyClause() const { return !empty_ids_.empty(); }
  std::optional<ClauseId> FirstEmptyClause() const;

 private:
  void EnsureVar(uint32_t var);

  // Index 0 is a placeholder so that ids index directly.
  std::vector<std::optional<Clause>> clauses_{std::nullopt};
  std::vector<std::vector<ClauseId>> occurrences_;
  std::unordered_map<std::vector<int32_t>, std::vector<ClauseId>,
                     SortedKeyHash>
      by_content_;
  std::vector<ClauseId> empty_ids_;
  size_t live_ = 0;
  uint32_t num_vars_ = 0;
};

}  // namespace satproof

template <>
struct std::hash<satproof::ClauseId> {
  size_t operator()(const satproof::ClauseId& id) const noexcept {
    return std::hash<uint64_t>()(id.value);
  }
};

#endif  // SATPROOF_CORE_H_
