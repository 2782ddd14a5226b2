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

#include "satproof/core.h"

#include <algorithm>
#include <sstream>

namespace satproof {

Literal::Literal(int32_t dimacs) : value_(dimacs) {
  if (dimacs == 0) throw MalformedLiteral("literal 0 is not a valid literal");
}

Clause Clause::FromLiterals(std::span<const Literal> literals) {
  Clause c;
  c.literals_.reserve(literals.size());
  for (Literal l : literals) {
    if (l.dimacs() == 0) throw MalformedLiteral("literal 0 in clause");
    if (c.contains(l)) continue;
    if (c.contains(~l)) c.tautology_ = true;
    c.literals_.push_back(l);
  }
  return c;
}

Clause Clause::FromDimacs(std::span<const int32_t> literals) {
  std::vector<Literal> lits;
  lits.reserve(literals.size());
  for (int32_t v : literals) lits.emplace_back(v);
  return FromLiterals(lits);
}

Clause::Clause(std::initializer_list<int32_t> literals)
    : Clause(FromDimacs(std::span<const int32_t>(literals.begin(),
                                                 literals.size()))) {}

bool Clause::contains(Literal l) const {
  return std::find(literals_.begin(), literals_.end(), l) != literals_.end();
}

bool Clause::SameLiterals(const Clause& other) const {
  return size() == other.size() && SubsetOf(other);
}

bool Clause::SubsetOf(const Clause& other) const {
  if (size() > other.size()) return false;
  for (Literal l : literals_) {
    if (!other.contains(l)) return false;
  }
  return true;
}

std::vector<int32_t> Clause::SortedKey() const {
  std::vector<int32_t> key = ToDimacs();
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<int32_t> Clause::ToDimacs() const {
  std::vector<int32_t> out;
  out.reserve(literals_.size());
  for (Literal l : literals_) out.push_back(l.dimacs());
  return out;
}

uint32_t Clause::MaxVariable() const {
  uint32_t m = 0;
  for (Literal l : literals_) m = std::max(m, l.variable().index);
  return m;
}

std::string Clause::ToString() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < literals_.size(); ++i) {
    if (i) os << ',';
    os << literals_[i].dimacs();
  }
  os << '}';
  return os.str();
}

std::optional<Clause> Normalize(std::span<const int32_t> literals) {
  Clause c = Clause::FromDimacs(literals);
  if (c.is_tautology()) return std::nullopt;
  return c;
}

std::optional<Clause> Resolve(const Clause& c, const Clause& d, Literal pivot) {
  if (!c.contains(pivot) || !d.contains(~pivot)) {
    throw InvalidResolution("pivot " + std::to_string(pivot.dimacs()) +
                            " does not clash between " + c.ToString() +
                            " and " + d.ToString());
  }
  std::vector<Literal> lits;
  lits.reserve(c.size() + d.size());
  for (Literal l : c) {
    if (l != pivot) lits.push_back(l);
  }
  for (Literal l : d) {
    if (l != ~pivot) lits.push_back(l);
  }
  Clause r = Clause::FromLiterals(lits);
  if (r.is_tautology()) return std::nullopt;
  return r;
}

size_t SortedKeyHash::operator()(const std::vector<int32_t>& key) const {
  size_t h = key.size();
  for (int32_t v : key) {
    h ^= std::hash<int32_t>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Formula::EnsureVar(uint32_t var) {
  num_vars_ = std::max(num_vars_, var);
  const size_t needed = 2 * static_cast<size_t>(var) + 2;
  if (occurrences_.size() < needed) occurrences_.resize(needed);
}

void Formula::DeclareVariables(uint32_t n) { EnsureVar(n); }

ClauseId Formula::AddClause(Clause clause) {
  const ClauseId id = next_id();
  AddClauseWithId(id, std::move(clause));
  return id;
}

void Formula::AddClauseWithId(ClauseId id, Clause clause) {
  if (id < next_id()) {
    throw ContractViolation("clause id " + std::to_string(id.value) +
                            " is not fresh");
  }
  clauses_.resize(id.value + 1);
  EnsureVar(clause.MaxVariable());
  for (Literal l : clause) occurrences_[l.code()].push_back(id);
  by_content_[clause.SortedKey()].push_back(id);
  if (clause.empty()) empty_ids_.push_back(id);
  clauses_[id.value] = std::move(clause);
  ++live_;
}

Clause Formula::RemoveClause(ClauseId id) {
  if (!IsLive(id)) {
    throw UnknownClause("clause id " + std::to_string(id.value) +
                        " is not live");
  }
  Clause c = std::move(*clauses_[id.value]);
  clauses_[id.value].reset();
  --live_;
  auto erase_id = [id](std::vector<ClauseId>& v) {
    auto it = std::lower_bound(v.begin(), v.end(), id);
    if (it != v.end() && *it == id) v.erase(it);
  };
  for (Literal l : c) erase_id(occurrences_[l.code()]);
  auto it = by_content_.find(c.SortedKey());
  erase_id(it->second);
  if (it->second.empty()) by_content_.erase(it);
  if (c.empty()) erase_id(empty_ids_);
  return c;
}

std::optional<ClauseId> Formula::RemoveClauseByContent(const Clause& clause) {
  auto it = by_content_.find(clause.SortedKey());
  if (it == by_content_.end()) return std::nullopt;
  const ClauseId id = it->second.back();
  RemoveClause(id);
  return id;
}

bool Formula::IsLive(ClauseId id) const {
  return id.value < clauses_.size() && clauses_[id.value].has_value();
}

const Clause& Formula::clause(ClauseId id) const {
  if (!IsLive(id)) {
    throw UnknownClause("clause id " + std::to_string(id.value) +
                        " is not live");
  }
  return *clauses_[id.value];
}

std::vector<ClauseId> Formula::FindByContent(const Clause& clause) const {
  auto it = by_content_.find(clause.SortedKey());
  if (it == by_content_.end()) return {};
  return it->second;
}

std::span<const ClauseId> Formula::Occurrences(Literal l) const {
  if (l.code() >= occurrences_.size()) return {};
  return occurrences_[l.code()];
}

void Formula::ForEach(
    const std::function<void(ClauseId, const Clause&)>& f) const {
  for (uint64_t i = 1; i < clauses_.size(); ++i) {
    if (clauses_[i]) f(ClauseId{i}, *clauses_[i]);
  }
}

std::vector<ClauseId> Formula::LiveIds() const {
  std::vector<ClauseId> ids;
  ids.reserve(live_);
  for (uint64_t i = 1; i < clauses_.size(); ++i) {
    if (clauses_[i]) ids.push_back(ClauseId{i});
  }
  return ids;
}

std::optional<ClauseId> Formula::FirstEmptyClause() const {
  if (empty_ids_.empty()) return std::nullopt;
  return empty_ids_.front();
}

}  // namespace satproof
