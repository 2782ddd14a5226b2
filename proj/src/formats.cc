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

#include "satproof/formats.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <unordered_set>

namespace satproof {
namespace {

// Whitespace-separated tokens with line tracking. A line whose first token
// starts with 'c' is a comment.
class TokenScanner {
 public:
  explicit TokenScanner(std::string_view text) : text_(text) {}

  std::optional<std::string_view> Next() {
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) return std::nullopt;
      if (text_[pos_] == 'c' && line_has_token_ != line_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      const size_t start = pos_;
      token_line_ = line_;
      line_has_token_ = line_;
      while (pos_ < text_.size() && !IsSpace(text_[pos_])) ++pos_;
      return text_.substr(start, pos_ - start);
    }
  }

  std::optional<std::string_view> Peek() {
    const size_t pos = pos_;
    const size_t line = line_;
    const size_t token_line = token_line_;
    const size_t has_token = line_has_token_;
    auto t = Next();
    pos_ = pos;
    line_ = line;
    token_line_ = token_line;
    line_has_token_ = has_token;
    return t;
  }

  // Line of the most recently returned token; the current line at EOF.
  size_t line() const { return token_line_ ? token_line_ : line_; }
  size_t current_line() const { return line_; }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '\f' ||
           c == '\v';
  }
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t token_line_ = 0;
  size_t line_has_token_ = 0;
};

int64_t ParseInteger(std::string_view token, size_t line) {
  int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

int32_t ParseLiteral(std::string_view token, size_t line) {
  const int64_t v = ParseInteger(token, line);
  if (v > std::numeric_limits<int32_t>::max() ||
      v < -std::numeric_limits<int32_t>::max()) {
    throw ParseError("line " + std::to_string(line) + ": literal out of range",
                     line);
  }
  return static_cast<int32_t>(v);
}

ClauseId ParseId(std::string_view token, size_t line) {
  const int64_t v = ParseInteger(token, line);
  if (v <= 0) {
    throw ParseError("line " + std::to_string(line) + ": clause id must be positive",
                     line);
  }
  return ClauseId{static_cast<uint64_t>(v)};
}

[[noreturn]] void Fail(const std::string& what, size_t line) {
  throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

// Reads integers up to the terminating 0.
std::vector<int32_t> ReadLiterals(TokenScanner& in, const char* what) {
  std::vector<int32_t> lits;
  while (true) {
    auto tok = in.Next();
    if (!tok) Fail(std::string("unterminated ") + what, in.current_line());
    const int32_t v = ParseLiteral(*tok, in.line());
    if (v == 0) return lits;
    lits.push_back(v);
  }
}

std::vector<int64_t> ReadIntegers(TokenScanner& in, const char* what) {
  std::vector<int64_t> out;
  while (true) {
    auto tok = in.Next();
    if (!tok) Fail(std::string("unterminated ") + what, in.current_line());
    const int64_t v = ParseInteger(*tok, in.line());
    if (v == 0) return out;
    out.push_back(v);
  }
}

std::vector<ClauseId> ReadIds(TokenScanner& in, const char* what) {
  std::vector<ClauseId> ids;
  for (int64_t v : ReadIntegers(in, what)) {
    if (v < 0) Fail(std::string("negative id in ") + what, in.line());
    ids.push_back(ClauseId{static_cast<uint64_t>(v)});
  }
  return ids;
}

void AppendClause(std::string& out, const Clause& clause) {
  for (Literal l : clause) {
    out += std::to_string(l.dimacs());
    out += ' ';
  }
  out += '0';
}

void AppendIds(std::string& out, const std::vector<ClauseId>& ids) {
  for (ClauseId id : ids) {
    out += std::to_string(id.value);
    out += ' ';
  }
}

}  // namespace

std::vector<Clause> ExtensionClauses(const Extension& e) {
  const Literal x(e.fresh, false);
  std::vector<Clause> family;
  family.reserve(e.ls.size() + 2);
  const std::vector<Literal> first = {x, ~e.p};
  family.push_back(Clause::FromLiterals(first));
  std::vector<Literal> second = {x};
  for (Literal l : e.ls) second.push_back(~l);
  family.push_back(Clause::FromLiterals(second));
  for (Literal l : e.ls) {
    const std::vector<Literal> lits = {~x, e.p, l};
    family.push_back(Clause::FromLiterals(lits));
  }
  return family;
}

DimacsDocument ParseDimacs(std::string_view text, bool strict) {
  DimacsDocument doc;
  TokenScanner in(text);
  auto p = in.Next();
  if (!p || *p != "p") Fail("missing 'p cnf' header", in.line());
  auto cnf = in.Next();
  if (!cnf || *cnf != "cnf") Fail("header must read 'p cnf V C'", in.line());
  auto vars = in.Next();
  auto clauses = in.Next();
  if (!vars || !clauses) Fail("truncated header", in.current_line());
  const int64_t v = ParseInteger(*vars, in.line());
  const int64_t c = ParseInteger(*clauses, in.line());
  if (v < 0 || c < 0 || v > std::numeric_limits<int32_t>::max()) {
    Fail("header counts out of range", in.line());
  }
  doc.declared_vars = static_cast<uint32_t>(v);
  doc.declared_clauses = static_cast<uint64_t>(c);
  doc.formula.DeclareVariables(doc.declared_vars);

  std::vector<int32_t> current;
  size_t clause_line = 0;
  while (auto tok = in.Next()) {
    const int32_t lit = ParseLiteral(*tok, in.line());
    if (lit == 0) {
      doc.formula.AddClause(Clause::FromDimacs(current));
      current.clear();
      continue;
    }
    if (current.empty()) clause_line = in.line();
    if (static_cast<uint32_t>(std::abs(lit)) > doc.declared_vars) {
      const std::string msg = "literal " + std::to_string(lit) +
                              " exceeds declared variable count";
      if (strict) Fail(msg, in.line());
      doc.warnings.push_back("line " + std::to_string(in.line()) + ": " + msg);
    }
    current.push_back(lit);
  }
  if (!current.empty()) Fail("unterminated clause", clause_line);
  if (doc.formula.size() != doc.declared_clauses) {
    const std::string msg = "header declares " +
                            std::to_string(doc.declared_clauses) +
                            " clauses, file has " +
                            std::to_string(doc.formula.size());
    if (strict) Fail(msg, in.current_line());
    doc.warnings.push_back(msg);
  }
  return doc;
}

std::string WriteDimacs(const Formula& formula) {
  std::string out = "p cnf " + std::to_string(formula.num_vars()) + " " +
                    std::to_string(formula.size()) + "\n";
  formula.ForEach([&](ClauseId, const Clause& c) {
    AppendClause(out, c);
    out += '\n';
  });
  return out;
}

std::vector<ProofStep> ParseDratText(std::string_view text) {
  std::vector<ProofStep> steps;
  TokenScanner in(text);
  while (auto tok = in.Next()) {
    if (*tok == "d") {
      steps.push_back(
          ProofStep::Delete(Clause::FromDimacs(ReadLiterals(in, "deletion"))));
      continue;
    }
    std::vector<int32_t> lits;
    const int32_t first = ParseLiteral(*tok, in.line());
    if (first != 0) {
      lits = ReadLiterals(in, "clause");
      lits.insert(lits.begin(), first);
    }
    steps.push_back(ProofStep::Add(Clause::FromDimacs(lits)));
  }
  return steps;
}

std::vector<ProofStep> ParseDratBinary(std::string_view bytes) {
  std::vector<ProofStep> steps;
  size_t pos = 0;
  auto fail = [](const std::string& what, size_t offset) -> void {
    throw ParseError("byte " + std::to_string(offset) + ": " + what, offset);
  };
  while (pos < bytes.size()) {
    const size_t step_start = pos;
    const auto tag = static_cast<unsigned char>(bytes[pos++]);
    if (tag != 0x61 && tag != 0x64) fail("unknown step tag", step_start);
    std::vector<Literal> lits;
    while (true) {
      if (pos >= bytes.size()) fail("truncated step", step_start);
      const size_t lit_start = pos;
      uint64_t u = 0;
      int shift = 0;
      while (true) {
        if (pos >= bytes.size()) fail("truncated literal", lit_start);
        const auto b = static_cast<unsigned char>(bytes[pos++]);
        if (shift > 28) fail("literal encoding too long", lit_start);
        u |= static_cast<uint64_t>(b & 0x7f) << shift;
        shift += 7;
        if (!(b & 0x80)) break;
      }
      if (u == 0 && pos - lit_start == 1) break;  // clause terminator
      if (u < 2) fail("invalid literal payload", lit_start);
      const uint64_t var = u >> 1;
      if (var > static_cast<uint64_t>(std::numeric_limits<int32_t>::max())) {
        fail("variable out of range", lit_start);
      }
      lits.emplace_back(Variable{static_cast<uint32_t>(var)}, (u & 1) != 0);
    }
    Clause c = Clause::FromLiterals(lits);
    steps.push_back(tag == 0x61 ? ProofStep::Add(std::move(c))
                                : ProofStep::Delete(std::move(c)));
  }
  return steps;
}

bool LooksLikeBinaryDrat(std::string_view bytes) {
  if (bytes.empty()) return false;
  const auto first = static_cast<unsigned char>(bytes[0]);
  if (first != 0x61 && first != 0x64) return false;
  return bytes.find('\0') != std::string_view::npos;
}

std::vector<ProofStep> ParseDrat(std::string_view bytes) {
  return LooksLikeBinaryDrat(bytes) ? ParseDratBinary(bytes)
                                    : ParseDratText(bytes);
}

std::string WriteDratText(const std::vector<ProofStep>& steps) {
  std::string out;
  for (const ProofStep& s : steps) {
    if (!s.is_add()) out += "d ";
    AppendClause(out, s.clause);
    out += '\n';
  }
  return out;
}

std::string WriteDratBinary(const std::vector<ProofStep>& steps) {
  std::string out;
  for (const ProofStep& s : steps) {
    out += s.is_add() ? '\x61' : '\x64';
    for (Literal l : s.clause) {
      uint64_t u = 2 * static_cast<uint64_t>(l.variable().index) +
                   (l.negative() ? 1 : 0);
      while (u > 0x7f) {
        out += static_cast<char>((u & 0x7f) | 0x80);
        u >>= 7;
      }
      out += static_cast<char>(u);
    }
    out += '\0';
  }
  return out;
}

std::vector<LratLine> ParseLrat(std::string_view text,
                                std::optional<uint64_t> num_original_clauses) {
  std::vector<LratLine> lines;
  TokenScanner in(text);
  std::unordered_set<ClauseId> deleted;
  std::unordered_set<ClauseId> added;
  ClauseId last_added{num_original_clauses.value_or(0)};
  auto is_live = [&](ClauseId id, ClauseId self) {
    if (deleted.count(id)) return false;
    if (added.count(id)) return true;
    if (num_original_clauses) return id.value <= *num_original_clauses;
    return id < self;
  };

  while (auto tok = in.Next()) {
    const size_t line = in.line();
    const ClauseId id = ParseId(*tok, line);
    auto next = in.Peek();
    if (next && *next == "d") {
      in.Next();
      ProofStep step;
      step.kind = ProofStep::Kind::kDelete;
      step.deleted_ids = ReadIds(in, "deletion");
      for (ClauseId d : step.deleted_ids) {
        if (d.value == 0) Fail("clause id 0 in deletion", line);
        deleted.insert(d);
      }
      lines.push_back({id, std::move(step)});
      continue;
    }
    if (id <= last_added) Fail("addition ids must increase", line);
    ProofStep step = ProofStep::Add(Clause::FromDimacs(ReadLiterals(in, "clause")));
    for (int64_t h : ReadIntegers(in, "hint list")) {
      const ClauseId ref{static_cast<uint64_t>(h < 0 ? -h : h)};
      if (!is_live(ref, id)) {
        Fail("hint " + std::to_string(h) + " does not reference a live clause",
             line);
      }
      if (h < 0) {
        step.hints.rat_groups.push_back({ref, {}});
      } else if (step.hints.rat_groups.empty()) {
        step.hints.rup_chain.push_back(ref);
      } else {
        step.hints.rat_groups.back().chain.push_back(ref);
      }
    }
    last_added = id;
    added.insert(id);
    lines.push_back({id, std::move(step)});
  }
  return lines;
}

std::string WriteLrat(const std::vector<LratLine>& lines) {
  std::string out;
  for (const LratLine& line : lines) {
    out += std::to_string(line.id.value);
    out += ' ';
    if (!line.step.is_add()) {
      out += "d ";
      AppendIds(out, line.step.deleted_ids);
      out += "0\n";
      continue;
    }
    AppendClause(out, line.step.clause);
    out += ' ';
    AppendIds(out, line.step.hints.rup_chain);
    for (const RatGroup& g : line.step.hints.rat_groups) {
      out += '-';
      out += std::to_string(g.candidate.value);
      out += ' ';
      AppendIds(out, g.chain);
    }
    out += "0\n";
  }
  return out;
}

std::vector<ErLine> ParseEr(std::string_view text) {
  std::vector<ErLine> lines;
  TokenScanner in(text);
  ClauseId next_free{1};
  uint32_t max_var = 0;
  while (auto tok = in.Next()) {
    const size_t line = in.line();
    const ClauseId id = ParseId(*tok, line);
    auto next = in.Peek();
    if (next && *next == "d") {
      in.Next();
      lines.push_back({id, Deletion{ReadIds(in, "deletion")}});
      continue;
    }
    if (id < next_free) Fail("clause id collides with an earlier step", line);
    if (next && *next == "e") {
      in.Next();
      std::vector<int32_t> lits = ReadLiterals(in, "extension");
      if (lits.size() < 2) Fail("extension needs a variable and a literal", line);
      if (lits[0] < 0) Fail("extension variable must be positive", line);
      Extension ext;
      ext.fresh = Variable{static_cast<uint32_t>(lits[0])};
      ext.p = Literal(lits[1]);
      for (size_t i = 2; i < lits.size(); ++i) ext.ls.emplace_back(lits[i]);
      uint32_t body_max = ext.p.variable().index;
      for (Literal l : ext.ls) body_max = std::max(body_max, l.variable().index);
      if (ext.fresh.index <= max_var || ext.fresh.index <= body_max) {
        Fail("extension variable " + std::to_string(ext.fresh.index) +
                 " is not fresh",
             line);
      }
      max_var = ext.fresh.index;
      next_free = ClauseId{id.value + ext.ls.size() + 2};
      lines.push_back({id, std::move(ext)});
      continue;
    }
    ChainStep chain;
    chain.claimed = Clause::FromDimacs(ReadLiterals(in, "clause"));
    chain.antecedents = ReadIds(in, "antecedent list");
    if (chain.antecedents.empty()) Fail("chain without antecedents", line);
    max_var = std::max(max_var, chain.claimed.MaxVariable());
    next_free = ClauseId{id.value + 1};
    lines.push_back({id, std::move(chain)});
  }
  return lines;
}

std::string WriteEr(const std::vector<ErLine>& lines) {
  std::string out;
  for (const ErLine& line : lines) {
    out += std::to_string(line.id.value);
    out += ' ';
    if (const auto* ext = std::get_if<Extension>(&line.step)) {
      out += "e " + std::to_string(ext->fresh.index) + ' ' +
             std::to_string(ext->p.dimacs()) + ' ';
      for (Literal l : ext->ls) out += std::to_string(l.dimacs()) + ' ';
      out += "0\n";
    } else if (const auto* chain = std::get_if<ChainStep>(&line.step)) {
      AppendClause(out, chain->claimed);
      out += ' ';
      AppendIds(out, chain->antecedents);
      out += "0\n";
    } else {
      out += "d ";
      AppendIds(out, std::get<Deletion>(line.step).ids);
      out += "0\n";
    }
  }
  return out;
}

}  // namespace satproof
