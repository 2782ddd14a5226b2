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

#include "satproof/cli.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "satproof/checkers.h"
#include "satproof/formats.h"
#include "satproof/pipeline.h"
#include "satproof/testkit.h"

namespace satproof {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(content.data(), content.size())) {
    throw InputError("cannot write " + path);
  }
}

enum class Encoding { kAuto, kBinary, kText };

Formula LoadCnf(const std::string& path) {
  return ParseDimacs(ReadFile(path)).formula;
}

std::vector<ProofStep> LoadDrat(const std::string& path, Encoding encoding) {
  const std::string bytes = ReadFile(path);
  switch (encoding) {
    case Encoding::kBinary:
      return ParseDratBinary(bytes);
    case Encoding::kText:
      return ParseDratText(bytes);
    default:
      return ParseDrat(bytes);
  }
}

void PrintCounters(std::ostream& out, const CheckReport& report) {
  out << "c steps_checked " << report.steps_checked << "\n"
      << "c rat_steps " << report.rat_steps << "\n"
      << "c visited_clauses " << report.visited_clauses_total << "\n"
      << "c ignored_deletions " << report.ignored_deletions << "\n";
}

int PrintVerdict(std::ostream& out, const CheckReport& report, bool counters) {
  if (report.verified) {
    out << "s VERIFIED\n";
  } else {
    out << "s NOT VERIFIED\n"
        << "c rejected at step " << report.rejected_step << " ("
        << ToString(report.reason) << "): " << report.detail << "\n";
  }
  if (counters) PrintCounters(out, report);
  return report.verified ? kExitOk : kExitRejected;
}

// Maps library and I/O failures onto exit codes.
template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ForwardRejected& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const TranslationInvariantViolation& e) {
    err << "error: translation: " << e.what() << "\n";
    return kExitRejected;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

struct CheckJob {
  std::string format;
  std::string cnf;
  std::string proof;
  CheckMode mode;
  Encoding encoding = Encoding::kAuto;
  bool counters = false;
};

int RunCheck(const CheckJob& job, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Formula formula = LoadCnf(job.cnf);
    CheckReport report;
    if (job.format == "drat") {
      report = CheckDrat(formula, LoadDrat(job.proof, job.encoding), job.mode);
    } else if (job.format == "lrat") {
      report = CheckLrat(formula, ParseLrat(ReadFile(job.proof)));
    } else {
      report = CheckEr(formula, ParseEr(ReadFile(job.proof)));
    }
    return PrintVerdict(out, report, job.counters);
  });
}

// Each line of the list names a formula and a proof.
int RunBatch(const CheckJob& base, const std::string& list, int jobs,
             std::ostream& out, std::ostream& err) {
  std::vector<CheckJob> work;
  int status = Guarded(err, [&] {
    std::istringstream lines(ReadFile(list));
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      CheckJob job = base;
      if (!(fields >> job.cnf)) continue;
      if (!(fields >> job.proof)) throw InputError("missing proof in: " + line);
      work.push_back(std::move(job));
    }
    return kExitOk;
  });
  if (status != kExitOk) return status;

  std::vector<std::string> outs(work.size());
  std::vector<std::string> errs(work.size());
  std::vector<int> codes(work.size(), kExitOk);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < work.size();) {
      std::ostringstream o;
      std::ostringstream e;
      codes[i] = RunCheck(work[i], o, e);
      outs[i] = o.str();
      errs[i] = e.str();
    }
  };
  std::vector<std::thread> pool;
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  for (size_t i = 0; i < work.size(); ++i) {
    out << "c file " << work[i].proof << "\n" << outs[i];
    err << errs[i];
    status = std::max(status, codes[i]);
  }
  return status;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Checks and transforms DRAT, LRAT and ER proofs."};
  app.require_subcommand(1);

  std::string mode_name = "specified";
  bool binary = false;
  bool text = false;
  auto add_drat_options = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_name, "DRAT deletion semantics")
        ->check(CLI::IsMember({"specified", "operational"}));
    auto* b = cmd->add_flag("--binary", binary, "Force binary DRAT");
    cmd->add_flag("--text", text, "Force text DRAT")->excludes(b);
  };

  CheckJob job;
  std::string batch;
  int jobs = 1;
  CLI::App* check = app.add_subcommand("check", "Check a proof");
  check->require_subcommand(1);
  for (const char* format : {"drat", "lrat", "er"}) {
    CLI::App* cmd = check->add_subcommand(format, std::string("Check a ") + format + " proof");
    cmd->add_option("cnf", job.cnf, "DIMACS formula");
    cmd->add_option("proof", job.proof, "Proof file");
    cmd->add_flag("--counters", job.counters, "Print work counters");
    cmd->add_option("--batch", batch, "File listing '<cnf> <proof>' pairs");
    cmd->add_option("--jobs", jobs, "Concurrent checks in batch mode")
        ->check(CLI::PositiveNumber);
    if (std::string(format) == "drat") add_drat_options(cmd);
    cmd->callback([&job, format] { job.format = format; });
  }

  std::string cnf_path;
  std::string proof_path;
  std::string out_lrat;
  std::string out_drat;
  std::string out_core;
  std::string out_path;
  CLI::App* trim = app.add_subcommand("trim", "Trim a DRAT proof and emit LRAT");
  trim->add_option("cnf", cnf_path)->required();
  trim->add_option("drat", proof_path)->required();
  trim->add_option("--out-lrat", out_lrat)->required();
  trim->add_option("--out-drat", out_drat);
  trim->add_option("--out-core", out_core);
  add_drat_options(trim);

  CLI::App* to_er = app.add_subcommand("to-er", "Translate a DRAT proof to ER");
  to_er->add_option("cnf", cnf_path)->required();
  to_er->add_option("drat", proof_path)->required();
  to_er->add_option("--out", out_path)->required();
  add_drat_options(to_er);

  uint64_t seed = 0;
  CLI::App* solve = app.add_subcommand("solve", "Solve a formula");
  solve->add_option("cnf", cnf_path)->required();
  solve->add_option("--proof", out_path, "Write a DRAT proof when unsatisfiable");
  solve->add_option("--seed", seed);

  int n = 0;
  int vars = 0;
  int clauses = 0;
  int width = 3;
  CLI::App* gen = app.add_subcommand("gen", "Generate a formula");
  gen->require_subcommand(1);
  CLI::App* php = gen->add_subcommand("php", "Pigeonhole formula");
  php->add_option("n", n)->required()->check(CLI::PositiveNumber);
  php->add_option("--out", out_path);
  CLI::App* random = gen->add_subcommand("random", "Random k-CNF");
  random->add_option("--vars", vars)->required()->check(CLI::PositiveNumber);
  random->add_option("--clauses", clauses)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--width", width)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--seed", seed)->required();
  random->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CheckMode mode = mode_name == "operational" ? CheckMode::Operational()
                                                    : CheckMode::Specified();
  const Encoding encoding = binary ? Encoding::kBinary
                            : text ? Encoding::kText
                                   : Encoding::kAuto;

  if (check->parsed()) {
    job.mode = mode;
    job.encoding = encoding;
    if (!batch.empty()) return RunBatch(job, batch, jobs, out, err);
    if (job.cnf.empty() || job.proof.empty()) {
      err << "error: check needs <cnf> <proof> or --batch\n";
      return kExitUsage;
    }
    return RunCheck(job, out, err);
  }

  return Guarded(err, [&] {
    if (trim->parsed() || to_er->parsed()) {
      const Formula formula = LoadCnf(cnf_path);
      const CheckedProof cp =
          BackwardCheck(formula, LoadDrat(proof_path, encoding), mode);
      if (to_er->parsed()) {
        const std::vector<ErLine> er = ToEr(formula, cp);
        WriteFile(out_path, WriteEr(er));
        out << "c er_lines " << er.size() << "\n";
        return kExitOk;
      }
      const TrimmedProof trimmed = EmitTrimmed(cp);
      const std::vector<LratLine> lrat = EmitLrat(cp);
      if (!CheckLrat(formula, lrat).verified ||
          !CheckDrat(trimmed.core_cnf, trimmed.drat, mode).verified) {
        throw TranslationInvariantViolation("trimmed proof does not re-verify");
      }
      WriteFile(out_lrat, WriteLrat(lrat));
      if (!out_drat.empty()) WriteFile(out_drat, WriteDratText(trimmed.drat));
      if (!out_core.empty()) WriteFile(out_core, WriteDimacs(trimmed.core_cnf));
      out << "c core_clauses " << trimmed.core_cnf.size() << "\n"
          << "c core_additions " << cp.num_core_additions() << "\n"
          << "c proof_steps " << cp.steps.size() << "\n";
      return kExitOk;
    }
    if (solve->parsed()) {
      const SolveResult result = CdclSolve(LoadCnf(cnf_path), seed);
      if (result.sat) {
        out << "s SATISFIABLE\nv";
        for (size_t v = 1; v < result.model.size(); ++v) {
          out << " " << (result.model[v] ? "" : "-") << v;
        }
        out << " 0\n";
      } else {
        out << "s UNSATISFIABLE\n";
        if (!out_path.empty()) WriteFile(out_path, WriteDratText(result.proof));
      }
      out << "c conflicts " << result.stats.conflicts << "\n"
          << "c decisions " << result.stats.decisions << "\n";
      return kExitOk;
    }
    const Formula formula =
        php->parsed() ? GenPhp(n) : GenRandom(vars, clauses, width, seed);
    const std::string dimacs = WriteDimacs(formula);
    if (out_path.empty()) {
      out << dimacs;
    } else {
      WriteFile(out_path, dimacs);
    }
    return kExitOk;
  });
}

}  // namespace satproof
