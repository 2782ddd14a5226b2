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

// Python bindings: documents cross the boundary as text (or bytes for
// binary DRAT); reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "satproof/checkers.h"
#include "satproof/formats.h"
#include "satproof/pipeline.h"
#include "satproof/testkit.h"

namespace py = pybind11;

namespace satproof {
namespace {

CheckMode ModeFromName(const std::string& name) {
  if (name == "specified") return CheckMode::Specified();
  if (name == "operational") return CheckMode::Operational();
  throw py::value_error("mode must be 'specified' or 'operational'");
}

py::dict ToDict(const CheckReport& r) {
  py::dict d;
  d["verified"] = r.verified;
  d["rejected_step"] = r.verified ? py::object(py::none()) : py::cast(r.rejected_step);
  d["reason"] = std::string(ToString(r.reason));
  d["detail"] = r.detail;
  d["steps_checked"] = r.steps_checked;
  d["rat_steps"] = r.rat_steps;
  d["visited_clauses"] = r.visited_clauses_total;
  d["ignored_deletions"] = r.ignored_deletions;
  return d;
}

Formula Cnf(const std::string& text) { return ParseDimacs(text).formula; }

CheckedProof Backward(const std::string& cnf, const py::bytes& drat,
                      const std::string& mode) {
  return BackwardCheck(Cnf(cnf), ParseDrat(std::string(drat)), ModeFromName(mode));
}

}  // namespace
}  // namespace satproof

PYBIND11_MODULE(_satproof, m) {
  using namespace satproof;
  m.doc() = "Checking and transforming DRAT, LRAT and ER proofs.";

  auto& error = py::register_exception<Error>(m, "SatproofError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ForwardRejected>(m, "ForwardRejected", error.ptr());

  m.def(
      "check_drat",
      [](const std::string& cnf, const py::bytes& proof, const std::string& mode) {
        return ToDict(CheckDrat(Cnf(cnf), ParseDrat(std::string(proof)),
                                ModeFromName(mode)));
      },
      py::arg("cnf"), py::arg("proof"), py::arg("mode") = "specified",
      "Checks a text or binary DRAT proof.");
  m.def(
      "check_lrat",
      [](const std::string& cnf, const std::string& proof) {
        return ToDict(CheckLrat(Cnf(cnf), ParseLrat(proof)));
      },
      py::arg("cnf"), py::arg("proof"));
  m.def(
      "check_er",
      [](const std::string& cnf, const std::string& proof) {
        return ToDict(CheckEr(Cnf(cnf), ParseEr(proof)));
      },
      py::arg("cnf"), py::arg("proof"));

  m.def(
      "trim",
      [](const std::string& cnf, const py::bytes& drat, const std::string& mode) {
        const CheckedProof cp = Backward(cnf, drat, mode);
        const TrimmedProof trimmed = EmitTrimmed(cp);
        py::dict d;
        d["lrat"] = WriteLrat(EmitLrat(cp));
        d["drat"] = WriteDratText(trimmed.drat);
        d["core_cnf"] = WriteDimacs(trimmed.core_cnf);
        return d;
      },
      py::arg("cnf"), py::arg("drat"), py::arg("mode") = "specified",
      "Returns the trimmed DRAT, its core CNF and the LRAT proof.");
  m.def(
      "to_er",
      [](const std::string& cnf, const py::bytes& drat, const std::string& mode) {
        const CheckedProof cp = Backward(cnf, drat, mode);
        return WriteEr(ToEr(cp.formula, cp));
      },
      py::arg("cnf"), py::arg("drat"), py::arg("mode") = "specified");

  m.def(
      "solve",
      [](const std::string& cnf, uint64_t seed) {
        const SolveResult r = CdclSolve(Cnf(cnf), seed);
        py::dict d;
        d["sat"] = r.sat;
        std::vector<int> model;
        for (size_t v = 1; v < r.model.size(); ++v) {
          model.push_back(r.model[v] ? static_cast<int>(v) : -static_cast<int>(v));
        }
        d["model"] = model;
        d["proof"] = r.sat ? std::string() : WriteDratText(r.proof);
        d["conflicts"] = r.stats.conflicts;
        return d;
      },
      py::arg("cnf"), py::arg("seed") = 0);

  m.def("gen_php", [](int n) { return WriteDimacs(GenPhp(n)); }, py::arg("n"));
  m.def(
      "gen_random",
      [](int vars, int clauses, int width, uint64_t seed) {
        return WriteDimacs(GenRandom(vars, clauses, width, seed));
      },
      py::arg("vars"), py::arg("clauses"), py::arg("width"), py::arg("seed"));
}
