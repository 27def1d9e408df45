// Copyright 2026 The pdcover Authors.
//
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

#include <pybind11/pybind11.h>

#include "pdcover/gen.hpp"
#include "pdcover/io.hpp"

namespace py = pybind11;

namespace {

using pdcover::io::Instance;
using Json = pdcover::io::Json;

py::object to_py(const Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

Instance instance_from_text(const std::string& text) {
  return pdcover::io::parse_instance(Json::parse(text));
}

py::object solve_text(const std::string& text, bool cleanup_phase, bool raw, bool certificate,
                      std::size_t budget) {
  Instance inst = instance_from_text(text);
  if (inst.is_product()) {
    auto tr = raw ? pdcover::ProductTruncation::raw(*inst.product)
                  : pdcover::ProductTruncation::truncate(*inst.product);
    pdcover::ProductRunResult run = pdcover::revised_solve_truncated(tr, cleanup_phase, budget);
    std::optional<pdcover::WitnessReport> witness;
    std::optional<pdcover::ProductCertificate> cert;
    if (certificate) {
      witness = pdcover::witness_cover_diagnostics(tr, run, budget);
      cert = pdcover::build_product_certificate(run, *witness, tr, budget);
    }
    return to_py(pdcover::io::product_run_json(run, tr, witness, cert, inst.element_names));
  }
  auto tr = raw ? pdcover::TruncatedSystem::raw(*inst.plain) : pdcover::truncate(*inst.plain);
  pdcover::RunResult run = pdcover::solve_truncated(tr);
  std::optional<pdcover::Certificate> cert;
  if (certificate) cert = pdcover::build_certificate(run, tr, budget);
  return to_py(pdcover::io::run_result_json(run, tr, cert, inst.element_names));
}

py::object validate_text(const std::string& text, std::size_t budget) {
  Instance inst = instance_from_text(text);
  pdcover::ValidationReport report =
      inst.is_product() ? pdcover::apps::validate_product_properties(*inst.product, budget)
                        : pdcover::validate_greedy_properties(*inst.plain, budget);
  return to_py(pdcover::io::validation_json(report, inst.element_names));
}

py::object oracle_text(const std::string& text, std::size_t budget) {
  Instance inst = instance_from_text(text);
  pdcover::OracleResult opt = inst.is_product() ? pdcover::exact_opt(*inst.product, budget)
                                                : pdcover::exact_opt(*inst.plain, budget);
  return to_py(pdcover::io::oracle_json(opt, inst.element_names));
}

py::object generate(const std::string& family, int size, std::uint64_t seed) {
  return to_py(pdcover::gen::gen_json(family, size, seed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "primal-dual greedy solver for weighted integer covering problems";
  m.def("solve", &solve_text, py::arg("instance_json"), py::arg("cleanup") = true,
        py::arg("raw_matrix") = false, py::arg("certificate") = true,
        py::arg("budget") = std::size_t{10'000'000},
        "Solve an instance given as a JSON string; returns the run result as a dict.");
  m.def("validate", &validate_text, py::arg("instance_json"),
        py::arg("budget") = std::size_t{10'000'000},
        "Check the greedy-system properties; returns the validation report as a dict.");
  m.def("oracle", &oracle_text, py::arg("instance_json"),
        py::arg("budget") = std::size_t{10'000'000},
        "Exact optimum by exhaustive enumeration; returns a dict.");
  m.def("generate", &generate, py::arg("family"), py::arg("size"), py::arg("seed") = 1,
        "Deterministic instance generator; returns the instance as a dict.");
}
