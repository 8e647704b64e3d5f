// Copyright 2026 The vncorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vncorr/applications.hpp"
#include "vncorr/closedform.hpp"
#include "vncorr/correlator.hpp"
#include "vncorr/io.hpp"
#include "vncorr/witness.hpp"

namespace py = pybind11;
using namespace vncorr;

namespace {

DensityMatrix to_state(const Matrix& rho, int m, int n) { return DensityMatrix(rho, BipartiteDims(m, n)); }

OptimizerConfig make_config(int starts, std::uint64_t seed, unsigned workers) {
  OptimizerConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  cfg.workers = workers;
  return cfg;
}

Which parse_which(const std::string& w) {
  if (w == "q1") return Which::kQ1;
  if (w == "q2") return Which::kQ2;
  if (w == "q12") return Which::kQ12;
  throw InvalidInput("which must be q1, q2 or q12, got '" + w + "'");
}

std::optional<ProjectiveBasis> as_basis(const std::optional<Matrix>& u) {
  if (!u) return std::nullopt;
  return ProjectiveBasis(*u);
}

}  // namespace

PYBIND11_MODULE(_vncorr, m) {
  m.doc() = "Measurement-induced correlations of bipartite density matrices";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("q1", &CorrelationReport::q1)
      .def_readonly("q2", &CorrelationReport::q2)
      .def_readonly("q12", &CorrelationReport::q12)
      .def_readonly("delta", &CorrelationReport::delta)
      .def_readonly("converged", &CorrelationReport::converged)
      .def_readonly("evaluations", &CorrelationReport::evaluations)
      .def("__repr__", [](const CorrelationReport& r) {
        return "CorrelationReport(q1=" + std::to_string(r.q1) + ", q2=" + std::to_string(r.q2) +
               ", q12=" + std::to_string(r.q12) + ", delta=" + std::to_string(r.delta) + ")";
      });

  py::class_<WitnessEstimate>(m, "WitnessEstimate")
      .def_readonly("mean", &WitnessEstimate::mean)
      .def_readonly("std_error", &WitnessEstimate::std_error)
      .def_readonly("samples", &WitnessEstimate::samples)
      .def_readonly("f", &WitnessEstimate::f)
      .def_readonly("inferred", &WitnessEstimate::inferred)
      .def_readonly("reference", &WitnessEstimate::reference);

  m.def(
      "correlations",
      [](const Matrix& rho, int dim_a, int dim_b, int starts, std::uint64_t seed, unsigned workers) {
        const DensityMatrix state = to_state(rho, dim_a, dim_b);
        py::gil_scoped_release release;
        return compute_report(state, make_config(starts, seed, workers));
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("starts") = 0, py::arg("seed") = kDefaultSeed,
      py::arg("workers") = 0u, "Q1, Q2, Q12 and delta of a density matrix.");

  m.def(
      "minimize",
      [](const Matrix& rho, int dim_a, int dim_b, const std::string& which, int starts, std::uint64_t seed) {
        const DensityMatrix state = to_state(rho, dim_a, dim_b);
        const Which w = parse_which(which);
        py::gil_scoped_release release;
        const MinimizeResult r = minimize_q(state, w, make_config(starts, seed, 0));
        return r.value;
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("which"), py::arg("starts") = 0,
      py::arg("seed") = kDefaultSeed);

  m.def(
      "q_fixed",
      [](const Matrix& rho, int dim_a, int dim_b, const std::string& which, const std::optional<Matrix>& basis_a,
         const std::optional<Matrix>& basis_b) {
        return q_fixed(to_state(rho, dim_a, dim_b), parse_which(which), as_basis(basis_a), as_basis(basis_b));
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("which"), py::arg("basis_a") = py::none(),
      py::arg("basis_b") = py::none(), "Squared distance to the dephased state; bases are unitary column matrices.");

  m.def(
      "purity", [](const Matrix& rho, int dim_a, int dim_b) { return purity(to_state(rho, dim_a, dim_b)); },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));

  m.def(
      "pure_state_correlation", [](const RealVector& lambdas) { return pure_state_correlation(lambdas); },
      py::arg("schmidt_coefficients"));

  m.def(
      "family_state",
      [](const std::string& family, int n, double fidelity) {
        const Family f = family == "werner" ? Family::kWerner : Family::kIsotropic;
        if (family != "werner" && family != "isotropic") throw InvalidInput("family must be isotropic or werner");
        return Matrix(make_family({f, n, fidelity}).matrix());
      },
      py::arg("family"), py::arg("n"), py::arg("fidelity"));

  m.def(
      "family_correlation",
      [](const std::string& family, int n, double fidelity) {
        if (family != "werner" && family != "isotropic") throw InvalidInput("family must be isotropic or werner");
        return family_correlation({family == "werner" ? Family::kWerner : Family::kIsotropic, n, fidelity});
      },
      py::arg("family"), py::arg("n"), py::arg("fidelity"));

  m.def(
      "witness",
      [](const Matrix& rho, int dim_a, int dim_b, const std::string& target, long samples,
         const std::optional<Matrix>& basis_a, const std::optional<Matrix>& basis_b, std::uint64_t seed) {
        WitnessConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.target = target == "q1"    ? WitnessTarget::kQ1
                     : target == "q2"  ? WitnessTarget::kQ2
                     : target == "q12" ? WitnessTarget::kQ12
                                       : WitnessTarget::kDelta;
        cfg.basis1 = as_basis(basis_a);
        cfg.basis2 = as_basis(basis_b);
        const DensityMatrix state = to_state(rho, dim_a, dim_b);
        py::gil_scoped_release release;
        return estimate(state, cfg);
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("target"), py::arg("samples") = 10000,
      py::arg("basis_a") = py::none(), py::arg("basis_b") = py::none(), py::arg("seed") = kDefaultSeed);

  m.def(
      "screen",
      [](const std::vector<Vector>& states, const std::vector<double>& probabilities) {
        std::vector<PureStateVec> kets;
        for (const Vector& s : states) kets.emplace_back(s, BipartiteDims(2, 2));
        const ScreenVerdict v = locc_screen(Ensemble(kets, probabilities), OptimizerConfig{});
        py::dict out;
        out["orthogonal"] = v.orthogonal;
        out["all_product"] = v.all_product;
        out["delta"] = v.delta_value;
        out["verdict"] = std::string(to_string(v.verdict));
        return out;
      },
      py::arg("states"), py::arg("probabilities"), "Joint-correlation screen of a two-qubit ensemble.");

  m.def(
      "load_state",
      [](const std::string& path) {
        const StateDocument doc = parse_state(read_text_file(path));
        return py::make_tuple(Matrix(doc.rho.matrix()), doc.rho.dims().m, doc.rho.dims().n);
      },
      py::arg("path"));

  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
