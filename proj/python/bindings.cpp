// Copyright 2026 The blochorbit Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blochorbit/blochorbit.hpp"

namespace py = pybind11;
using namespace blochorbit;

namespace {

py::dict report_dict(const ValidationReport& r) {
  py::dict d;
  d["valid"] = r.valid();
  d["finite"] = r.finite;
  d["positive"] = r.positive;
  d["norms_ok"] = r.norms_ok;
  d["product"] = r.product;
  d["hermitian_error"] = r.hermitian_error;
  d["trace_error"] = r.trace_error;
  d["min_eigenvalue"] = r.min_eigenvalue;
  d["r1_norm"] = r.r1_norm;
  d["r2_norm"] = r.r2_norm;
  d["product_residual"] = r.product_residual;
  d["violations"] = r.violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit dynamics in the coherence-vector representation";

  py::enum_<Axis>(m, "Axis").value("x", Axis::x).value("y", Axis::y).value("z", Axis::z);
  py::enum_<Subsystem>(m, "Subsystem")
      .value("first", Subsystem::first)
      .value("second", Subsystem::second);
  py::enum_<Degeneracy>(m, "Degeneracy")
      .value("none", Degeneracy::none)
      .value("circle", Degeneracy::circle)
      .value("line", Degeneracy::line)
      .value("point", Degeneracy::point);

  m.def("parse_axis", &parse_axis, py::arg("name"));

  py::class_<TwoQubitState>(m, "TwoQubitState")
      .def(py::init<>())
      .def(py::init([](const Vec3& r1, const Vec3& r2, const Mat3& t) {
             return TwoQubitState{r1, r2, t};
           }),
           py::arg("r1"), py::arg("r2"), py::arg("T"))
      .def_readwrite("r1", &TwoQubitState::r1)
      .def_readwrite("r2", &TwoQubitState::r2)
      .def_readwrite("T", &TwoQubitState::T)
      .def("components", &TwoQubitState::components)
      .def_static("from_components", &TwoQubitState::from_components)
      .def("max_abs_diff", &TwoQubitState::max_abs_diff)
      .def("__repr__", [](const TwoQubitState& s) {
        return "TwoQubitState(r1=[" + std::to_string(s.r1.x()) + ", " + std::to_string(s.r1.y()) +
               ", " + std::to_string(s.r1.z()) + "], r2=[" + std::to_string(s.r2.x()) + ", " +
               std::to_string(s.r2.y()) + ", " + std::to_string(s.r2.z()) + "], ...)";
      });

  m.def("from_density", [](const Matrix4c& rho) { return from_density(DensityMatrix4(rho)); },
        py::arg("rho"), "Coherence form of a 4x4 density matrix; raises ValueError if invalid.");
  m.def("to_density", [](const TwoQubitState& s) { return to_density(s).matrix(); }, py::arg("state"));
  m.def("reconstruct", &reconstruct, py::arg("state"));
  m.def("product_state", &product_state, py::arg("r1"), py::arg("r2"));
  m.def("subsystem_purity", &subsystem_purity, py::arg("state"), py::arg("which"));
  m.def("linear_entropy", &linear_entropy, py::arg("state"), py::arg("which"));
  m.def("global_purity", &global_purity, py::arg("state"));
  m.def("validate", [](const TwoQubitState& s) { return report_dict(validate(s)); }, py::arg("state"));

  py::class_<LocalRotation>(m, "LocalRotation")
      .def(py::init<Subsystem, Vec3, double>(), py::arg("target"), py::arg("axis"), py::arg("angle"))
      .def_readwrite("target", &LocalRotation::target)
      .def_readwrite("axis", &LocalRotation::axis)
      .def_readwrite("angle", &LocalRotation::angle);
  py::class_<OneDimInteraction>(m, "OneDimInteraction")
      .def(py::init<Axis, Axis, double>(), py::arg("i"), py::arg("j"), py::arg("phi") = 0.0)
      .def_readwrite("i", &OneDimInteraction::i)
      .def_readwrite("j", &OneDimInteraction::j)
      .def_readwrite("phi", &OneDimInteraction::phi);
  py::class_<HeisenbergExchange>(m, "HeisenbergExchange")
      .def(py::init<double, double>(), py::arg("c"), py::arg("phi") = 0.0)
      .def_readwrite("c", &HeisenbergExchange::coupling)
      .def_readwrite("phi", &HeisenbergExchange::phi);
  py::class_<CartanInteraction>(m, "CartanInteraction")
      .def(py::init<double, double, double>(), py::arg("c1"), py::arg("c2"), py::arg("c3"))
      .def_readwrite("c1", &CartanInteraction::c1)
      .def_readwrite("c2", &CartanInteraction::c2)
      .def_readwrite("c3", &CartanInteraction::c3);

  m.def("apply_interaction", &apply_interaction, py::arg("state"), py::arg("spec"));
  m.def("evolve", &evolve, py::arg("state"), py::arg("spec"), py::arg("phi"));
  m.def(
      "trace_orbit",
      [](const TwoQubitState& s, const InteractionSpec& spec, double phi_max, int n) {
        const OrbitTrace tr = trace_orbit(s, spec, phi_max, n);
        Eigen::VectorXd phi(n);
        Eigen::Matrix<double, Eigen::Dynamic, 15, Eigen::RowMajor> rows(n, 15);
        for (int t = 0; t < n; ++t) {
          phi[t] = tr.samples[t].phi;
          const TwoQubitState& st = tr.samples[t].state;
          rows.block<1, 3>(t, 0) = st.r1.transpose();
          rows.block<1, 3>(t, 3) = st.r2.transpose();
          for (int r = 0; r < 3; ++r) rows.block<1, 3>(t, 6 + 3 * r) = st.T.row(r);
        }
        return py::make_tuple(phi, rows);
      },
      py::arg("state"), py::arg("spec"), py::arg("phi_max"), py::arg("n"),
      "Returns (phi, components) with components[t] = (r1, r2, T row-major).");

  py::class_<EllipseParams>(m, "EllipseParams")
      .def_readonly("a", &EllipseParams::a)
      .def_readonly("b", &EllipseParams::b)
      .def_readonly("psi", &EllipseParams::psi)
      .def_readonly("chi", &EllipseParams::chi)
      .def_readonly("orientation", &EllipseParams::orientation)
      .def_readonly("rate", &EllipseParams::rate)
      .def_readonly("center", &EllipseParams::center)
      .def_readonly("degeneracy", &EllipseParams::degeneracy)
      .def_property_readonly("normal", [](const EllipseParams& e) { return e.plane.normal; })
      .def("point", &EllipseParams::point, py::arg("phi"));
  m.def("fit_one_dim", &fit_one_dim, py::arg("state"), py::arg("which"), py::arg("i"), py::arg("j"));
  m.def("heisenberg_ellipse", &heisenberg_ellipse, py::arg("state"), py::arg("c"),
        py::arg("which") = Subsystem::first);
  m.def("semi_minor_product", &semi_minor_product, py::arg("state"), py::arg("which"), py::arg("i"),
        py::arg("j"));

  py::class_<ReachableDisk>(m, "ReachableDisk")
      .def_readonly("a", &ReachableDisk::a)
      .def_readonly("b", &ReachableDisk::b)
      .def_readonly("fixed_component", &ReachableDisk::fixed_component)
      .def("center", &ReachableDisk::center)
      .def("ellipse_value", &ReachableDisk::ellipse_value, py::arg("r_s"));
  m.def("reachable_disk", &reachable_disk, py::arg("state"), py::arg("i"), py::arg("j"));
  m.def("sample_reachable", &sample_reachable_sequences, py::arg("state"), py::arg("i"), py::arg("j"),
        py::arg("n"), py::arg("steps") = 1, py::arg("seed") = 5489u);

  py::class_<EntanglementReport>(m, "EntanglementReport")
      .def_readonly("phi_grid", &EntanglementReport::phi_grid)
      .def_readonly("entropy1", &EntanglementReport::entropy1)
      .def_readonly("entropy2", &EntanglementReport::entropy2)
      .def_readonly("max_entropy", &EntanglementReport::max_entropy)
      .def_readonly("phi_star", &EntanglementReport::phi_star)
      .def_readonly("maximal", &EntanglementReport::maximal);
  m.def("heisenberg_entanglement_scan", &heisenberg_entanglement_scan, py::arg("state"), py::arg("c"),
        py::arg("n") = 256);

  py::module_ orc = m.def_submodule("oracle", "Brute-force 4x4 density-matrix reference");
  orc.def("unitary_for", &oracle::unitary_for, py::arg("spec"));
  orc.def("evolve_state", &oracle::evolve_state, py::arg("state"), py::arg("spec"));
  orc.def(
      "partial_trace",
      [](const Matrix4c& rho, Subsystem keep) { return oracle::partial_trace(rho, keep); },
      py::arg("rho"), py::arg("keep"));
}
