// Copyright 2026 The relspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <optional>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relspin/electrodynamics.hpp"
#include "relspin/error.hpp"
#include "relspin/experiments.hpp"
#include "relspin/minkowski.hpp"
#include "relspin/spin_measurement.hpp"
#include "relspin/wigner.hpp"

namespace py = pybind11;
using namespace relspin;

namespace {

EMFieldTensor field(const ThreeVector& e, const ThreeVector& b) { return tensor_from_fields(e, b); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relativistic spin measurement scenarios";

    static py::exception<Error> error(m, "RelspinError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("boost_matrix", [](const ThreeVector& v) { return boost_from_velocity(v).matrix(); }, py::arg("velocity"));
    m.def("rotation_matrix", [](const ThreeVector& axis, double angle) { return rotation_about_axis(axis, angle).matrix(); },
          py::arg("axis"), py::arg("angle"));
    m.def("momentum_from_velocity",
          [](const ThreeVector& v, double mass) { return momentum_from_velocity(v, mass).components(); },
          py::arg("velocity"), py::arg("mass") = 1.0);

    m.def(
        "wigner_rotation",
        [](const Eigen::Matrix4d& lambda, const ThreeVector& velocity, double mass) {
            const WignerRotation w =
                wigner_rotation(LorentzTransform::from_matrix(lambda), momentum_from_velocity(velocity, mass), mass);
            const AxisAngle aa = axis_angle(w.rotation);
            return py::make_tuple(w.rotation.matrix(), aa.axis, aa.angle, su2_from_rotation(w.rotation).matrix());
        },
        py::arg("lorentz"), py::arg("velocity"), py::arg("mass") = 1.0,
        "Returns (R, axis, angle, su2) for W(Λ, p).");

    m.def("fields_in_frame",
          [](const Eigen::Matrix4d& lambda, const ThreeVector& e, const ThreeVector& b) {
              const FieldPair f = fields_from_tensor(transform_tensor(LorentzTransform::from_matrix(lambda), field(e, b)));
              return py::make_tuple(f.electric, f.magnetic);
          },
          py::arg("lorentz"), py::arg("e"), py::arg("b"));

    m.def("sg_expectation",
          [](const ThreeVector& velocity, const ThreeVector& bloch, const ThreeVector& e, const ThreeVector& b, double mass) {
              return sg_expectation(momentum_from_velocity(velocity, mass), mass, bloch, field(e, b));
          },
          py::arg("velocity"), py::arg("bloch"), py::arg("e"), py::arg("b"), py::arg("mass") = 1.0);
    m.def("pl_expectation",
          [](const ThreeVector& velocity, const ThreeVector& bloch, double g0, const ThreeVector& g, double mass) {
              return pl_expectation(momentum_from_velocity(velocity, mass), mass, bloch, FourVectorCoupling(g0, g));
          },
          py::arg("velocity"), py::arg("bloch"), py::arg("g0"), py::arg("g"), py::arg("mass") = 1.0);

    m.def("closed_form_expectation", &closed_form_expectation, py::arg("v"), py::arg("theta"));
    m.def("two_apparatus_sg", [](double v, double theta, double mass) { return two_apparatus_sg({v, theta}, mass); },
          py::arg("v"), py::arg("theta"), py::arg("mass") = 1.0);
    m.def("two_apparatus_pl", [](double v, double theta, double mass) { return two_apparatus_pl({v, theta}, mass); },
          py::arg("v"), py::arg("theta"), py::arg("mass") = 1.0);

    m.def(
        "scan_fig1",
        [](double theta, std::optional<std::vector<double>> grid) {
            const ScanResult scan = scan_fig1(theta, grid ? *grid : default_fig1_grid());
            py::list rows;
            for (const ScanRow& r : scan.rows) {
                py::dict d;
                d["v"] = r.v;
                d["expectation_sg"] = r.expectation_sg;
                d["expectation_pl"] = r.expectation_pl;
                d["closed_form"] = r.closed_form;
                rows.append(d);
            }
            return rows;
        },
        py::arg("theta"), py::arg("v_grid") = py::none());

    m.def("fig2_geometry",
          [](double v, double theta) {
              const Fig2Geometry g = fig2_geometry(v, theta);
              return py::make_tuple(g.angle_B1B2_rest, g.angle_G1G2_rest);
          },
          py::arg("v"), py::arg("theta"));

    m.def(
        "paradox_demo",
        [](const std::vector<ThreeVector>& velocities, const ThreeVector& b, const ThreeVector& e,
           std::optional<ThreeVector> spin, double mass) {
            std::vector<FourVector> momenta;
            for (const ThreeVector& v : velocities) momenta.push_back(momentum_from_velocity(v, mass));
            const ParadoxResult r = paradox_demo(momenta, mass, field(e, b), spin);
            py::dict d;
            d["prob_plus_first"] = r.prob_plus_first;
            d["purity_before"] = r.purity_before;
            d["purity_after"] = r.purity_after;
            d["remeasure_prob_plus"] = r.remeasure_prob_plus;
            d["axes"] = r.axes;
            return d;
        },
        py::arg("velocities"), py::arg("b"), py::arg("e") = ThreeVector::Zero().eval(), py::arg("spin") = py::none(),
        py::arg("mass") = 1.0);

    m.def(
        "frame_check",
        [](std::uint64_t seed, int trials) {
            const FrameCheckReport report = frame_check(seed, trials);
            py::list rows;
            for (const FrameCheckRow& r : report.rows) {
                py::dict d;
                d["check"] = r.check;
                d["max_residual"] = r.max_residual;
                d["tolerance"] = r.tolerance;
                d["passed"] = r.passed();
                rows.append(d);
            }
            return rows;
        },
        py::arg("seed") = 42, py::arg("trials") = 1000);
}
