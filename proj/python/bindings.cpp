// Copyright 2026 The ajcgate Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ajc/errors.hpp"
#include "ajc/oracle.hpp"
#include "ajc/protocols.hpp"
#include "ajc/reports.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace ajc;

namespace {

py::dict model_dict(const ModelOperators &ops) {
    return py::dict("hamiltonian"_a = ops.hamiltonian.matrix(), "excitation_number"_a = ops.excitation_number.matrix(),
                    "transition"_a = ops.transition.matrix());
}

py::dict row_dict(const TruthRow &row) {
    py::list order;
    for (Mode m : row.pass_order) {
        order.append(to_string(m));
    }
    return py::dict("control"_a = to_string(row.control), "target"_a = to_string(row.target), "pass_order"_a = order,
                    "output"_a = row.output.amplitudes(), "dominant"_a = to_string(row.dominant),
                    "probability"_a = row.probability, "amplitude"_a = row.amplitude, "phase"_a = row.phase,
                    "fidelity_phase_blind"_a = row.fidelity_phase_blind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Anti-Jaynes-Cummings gate simulator";

    auto physics = py::register_exception<PhysicsError>(m, "PhysicsError", PyExc_RuntimeError);
    py::register_exception<RegimeError>(m, "RegimeError", physics.ptr());
    py::register_exception<LeakageError>(m, "LeakageError", physics.ptr());
    py::register_exception<CutoffError>(m, "CutoffError", physics.ptr());
    py::register_exception<CalibrationError>(m, "CalibrationError", physics.ptr());

    py::enum_<Atom>(m, "Atom").value("g", Atom::g).value("e", Atom::e);
    py::enum_<Mode>(m, "Mode").value("A", Mode::A).value("B", Mode::B);
    py::enum_<Routing>(m, "Routing")
        .value("paper", Routing::paper)
        .value("fixed_ab", Routing::fixed_ab)
        .value("fixed_ba", Routing::fixed_ba);
    py::enum_<Backend>(m, "Backend").value("closed_form", Backend::closed_form).value("oracle", Backend::oracle);
    py::enum_<DualRail>(m, "DualRail").value("mu1", DualRail::mu1).value("mu2", DualRail::mu2);
    py::enum_<ExponentSign>(m, "ExponentSign").value("minus", ExponentSign::minus).value("plus", ExponentSign::plus);
    py::enum_<TransferObjective>(m, "TransferObjective")
        .value("full", TransferObjective::full)
        .value("half", TransferObjective::half);
    py::enum_<HadamardMethod>(m, "HadamardMethod")
        .value("operator", HadamardMethod::operator_action)
        .value("timed", HadamardMethod::timed_evolution);

    py::class_<SpaceConfig>(m, "SpaceConfig")
        .def(py::init(&make_space), "n_max_a"_a = 3, "n_max_b"_a = 3)
        .def_readonly("n_max_a", &SpaceConfig::n_max_a)
        .def_readonly("n_max_b", &SpaceConfig::n_max_b)
        .def_property_readonly("dim", &SpaceConfig::dim)
        .def("index_of", [](const SpaceConfig &c, Atom atom, int n_a, int n_b) {
            return index_of(c, BasisLabel{atom, n_a, n_b});
        });

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<double, double, double>(), "omega"_a, "omega0"_a, "lambda_coupling"_a = 1.0)
        .def_property_readonly("omega", &SystemParams::omega)
        .def_property_readonly("omega0", &SystemParams::omega0)
        .def_property_readonly("lambda_coupling", &SystemParams::lambda_coupling)
        .def_property_readonly("delta", &SystemParams::delta)
        .def_property_readonly("delta_bar", &SystemParams::delta_bar)
        .def_property_readonly("alpha", &SystemParams::alpha)
        .def_property_readonly("alpha_bar", &SystemParams::alpha_bar);

    py::class_<DoubletBranch>(m, "DoubletBranch")
        .def_static("from_ground", &DoubletBranch::from_ground)
        .def_static("from_excited", &DoubletBranch::from_excited)
        .def_property_readonly("n", &DoubletBranch::n)
        .def("__repr__", [](const DoubletBranch &b) { return to_string(b); });

    py::class_<DoubletParams>(m, "DoubletParams")
        .def_readonly("c_bar", &DoubletParams::c_bar)
        .def_readonly("s_bar", &DoubletParams::s_bar)
        .def_readonly("rabi_freq", &DoubletParams::rabi_freq)
        .def_readonly("a_bar", &DoubletParams::a_bar);

    m.def("doublet_params", &doublet_params, "params"_a, "branch"_a);
    m.def(
        "build_rabi",
        [](const SystemParams &p, Mode mode, const SpaceConfig &c) { return build_rabi(p, mode, c).matrix(); },
        "params"_a, "mode"_a, "config"_a = SpaceConfig{});
    m.def(
        "build_jc", [](const SystemParams &p, Mode mode, const SpaceConfig &c) { return model_dict(build_jc(p, mode, c)); },
        "params"_a, "mode"_a, "config"_a = SpaceConfig{});
    m.def(
        "build_ajc",
        [](const SystemParams &p, Mode mode, const SpaceConfig &c) { return model_dict(build_ajc(p, mode, c)); },
        "params"_a, "mode"_a, "config"_a = SpaceConfig{});
    m.def("check_decomposition", &check_decomposition, "params"_a, "mode"_a, "config"_a = SpaceConfig{});

    m.def(
        "evolve",
        [](const CMatrix &h, double t, const CVector &initial, const SpaceConfig &c) {
            return evolve(EvolutionJob{OperatorMatrix(c, h), t, StateVector(c, initial)}).amplitudes();
        },
        "hamiltonian"_a, "duration"_a, "initial"_a, "config"_a = SpaceConfig{});
    m.def(
        "qubit_evolution",
        [](const SystemParams &p, const DoubletBranch &b, double t, const CVector &state, const SpaceConfig &c) {
            return qubit_evolution(p, b, t, StateVector(c, state)).amplitudes();
        },
        "params"_a, "branch"_a, "t"_a, "state"_a, "config"_a = SpaceConfig{});

    m.def("success_probability", &success_probability, "theta_a"_a, "theta_b"_a);
    m.def(
        "calibrate_pulse",
        [](const SystemParams &p, const DoubletBranch &b, TransferObjective o) {
            Calibration cal = calibrate_pulse(p, b, o);
            return py::make_tuple(cal.duration, cal.probability);
        },
        "params"_a, "branch"_a, "objective"_a = TransferObjective::full);
    m.def(
        "cnot_truth_table",
        [](const SystemParams &p, Routing routing, bool calibrated, Backend backend, const SpaceConfig &c) {
            GateReport r = cnot_truth_table(cnot_schedule(p, routing, calibrated), backend, c);
            py::list rows;
            for (const TruthRow &row : r.rows) {
                rows.append(row_dict(row));
            }
            return py::dict("rows"_a = rows, "success_probability_analytic"_a = r.success_probability_analytic,
                            "success_probability_simulated"_a = r.success_probability_simulated,
                            "target_unitary_g"_a = r.target_unitary[0], "target_unitary_e"_a = r.target_unitary[1],
                            "process_fidelity"_a = r.process_fidelity, "phases_consistent"_a = r.phases_consistent);
        },
        "params"_a, "routing"_a = Routing::paper, "calibrated"_a = true, "backend"_a = Backend::oracle,
        "config"_a = SpaceConfig{});
    m.def(
        "hadamard_apply",
        [](const SystemParams &p, Atom initial, HadamardMethod method, const SpaceConfig &c) {
            return hadamard_apply(p, initial, c, method).amplitudes();
        },
        "params"_a, "initial"_a, "method"_a = HadamardMethod::operator_action, "config"_a = SpaceConfig{});

    m.def(
        "report",
        [](const std::string &command, double omega, double omega0, int n_max) {
            static const std::map<std::string, Command> commands{{"decompose-check", Command::decompose_check},
                                                                 {"cnot", Command::cnot},
                                                                 {"hadamard", Command::hadamard},
                                                                 {"calibrate", Command::calibrate},
                                                                 {"sweep", Command::sweep}};
            auto it = commands.find(command);
            if (it == commands.end()) {
                throw std::invalid_argument("unknown command " + command);
            }
            RunConfig config;
            config.command = it->second;
            config.omega = omega;
            config.omega0 = omega0;
            config.n_max = n_max;
            return render(config);
        },
        "command"_a, "omega"_a, "omega0"_a, "n_max"_a = 3, "JSON report text for one CLI command");
}
