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

#include "ajc/reports.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "ajc/errors.hpp"
#include "ajc/oracle.hpp"

namespace ajc {

namespace {

constexpr double kPi = std::numbers::pi;

Json complex_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json state_json(const StateVector &state) {
    Json out = Json::array();
    for (int i = 0; i < state.dim(); ++i) {
        Complex a = state.amplitudes()[i];
        if (std::abs(a) > 1e-12) {
            out.push_back(Json{{"label", to_string(label_of(state.config(), i))}, {"amplitude", complex_json(a)}});
        }
    }
    return out;
}

Json matrix_json(const Eigen::Matrix2cd &m) {
    Json out = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        out.push_back(row);
    }
    return out;
}

Json params_json(const RunConfig &config) {
    SystemParams p = config.params();
    return Json{
        {"command", to_string(config.command)},
        {"omega", p.omega()},
        {"omega0", p.omega0()},
        {"lambda", p.lambda_coupling()},
        {"delta", p.delta()},
        {"delta_bar", p.delta_bar()},
        {"alpha", p.alpha()},
        {"alpha_bar", p.alpha_bar()},
        {"n_max", config.n_max},
    };
}

Json finding(const std::string &id, const std::string &message, Json values) {
    return Json{{"id", id}, {"message", message}, {"values", std::move(values)}};
}

std::string format_number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

Json rows_json(const GateReport &report) {
    Json rows = Json::array();
    for (const TruthRow &row : report.rows) {
        Json order = Json::array();
        for (Mode m : row.pass_order) {
            order.push_back(to_string(m));
        }
        rows.push_back(Json{
            {"control", to_string(row.control)},
            {"target", to_string(row.target)},
            {"pass_order", order},
            {"dominant", to_string(row.dominant)},
            {"probability", row.probability},
            {"amplitude", complex_json(row.amplitude)},
            {"phase", row.phase},
            {"fidelity_phase_blind", row.fidelity_phase_blind},
            {"output", state_json(row.output)},
        });
    }
    return rows;
}

Json phase_table(const GateReport &report) {
    Json table = Json::array();
    for (const TruthRow &row : report.rows) {
        table.push_back(Json{
            {"control", to_string(row.control)},
            {"target", to_string(row.target)},
            {"dominant", to_string(row.dominant)},
            {"phase", row.phase},
        });
    }
    return table;
}

Json durations_json(PassDurations d) {
    return Json{{"first", d.first}, {"second", d.second}};
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
        case Command::decompose_check:
            return "decompose-check";
        case Command::cnot:
            return "cnot";
        case Command::hadamard:
            return "hadamard";
        case Command::calibrate:
            return "calibrate";
        case Command::sweep:
            return "sweep";
    }
    return "?";
}

double GridAxis::at(int i) const {
    if (steps == 1) {
        return lo;
    }
    return lo + (hi - lo) * i / (steps - 1);
}

void RunConfig::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(omega0) || omega < 0 || omega0 < 0) {
        throw std::invalid_argument("--omega and --omega0 must be finite and non-negative");
    }
    if (n_max < 2) {
        throw std::invalid_argument("--n-max must be >= 2");
    }
    if (output_format == OutputFormat::csv && command != Command::sweep) {
        throw std::invalid_argument("csv output is only available for sweep");
    }
    if (command == Command::calibrate) {
        if (photons < (entry == Atom::e ? 1 : 0)) {
            throw std::invalid_argument("calibration branch needs n >= 0 for a ground entry, n >= 1 for excited");
        }
        if (photons + (entry == Atom::g ? 1 : 0) > n_max) {
            throw std::invalid_argument("calibration doublet does not fit under --n-max");
        }
    }
    if (command == Command::sweep) {
        for (const GridAxis *axis : {&delta_bar, &time}) {
            if (axis->steps < 1) {
                throw std::invalid_argument("grid step counts must be positive");
            }
            if (!std::isfinite(axis->lo) || !std::isfinite(axis->hi) || axis->hi < axis->lo) {
                throw std::invalid_argument("grid bounds must be finite with lo <= hi");
            }
        }
        if (delta_bar.lo < 0) {
            throw std::invalid_argument("delta_bar grid must be non-negative");
        }
    }
}

Json decompose_report(const RunConfig &config) {
    SystemParams p = config.params();
    SpaceConfig space = config.space();
    Json results = Json::object();
    for (Mode mode : {Mode::A, Mode::B}) {
        ModelOperators jc = build_jc(p, mode, space);
        ModelOperators ajc = build_ajc(p, mode, space);
        OperatorMatrix rabi = build_rabi(p, mode, space);
        results[to_string(mode)] = Json{
            {"decomposition_residual", check_decomposition(p, mode, space)},
            {"rabi_hermiticity_residual", hermiticity_residual(rabi)},
            {"jc_number_commutator", max_norm(commutator(jc.hamiltonian, jc.excitation_number))},
            {"ajc_number_commutator", max_norm(commutator(ajc.hamiltonian, ajc.excitation_number))},
        };
    }
    return Json{{"params", params_json(config)}, {"results", results}, {"findings", Json::array()}};
}

Json cnot_report(const RunConfig &config) {
    SystemParams p = config.params();
    SpaceConfig space = config.space();
    require_cnot_regime(p);

    PassDurations stated = paper_stated_durations(p);
    PassDurations calibrated = calibrated_durations(p);
    double narrative = narrative_second_pass_duration(p);
    PulseSchedule schedule = cnot_schedule(p, config.routing, config.calibrated);
    GateReport report = cnot_truth_table(schedule, config.backend, space);

    PulseSchedule uniform = schedule;
    for (PulsePass &pass : uniform.passes) {
        pass.sign = ExponentSign::minus;
    }
    GateReport uniform_report = cnot_truth_table(uniform, config.backend, space);

    PulseSchedule stated_schedule = cnot_schedule(p, config.routing, false);
    GateReport stated_report = cnot_truth_table(stated_schedule, config.backend, space);

    Json params = params_json(config);
    params["routing"] = to_string(config.routing);
    params["backend"] = to_string(config.backend);
    params["timing"] = config.calibrated ? "calibrated" : "paper";
    params["durations"] = Json{
        {"used", durations_json({schedule.passes[0].duration, schedule.passes[1].duration})},
        {"paper_stated", durations_json(stated)},
        {"paper_narrative_second_pass", narrative},
        {"calibrated", durations_json(calibrated)},
    };
    params["exponent_signs"] = Json::array({to_string(schedule.passes[0].sign), to_string(schedule.passes[1].sign)});

    Json results{
        {"truth_table", rows_json(report)},
        {"success_probability_analytic", report.success_probability_analytic},
        {"success_probability_simulated", report.success_probability_simulated},
        {"success_probability_at_paper_angles", success_probability(kPi, kPi)},
        {"target_unitary", Json{{"g", matrix_json(report.target_unitary[0])}, {"e", matrix_json(report.target_unitary[1])}}},
        {"target_gate_fidelity", Json{{"g", report.target_gate_fidelity[0]}, {"e", report.target_gate_fidelity[1]}}},
        {"process_fidelity", report.process_fidelity},
        {"phases_consistent", report.phases_consistent},
        {"phase_table",
         Json{{"signs_minus_plus", phase_table(report)},
              {"signs_minus_minus", phase_table(uniform_report)}}},
    };

    Json findings = Json::array();
    double ratio_first = stated.first / calibrated.first;
    double ratio_second = stated.second / calibrated.second;
    if (std::abs(ratio_first - 1) > 1e-6 || std::abs(ratio_second - 1) > 1e-6) {
        findings.push_back(finding(
            "pulse-duration-mismatch",
            "stated pass durations differ from the oracle-calibrated full-transfer durations by a factor of " +
                format_number(ratio_first) + " (first) and " + format_number(ratio_second) +
                " (second); under theta = R t the stated times give theta = pi, a full Rabi return with no transfer",
            Json{{"paper_stated", durations_json(stated)},
                 {"calibrated", durations_json(calibrated)},
                 {"ratio_first", ratio_first},
                 {"ratio_second", ratio_second}}));
    }
    if (std::abs(narrative / stated.second - 1) > 1e-6) {
        findings.push_back(finding(
            "second-pass-duration-inconsistent",
            "narrative second-pass time pi (R_g0 + R_e1) / (R_g0 R_e1) is " + format_number(narrative / stated.second) +
                " times the value used in the success-probability evaluation",
            Json{{"narrative", narrative}, {"evaluation", stated.second}}));
    }
    findings.push_back(finding(
        "success-probability-formula",
        "success-probability formula gives " + format_number(success_probability(kPi, kPi)) +
            " at the stated angles, while simulating the stated durations flips the target with mean probability " +
            format_number(stated_report.success_probability_simulated),
        Json{{"formula_at_stated_angles", success_probability(kPi, kPi)},
             {"simulated_at_stated_durations", stated_report.success_probability_simulated},
             {"formula_at_used_durations", report.success_probability_analytic},
             {"simulated_at_used_durations", report.success_probability_simulated}}));
    if (!report.phases_consistent) {
        findings.push_back(finding(
            "relative-phases",
            "the four rows do not realise C-NOT up to one global phase; superposed inputs are not mapped correctly",
            Json{{"process_fidelity", report.process_fidelity},
                 {"target_gate_fidelity_g", report.target_gate_fidelity[0]},
                 {"target_gate_fidelity_e", report.target_gate_fidelity[1]}}));
    }
    Json excited = Json::array();
    for (const TruthRow &row : report.rows) {
        if (row.control == Atom::e) {
            excited.push_back(Json{{"target", to_string(row.target)},
                                   {"unchanged_probability", row.fidelity_phase_blind * row.fidelity_phase_blind}});
        }
    }
    findings.push_back(finding("excited-control-rows",
                               "excited-control rows traverse an occupied mode after the vacuum mode; reported "
                               "without a pass/fail gate",
                               excited));

    return Json{{"params", params}, {"results", results}, {"findings", findings}};
}

Json hadamard_report(const RunConfig &config) {
    SystemParams p = config.params();
    SpaceConfig space = config.space();
    require_hadamard_regime(p);

    StateVector out = hadamard_apply(p, config.initial, space, config.method);
    HadamardReport verify = hadamard_verify(p, space);
    const HadamardRow &row = verify.rows[config.initial == Atom::g ? 0 : 1];

    Json params = params_json(config);
    params["initial"] = to_string(config.initial);
    params["photons"] = config.initial == Atom::g ? 0 : 1;
    params["method"] = config.method == HadamardMethod::operator_action ? "operator" : "timed";
    params["duration"] = hadamard_duration(p, config.initial);

    Json checks = Json::array();
    for (const HadamardRow &r : verify.rows) {
        checks.push_back(Json{
            {"initial", to_string(r.initial)},
            {"amplitude_deviation", r.amplitude_deviation},
            {"involution_residual", r.involution_residual},
            {"timed_vs_operator_fidelity", r.timed_vs_operator_fidelity},
            {"oracle_vs_operator_fidelity", r.oracle_vs_operator_fidelity},
            {"reduced_atomic_purity", r.atomic_purity},
        });
    }
    Json results{
        {"output", state_json(out)},
        {"atomic_amplitudes", Json{{"e", complex_json(row.amplitude_e)}, {"g", complex_json(row.amplitude_g)}}},
        {"expected_atomic_amplitudes", Json{{"e", complex_json(row.expected_e)}, {"g", complex_json(row.expected_g)}}},
        {"matches_standard", verify.matches_standard},
        {"checks", checks},
    };
    Json findings = Json::array();
    findings.push_back(finding("atom-field-entanglement",
                               "the output changes photon number between its two terms, so the atomic reduction "
                               "is mixed; the Hadamard holds on atomic labels only",
                               Json{{"reduced_atomic_purity", row.atomic_purity}}));
    return Json{{"params", params}, {"results", results}, {"findings", findings}};
}

Json calibrate_report(const RunConfig &config) {
    SystemParams p = config.params();
    SpaceConfig space = config.space();
    DoubletBranch branch =
        config.entry == Atom::g ? DoubletBranch::from_ground(config.photons) : DoubletBranch::from_excited(config.photons);
    Calibration cal = calibrate_pulse(p, branch, config.objective, space);
    DoubletParams d = doublet_params(p, branch);
    double half_rabi = kPi / d.rabi_freq;

    Json params = params_json(config);
    params["branch"] = to_string(branch);
    params["objective"] = config.objective == TransferObjective::full ? "full_transfer" : "half_transfer";

    Json results{
        {"duration", cal.duration},
        {"probability", cal.probability},
        {"rabi_freq", d.rabi_freq},
        {"theta", d.rabi_freq * cal.duration},
        {"paper_stated_duration", half_rabi},
    };
    Json findings = Json::array();
    if (config.objective == TransferObjective::full && std::abs(half_rabi / cal.duration - 1) > 1e-6) {
        findings.push_back(finding("pulse-duration-mismatch",
                                   "the stated half-Rabi time pi/R is " + format_number(half_rabi / cal.duration) +
                                       " times the calibrated full-transfer duration",
                                   Json{{"paper_stated", half_rabi}, {"calibrated", cal.duration}}));
    }
    return Json{{"params", params}, {"results", results}, {"findings", findings}};
}

std::vector<SweepPoint> sweep(const RunConfig &config) {
    SpaceConfig space = config.space();
    StateVector initial = StateVector::basis(space, BasisLabel{Atom::g, 0, 0});
    StateVector target = StateVector::basis(space, BasisLabel{Atom::e, 1, 0});
    std::vector<SweepPoint> points;
    points.reserve(static_cast<size_t>(config.delta_bar.steps) * config.time.steps);
    for (int i = 0; i < config.delta_bar.steps; ++i) {
        double db = config.delta_bar.at(i);
        Propagator prop(build_ajc(SystemParams::resonant_with_sum(db), Mode::A, space).hamiltonian);
        for (int j = 0; j < config.time.steps; ++j) {
            double t = config.time.at(j);
            points.push_back({db, t, prop.transfer_probability(initial, target, t)});
        }
    }
    return points;
}

std::string sweep_csv(const std::vector<SweepPoint> &points) {
    std::string out = "delta_bar_over_lambda,t_lambda,probability\n";
    for (const SweepPoint &pt : points) {
        out += format_number(pt.delta_bar_over_lambda) + "," + format_number(pt.t_lambda) + "," +
               format_number(pt.probability) + "\n";
    }
    return out;
}

std::string render(const RunConfig &config) {
    config.validate();
    Json report;
    switch (config.command) {
        case Command::decompose_check:
            report = decompose_report(config);
            break;
        case Command::cnot:
            report = cnot_report(config);
            break;
        case Command::hadamard:
            report = hadamard_report(config);
            break;
        case Command::calibrate:
            report = calibrate_report(config);
            break;
        case Command::sweep: {
            std::vector<SweepPoint> points = sweep(config);
            if (config.output_format == OutputFormat::csv) {
                return sweep_csv(points);
            }
            Json rows = Json::array();
            for (const SweepPoint &pt : points) {
                rows.push_back(Json{{"delta_bar_over_lambda", pt.delta_bar_over_lambda},
                                    {"t_lambda", pt.t_lambda},
                                    {"probability", pt.probability}});
            }
            Json params = params_json(config);
            params.erase("omega");
            params.erase("omega0");
            params.erase("delta");
            params.erase("delta_bar");
            params.erase("alpha");
            params.erase("alpha_bar");
            params["split"] = "omega = omega0 = delta_bar / 2";
            params["delta_bar_grid"] = Json{{"lo", config.delta_bar.lo}, {"hi", config.delta_bar.hi}, {"steps", config.delta_bar.steps}};
            params["time_grid"] = Json{{"lo", config.time.lo}, {"hi", config.time.hi}, {"steps", config.time.steps}};
            report = Json{{"params", params}, {"results", rows}, {"findings", Json::array()}};
            break;
        }
    }
    return report.dump(2) + "\n";
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        std::string text = render(config);
        if (config.output_path.empty() || config.output_path == "-") {
            out << text;
            out.flush();
            if (!out) {
                throw IoError("failed writing to stdout");
            }
        } else {
            std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
            if (!file) {
                throw IoError("cannot open " + config.output_path + " for writing");
            }
            file << text;
            file.close();
            if (!file) {
                throw IoError("failed writing " + config.output_path);
            }
        }
        return 0;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PhysicsError &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace ajc
