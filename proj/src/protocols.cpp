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

#include "ajc/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ajc/errors.hpp"
#include "ajc/oracle.hpp"

namespace ajc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanSamples = 2001;

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

double golden_section_max(const Propagator &prop, const StateVector &initial, const StateVector &target, double lo,
                          double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    auto f = [&](double t) { return prop.transfer_probability(initial, target, t); };
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    // Past ~1e-8 relative the peak is flat to machine precision; the bracket
    // still shrinks to the requested width.
    while (hi - lo > 1e-10 * std::max(std::abs(lo + hi) / 2, 1e-300)) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return (lo + hi) / 2;
}

DualRail flipped(DualRail target) {
    return target == DualRail::mu1 ? DualRail::mu2 : DualRail::mu1;
}

Mode vacuum_mode(DualRail target) {
    return target == DualRail::mu1 ? Mode::B : Mode::A;
}

PulseSchedule make_schedule(const SystemParams &params, Routing routing, PassDurations d) {
    Mode first = routing == Routing::fixed_ba ? Mode::B : Mode::A;
    return PulseSchedule{
        {PulsePass{first, d.first, ExponentSign::minus, params},
         PulsePass{other_mode(first), d.second, ExponentSign::plus, params}},
        routing,
    };
}

}  // namespace

std::string to_string(Routing routing) {
    switch (routing) {
        case Routing::paper:
            return "paper";
        case Routing::fixed_ab:
            return "AB";
        case Routing::fixed_ba:
            return "BA";
    }
    return "?";
}

std::string to_string(Backend backend) {
    return backend == Backend::oracle ? "oracle" : "closed-form";
}

std::string to_string(DualRail target) {
    return target == DualRail::mu1 ? "mu1" : "mu2";
}

void require_cnot_regime(const SystemParams &params) {
    double lambda = params.lambda_coupling();
    if (std::abs(params.delta()) > kRegimeTolerance * lambda) {
        throw RegimeError("C-NOT protocol needs resonance omega0 == omega (delta/lambda = " +
                          fmt_double(params.delta() / lambda) + ")");
    }
    double ratio = params.omega() / lambda;
    if (ratio > kMaxCnotOmegaRatio) {
        throw RegimeError("C-NOT protocol needs omega/lambda <= " + fmt_double(kMaxCnotOmegaRatio) + " (got " +
                          fmt_double(ratio) + ")");
    }
}

void require_hadamard_regime(const SystemParams &params) {
    double lambda = params.lambda_coupling();
    if (std::abs(params.delta_bar() - 4 * lambda) > kRegimeTolerance * lambda) {
        throw RegimeError("Hadamard operation needs delta_bar == 4 lambda (delta_bar/lambda = " +
                          fmt_double(params.delta_bar() / lambda) + ")");
    }
}

PassDurations paper_stated_durations(const SystemParams &params) {
    double r_g0 = doublet_params(params, DoubletBranch::from_ground(0)).rabi_freq;
    double r_e1 = doublet_params(params, DoubletBranch::from_excited(1)).rabi_freq;
    return PassDurations{kPi / r_g0, kPi / 2 * (r_g0 + r_e1) / (r_g0 * r_e1)};
}

double narrative_second_pass_duration(const SystemParams &params) {
    double r_g0 = doublet_params(params, DoubletBranch::from_ground(0)).rabi_freq;
    double r_e1 = doublet_params(params, DoubletBranch::from_excited(1)).rabi_freq;
    return kPi * (r_g0 + r_e1) / (r_g0 * r_e1);
}

Calibration calibrate_pulse(const SystemParams &params, const DoubletBranch &branch, TransferObjective objective,
                            const SpaceConfig &config) {
    try {
        require_cnot_regime(params);
    } catch (const RegimeError &cnot_error) {
        try {
            require_hadamard_regime(params);
        } catch (const RegimeError &) {
            throw RegimeError(std::string("calibration outside both operating points: ") + cnot_error.what());
        }
    }
    config.validate();
    if (branch.ground_photons() + 1 > config.cutoff(Mode::A)) {
        throw CutoffError("doublet " + to_string(branch) + " does not fit under the mode-A cutoff");
    }

    Propagator prop(build_ajc(params, Mode::A, config).hamiltonian);
    StateVector initial = StateVector::basis(config, branch.entry_label(Mode::A));
    StateVector target = StateVector::basis(config, branch.partner_label(Mode::A));
    double t_max = 2 * kPi / doublet_params(params, branch).rabi_freq;
    double dt = t_max / (kScanSamples - 1);

    std::vector<double> p(kScanSamples);
    for (int i = 0; i < kScanSamples; ++i) {
        p[i] = prop.transfer_probability(initial, target, i * dt);
    }
    double p_max = *std::max_element(p.begin(), p.end());

    auto first_peak = [&]() {
        for (int i = 1; i + 1 < kScanSamples; ++i) {
            if (p[i] >= p[i - 1] && p[i] >= p[i + 1] && p[i] >= p_max - 1e-3) {
                double t = golden_section_max(prop, initial, target, (i - 1) * dt, (i + 1) * dt);
                return Calibration{t, prop.transfer_probability(initial, target, t)};
            }
        }
        throw CalibrationError("no interior transfer maximum in the scan window");
    };

    if (objective == TransferObjective::full) {
        if (p_max < kFullTransferThreshold) {
            throw CalibrationError("full transfer unreachable for " + to_string(branch) + ": best probability " +
                                   fmt_double(p_max) + " < " + fmt_double(kFullTransferThreshold));
        }
        return first_peak();
    }

    for (int i = 1; i < kScanSamples; ++i) {
        if (p[i] > 0.5 && p[i - 1] <= 0.5) {
            double lo = (i - 1) * dt, hi = i * dt;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
                double mid = (lo + hi) / 2;
                (prop.transfer_probability(initial, target, mid) > 0.5 ? hi : lo) = mid;
            }
            double t = (lo + hi) / 2;
            return Calibration{t, prop.transfer_probability(initial, target, t)};
        }
    }
    // The curve can touch 1/2 at its peak without crossing it (delta_bar = 4 lambda).
    Calibration peak = first_peak();
    if (peak.probability >= 0.5 - 1e-9) {
        return peak;
    }
    throw CalibrationError("half transfer unreachable for " + to_string(branch) + ": best probability " +
                           fmt_double(p_max));
}

PassDurations calibrated_durations(const SystemParams &params) {
    return PassDurations{
        calibrate_pulse(params, DoubletBranch::from_ground(0), TransferObjective::full).duration,
        calibrate_pulse(params, DoubletBranch::from_excited(1), TransferObjective::full).duration,
    };
}

PulseSchedule cnot_schedule(const SystemParams &params, Routing routing, bool calibrated) {
    require_cnot_regime(params);
    return make_schedule(params, routing, calibrated ? calibrated_durations(params) : paper_stated_durations(params));
}

PulseSchedule cnot_schedule(const SystemParams &params, Mode mode_first, bool calibrated) {
    return cnot_schedule(params, mode_first == Mode::A ? Routing::fixed_ab : Routing::fixed_ba, calibrated);
}

PulseSchedule identity_schedule(const SystemParams &params, Routing routing) {
    return make_schedule(params, routing, PassDurations{0.0, 0.0});
}

std::vector<PulsePass> resolved_passes(const PulseSchedule &schedule, DualRail target) {
    std::vector<PulsePass> passes = schedule.passes;
    if (schedule.routing == Routing::paper && passes.size() == 2) {
        passes[0].mode = vacuum_mode(target);
        passes[1].mode = other_mode(passes[0].mode);
    }
    return passes;
}

StateVector dual_rail_state(const SpaceConfig &config, Atom control, DualRail target) {
    BasisLabel label{control, target == DualRail::mu1 ? 1 : 0, target == DualRail::mu1 ? 0 : 1};
    return StateVector::basis(config, label);
}

StateVector cnot_ideal_output(const SpaceConfig &config, Atom control, DualRail target) {
    return dual_rail_state(config, control, control == Atom::g ? flipped(target) : target);
}

StateVector run_pass(const PulsePass &pass, const StateVector &state, Backend backend) {
    if (!(pass.duration >= 0) || !std::isfinite(pass.duration)) {
        throw std::invalid_argument("pass duration must be finite and non-negative");
    }
    const SpaceConfig &config = state.config();
    if (backend == Backend::oracle) {
        Propagator prop(build_ajc(pass.params, pass.mode, config).hamiltonian);
        double t = pass.sign == ExponentSign::minus ? pass.duration : -pass.duration;
        return prop.evolve(state, t);
    }

    Mode mode = pass.mode;
    int cutoff = config.cutoff(mode);
    double edge = weight_where(state, [&](const BasisLabel &l) { return l.atom == Atom::g && l.photons(mode) == cutoff; });
    if (edge > kDoubletTolerance) {
        throw CutoffError("state has weight " + fmt_double(edge) + " on |g," + std::to_string(cutoff) +
                          "> in mode " + to_string(mode) + ", whose doublet exceeds the cutoff");
    }

    double signed_t = pass.sign == ExponentSign::minus ? pass.duration : -pass.duration;
    CVector out = CVector::Zero(state.dim());
    for (int i = 0; i < state.dim(); ++i) {
        BasisLabel l = label_of(config, i);
        if (l.atom == Atom::e && l.photons(mode) == 0) {
            out[i] = state.amplitudes()[i] * std::polar(1.0, -free_wave_energy(pass.params) * signed_t);
        }
    }
    StateVector result(config, std::move(out));
    for (int m = 0; m < cutoff; ++m) {
        DoubletBranch branch = DoubletBranch::from_ground(m);
        StateVector component = doublet_component(state, branch, mode);
        if (component.norm() == 0) {
            continue;
        }
        result = result + qubit_evolution(pass.params, branch, pass.duration, component, mode, pass.sign);
    }
    return result;
}

TruthRow cnot_run(const PulseSchedule &schedule, Atom control, DualRail target, Backend backend,
                  const SpaceConfig &config) {
    config.validate();
    StateVector state = dual_rail_state(config, control, target);
    std::vector<Mode> order;
    for (const PulsePass &pass : resolved_passes(schedule, target)) {
        state = run_pass(pass, state, backend);
        order.push_back(pass.mode);
    }
    BasisLabel dominant = state.dominant_label();
    Complex amp = state.amplitude(dominant);
    return TruthRow{
        .control = control,
        .target = target,
        .pass_order = std::move(order),
        .output = state,
        .dominant = dominant,
        .probability = std::min(1.0, std::norm(amp)),
        .amplitude = amp,
        .phase = std::arg(amp),
        .fidelity_phase_blind = fidelity_up_to_global_phase(cnot_ideal_output(config, control, target), state),
    };
}

GateReport cnot_truth_table(const PulseSchedule &schedule, Backend backend, const SpaceConfig &config) {
    GateReport report;
    const std::array<Atom, 2> controls{Atom::g, Atom::e};
    const std::array<DualRail, 2> targets{DualRail::mu1, DualRail::mu2};
    for (Atom c : controls) {
        for (DualRail t : targets) {
            report.rows.push_back(cnot_run(schedule, c, t, backend, config));
        }
    }

    Eigen::Matrix4cd process = Eigen::Matrix4cd::Zero();
    Eigen::Matrix4cd ideal = Eigen::Matrix4cd::Zero();
    double flip_probability = 0;
    for (int ci = 0; ci < 2; ++ci) {
        Eigen::Matrix2cd u;
        for (int in = 0; in < 2; ++in) {
            const TruthRow &row = report.rows[2 * ci + in];
            for (int out = 0; out < 2; ++out) {
                u(out, in) = dual_rail_state(config, controls[ci], targets[out]).inner(row.output);
                process(2 * ci + out, 2 * ci + in) = u(out, in);
            }
            // Cross-control amplitudes belong in the process matrix too.
            for (int out = 0; out < 2; ++out) {
                process(2 * (1 - ci) + out, 2 * ci + in) =
                    dual_rail_state(config, controls[1 - ci], targets[out]).inner(row.output);
            }
            if (controls[ci] == Atom::g) {
                flip_probability += row.fidelity_phase_blind * row.fidelity_phase_blind / 2;
            }
        }
        Eigen::Matrix2cd target_ideal =
            controls[ci] == Atom::g ? Eigen::Matrix2cd{{0, 1}, {1, 0}} : Eigen::Matrix2cd::Identity();
        ideal.block<2, 2>(2 * ci, 2 * ci) = target_ideal;
        report.target_unitary[ci] = u;
        report.target_gate_fidelity[ci] = std::abs((target_ideal.adjoint() * u).trace()) / 2;
    }
    report.process_fidelity = std::abs((ideal.adjoint() * process).trace()) / 4;
    report.phases_consistent = report.process_fidelity >= 1 - 1e-6;
    report.success_probability_simulated = flip_probability;
    report.success_probability_analytic = schedule_success_probability(schedule);
    return report;
}

double success_probability(double theta_a, double theta_b) {
    double sa = std::sin(theta_a), ca = std::cos(theta_a), sb = std::sin(theta_b);
    return 1 - (sa * sa + ca * ca * sb * sb);
}

double schedule_success_probability(const PulseSchedule &schedule) {
    if (schedule.passes.size() != 2) {
        throw std::invalid_argument("success probability is defined for two-pass schedules");
    }
    const SystemParams &params = schedule.passes[0].params;
    double r_first = doublet_params(params, DoubletBranch::from_ground(0)).rabi_freq;
    double r_second = doublet_params(schedule.passes[1].params, DoubletBranch::from_excited(1)).rabi_freq;
    return success_probability(r_first * schedule.passes[0].duration, r_second * schedule.passes[1].duration);
}

StateVector hadamard_input(const SpaceConfig &config, Atom initial) {
    return StateVector::basis(config, BasisLabel{initial, initial == Atom::g ? 0 : 1, 0});
}

DoubletBranch hadamard_branch(Atom initial) {
    return initial == Atom::g ? DoubletBranch::from_ground(0) : DoubletBranch::from_excited(1);
}

double hadamard_duration(const SystemParams &params, Atom initial) {
    return kPi / (2 * doublet_params(params, hadamard_branch(initial)).rabi_freq);
}

StateVector hadamard_apply(const SystemParams &params, Atom initial, const SpaceConfig &config,
                           HadamardMethod method, std::optional<int> photons) {
    require_hadamard_regime(params);
    int expected = initial == Atom::g ? 0 : 1;
    if (photons && *photons != expected) {
        throw std::invalid_argument("Hadamard from |" + to_string(initial) + "> is defined at n = " +
                                    std::to_string(expected) + ", not n = " + std::to_string(*photons));
    }
    config.validate();
    StateVector input = hadamard_input(config, initial);
    DoubletBranch branch = hadamard_branch(initial);
    if (method == HadamardMethod::operator_action) {
        return epsilon_apply(params, branch, input);
    }
    return qubit_evolution(params, branch, hadamard_duration(params, initial), input);
}

HadamardReport hadamard_verify(const SystemParams &params, const SpaceConfig &config) {
    require_hadamard_regime(params);
    const double r = 1 / std::sqrt(2.0);
    Propagator prop(build_ajc(params, Mode::A, config).hamiltonian);
    std::vector<HadamardRow> rows;
    bool matches = true;
    const std::array<Atom, 2> inputs{Atom::g, Atom::e};
    for (int k = 0; k < 2; ++k) {
        Atom initial = inputs[k];
        DoubletBranch branch = hadamard_branch(initial);
        StateVector input = hadamard_input(config, initial);
        StateVector out = hadamard_apply(params, initial, config, HadamardMethod::operator_action);
        StateVector timed = hadamard_apply(params, initial, config, HadamardMethod::timed_evolution);
        StateVector oracle = prop.evolve(input, hadamard_duration(params, initial));
        StateVector twice = epsilon_apply(params, branch, out);

        int m = branch.ground_photons();
        Complex amp_g = out.amplitude(BasisLabel{Atom::g, m, 0});
        Complex amp_e = out.amplitude(BasisLabel{Atom::e, m + 1, 0});
        // H|e> = (|e> + |g>)/sqrt2, H|g> = (|e> - |g>)/sqrt2.
        Complex exp_e = r;
        Complex exp_g = initial == Atom::e ? r : -r;
        double deviation = std::max(std::abs(amp_e - exp_e), std::abs(amp_g - exp_g));
        Eigen::Matrix2cd rho = reduced_atom_density(out);

        rows.push_back(HadamardRow{
            .initial = initial,
            .output = out,
            .amplitude_e = amp_e,
            .amplitude_g = amp_g,
            .expected_e = exp_e,
            .expected_g = exp_g,
            .amplitude_deviation = deviation,
            .atomic_purity = (rho * rho).trace().real(),
            .timed_vs_operator_fidelity = fidelity_up_to_global_phase(out, timed),
            .oracle_vs_operator_fidelity = fidelity_up_to_global_phase(out, oracle),
            .involution_residual = (twice - input).amplitudes().cwiseAbs().maxCoeff(),
        });
        matches = matches && deviation < 1e-12;
    }
    return HadamardReport{{rows[0], rows[1]}, matches};
}

}  // namespace ajc
