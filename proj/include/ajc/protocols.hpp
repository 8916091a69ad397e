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

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ajc/hilbert.hpp"
#include "ajc/qubit_algebra.hpp"
#include "ajc/rabi_model.hpp"

namespace ajc {

/// Largest omega / lambda for which the C-NOT protocol is considered in regime.
inline constexpr double kMaxCnotOmegaRatio = 1e-2;
/// Tolerance on delta = 0 for the C-NOT and delta_bar = 4 lambda for the Hadamard.
inline constexpr double kRegimeTolerance = 1e-12;
/// A full-transfer calibration fails if the best transfer stays below this.
inline constexpr double kFullTransferThreshold = 0.99;

enum class Routing { paper, fixed_ab, fixed_ba };
enum class Backend { closed_form, oracle };
/// Dual-rail target: mu1 = |1_A,0_B>, mu2 = |0_A,1_B>.
enum class DualRail { mu1, mu2 };
enum class TransferObjective { full, half };

std::string to_string(Routing routing);
std::string to_string(Backend backend);
std::string to_string(DualRail target);

struct PulsePass {
    Mode mode;
    double duration;
    ExponentSign sign;
    SystemParams params;
};

/// Two passes, first then second. Under paper routing the pass modes are
/// rebound per input so that the first pass always hits the target's vacuum
/// mode; fixed orders use the modes as written.
struct PulseSchedule {
    std::vector<PulsePass> passes;
    Routing routing;
};

/// Throws RegimeError unless delta = 0 and omega / lambda <= kMaxCnotOmegaRatio.
void require_cnot_regime(const SystemParams &params);
/// Throws RegimeError unless delta_bar = 4 lambda.
void require_hadamard_regime(const SystemParams &params);

struct PassDurations {
    double first;
    double second;
};

/// Durations as printed for the success-probability evaluation:
/// pi / R_g0, then (pi / 2)(R_g0 + R_e1) / (R_g0 R_e1).
PassDurations paper_stated_durations(const SystemParams &params);
/// The protocol's narrative second-pass time pi (R_g0 + R_e1) / (R_g0 R_e1).
double narrative_second_pass_duration(const SystemParams &params);

struct Calibration {
    double duration;
    double probability;
};

/// Scans exp(-i H_ajc t) over [0, 2 pi / R] for the transfer entry -> partner of
/// `branch` and refines the first maximum by golden section (full) or the
/// first rising crossing of 1/2 by bisection (half). Throws RegimeError outside
/// the C-NOT or Hadamard operating points, CalibrationError if the objective is
/// never reached.
Calibration calibrate_pulse(const SystemParams &params, const DoubletBranch &branch, TransferObjective objective,
                            const SpaceConfig &config = SpaceConfig{});

PassDurations calibrated_durations(const SystemParams &params);

PulseSchedule cnot_schedule(const SystemParams &params, Routing routing, bool calibrated);
/// Fixed-order schedule starting on `mode_first`.
PulseSchedule cnot_schedule(const SystemParams &params, Mode mode_first, bool calibrated);
/// Same structure as the C-NOT schedule with zero durations.
PulseSchedule identity_schedule(const SystemParams &params, Routing routing);

/// The passes actually applied to `target`, after routing.
std::vector<PulsePass> resolved_passes(const PulseSchedule &schedule, DualRail target);

StateVector dual_rail_state(const SpaceConfig &config, Atom control, DualRail target);
/// |a>|a xor b>, where the ground-state control flips the target.
StateVector cnot_ideal_output(const SpaceConfig &config, Atom control, DualRail target);

/// One interaction pass. The oracle evolves under the full anti-Jaynes-Cummings
/// Hamiltonian of `pass.mode`; the closed form splits the state over that
/// mode's doublets and evolves each analytically, with |e,0> picking up only
/// its free-wave phase. A plus sign runs the map exp(+iHt).
StateVector run_pass(const PulsePass &pass, const StateVector &state, Backend backend);

struct TruthRow {
    Atom control;
    DualRail target;
    std::vector<Mode> pass_order;
    StateVector output;
    BasisLabel dominant;
    double probability;
    Complex amplitude;
    double phase;
    /// |<ideal C-NOT output|output>|
    double fidelity_phase_blind;
};

TruthRow cnot_run(const PulseSchedule &schedule, Atom control, DualRail target, Backend backend,
                  const SpaceConfig &config = SpaceConfig{});

struct GateReport {
    /// Rows in order (g,mu1), (g,mu2), (e,mu1), (e,mu2).
    std::vector<TruthRow> rows;
    double success_probability_analytic;
    /// Mean flip probability over the ground-control rows.
    double success_probability_simulated;
    /// Indexed by control (g = 0, e = 1); entry (out, in) over {mu1, mu2}.
    std::array<Eigen::Matrix2cd, 2> target_unitary;
    /// |Tr(ideal^dag U)| / 2 per control: 1 iff the target map is the ideal
    /// one up to a global phase.
    std::array<double, 2> target_gate_fidelity;
    /// |Tr(CNOT^dag U)| / 4 on the four-state computational block.
    double process_fidelity;
    /// False when relative phases between rows would corrupt superposed inputs.
    bool phases_consistent;
};

GateReport cnot_truth_table(const PulseSchedule &schedule, Backend backend, const SpaceConfig &config = SpaceConfig{});

double success_probability(double theta_a, double theta_b);

/// Evaluates success_probability with theta = R * duration for the schedule's
/// two passes, R_g0 for the first and R_e1 for the second.
double schedule_success_probability(const PulseSchedule &schedule);

enum class HadamardMethod { operator_action, timed_evolution };

/// |g,0,0> for a ground entry, |e,1,0> for an excited one (atom on mode A).
StateVector hadamard_input(const SpaceConfig &config, Atom initial);
DoubletBranch hadamard_branch(Atom initial);
/// pi / (2 R), where exp(-i (pi/2) epsilon) = -i epsilon.
double hadamard_duration(const SystemParams &params, Atom initial);

/// Throws RegimeError off delta_bar = 4 lambda; std::invalid_argument if
/// `photons` is given and does not pair with `initial` (g with 0, e with 1).
StateVector hadamard_apply(const SystemParams &params, Atom initial, const SpaceConfig &config,
                           HadamardMethod method, std::optional<int> photons = std::nullopt);

struct HadamardRow {
    Atom initial;
    StateVector output;
    /// Amplitudes read on atomic labels: e from |e,m+1>, g from |g,m>.
    Complex amplitude_e;
    Complex amplitude_g;
    Complex expected_e;
    Complex expected_g;
    double amplitude_deviation;
    double atomic_purity;
    double timed_vs_operator_fidelity;
    double oracle_vs_operator_fidelity;
    double involution_residual;
};

struct HadamardReport {
    std::array<HadamardRow, 2> rows;  // g, e
    bool matches_standard;
};

HadamardReport hadamard_verify(const SystemParams &params, const SpaceConfig &config = SpaceConfig{});

}  // namespace ajc
