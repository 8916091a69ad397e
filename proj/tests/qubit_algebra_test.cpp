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

#include "ajc/qubit_algebra.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ajc/errors.hpp"
#include "ajc/oracle.hpp"
#include "gtest/gtest.h"

using namespace ajc;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1 / std::sqrt(2.0);

/// Random normalised state on the doublet with random spectator content.
StateVector random_doublet_state(const SpaceConfig &config, const DoubletBranch &branch, Mode mode,
                                 std::mt19937 &rng) {
    std::normal_distribution<double> dist;
    StateVector s = StateVector::zero(config);
    for (int k = 0; k <= config.cutoff(other_mode(mode)); ++k) {
        s = s + Complex(dist(rng), dist(rng)) * StateVector::basis(config, branch.entry_label(mode, k));
        s = s + Complex(dist(rng), dist(rng)) * StateVector::basis(config, branch.partner_label(mode, k));
    }
    return s.normalized();
}

}  // namespace

TEST(doublet_params, resonant_ground_zero) {
    DoubletParams d = doublet_params(SystemParams(0, 0), DoubletBranch::from_ground(0));
    EXPECT_DOUBLE_EQ(d.a_bar, 1.0);
    EXPECT_DOUBLE_EQ(d.rabi_freq, 2.0);
    EXPECT_DOUBLE_EQ(d.c_bar, 0.0);
    EXPECT_DOUBLE_EQ(d.s_bar, 1.0);
}

TEST(doublet_params, hadamard_point) {
    SystemParams p(2, 2);
    DoubletParams g0 = doublet_params(p, DoubletBranch::from_ground(0));
    EXPECT_NEAR(g0.a_bar, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(g0.c_bar, 0.70710678, 1e-8);
    EXPECT_NEAR(g0.s_bar, 0.70710678, 1e-8);
    EXPECT_NEAR(doublet_params(p, DoubletBranch::from_excited(1)).a_bar, std::sqrt(2.0), 1e-15);
}

TEST(doublet_params, excited_zero_is_not_a_doublet) {
    EXPECT_THROW(DoubletBranch::from_excited(0), std::invalid_argument);
    EXPECT_THROW(DoubletBranch::from_ground(-1), std::invalid_argument);
}

TEST(doublet_params, invariants_randomized) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> freq(0, 8);
    std::uniform_real_distribution<double> coupling(0.1, 3);
    for (int i = 0; i < 200; ++i) {
        SystemParams p(freq(rng), freq(rng), coupling(rng));
        int n = 1 + i % 6;
        DoubletParams g = doublet_params(p, DoubletBranch::from_ground(n - 1));
        DoubletParams e = doublet_params(p, DoubletBranch::from_excited(n));
        EXPECT_NEAR(g.c_bar * g.c_bar + g.s_bar * g.s_bar, 1.0, 1e-12);
        EXPECT_NEAR(g.rabi_freq, 2 * p.lambda_coupling() * g.a_bar, 1e-12);
        EXPECT_EQ(g.a_bar, e.a_bar);
        double lam = p.lambda_coupling();
        EXPECT_NEAR(g.a_bar, std::sqrt(n + p.delta_bar() * p.delta_bar() / (16 * lam * lam)), 1e-12);
    }
}

TEST(basic_states, examples) {
    SpaceConfig config;
    QubitBasisPair zero = basic_states(SystemParams(0, 0), DoubletBranch::from_ground(0), config);
    EXPECT_EQ(zero.phi_bar.amplitudes(), StateVector::basis(config, {Atom::e, 1, 0}).amplitudes());

    QubitBasisPair had = basic_states(SystemParams(2, 2), DoubletBranch::from_ground(0), config);
    StateVector expected = kInvSqrt2 * (StateVector::basis(config, {Atom::e, 1, 0}) -
                                        StateVector::basis(config, {Atom::g, 0, 0}));
    EXPECT_LT((had.phi_bar - expected).norm(), 1e-15);

    QubitBasisPair on_b = basic_states(SystemParams(0, 0), DoubletBranch::from_ground(1), config, Mode::B, 2);
    EXPECT_EQ(on_b.psi.amplitude({Atom::g, 2, 1}), Complex(1.0));
    EXPECT_EQ(on_b.phi_bar.amplitude({Atom::e, 2, 2}), Complex(1.0));
}

TEST(basic_states, overlap_is_minus_c_bar) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> db(0, 10);
    SpaceConfig config = make_space(5, 2);
    for (int i = 0; i < 20; ++i) {
        SystemParams p = SystemParams::resonant_with_sum(db(rng));
        int n = i % 5;
        DoubletBranch branch = DoubletBranch::from_ground(n);
        QubitBasisPair pair = basic_states(p, branch, config);
        EXPECT_NEAR(pair.psi.norm(), 1.0, 1e-12);
        EXPECT_NEAR(pair.phi_bar.norm(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(pair.psi.inner(pair.phi_bar) - (-doublet_params(p, branch).c_bar)), 0.0, 1e-12);
    }
    // Excited anchoring flips the sign.
    SystemParams p(1, 2);
    QubitBasisPair up = basic_states(p, DoubletBranch::from_excited(2), config);
    EXPECT_NEAR(up.psi.inner(up.phi_bar).real(), doublet_params(p, DoubletBranch::from_excited(2)).c_bar, 1e-12);
}

TEST(basic_states, cutoff_exceeded) {
    SpaceConfig config = make_space(2, 2);
    EXPECT_THROW(basic_states(SystemParams(0, 0), DoubletBranch::from_ground(2), config), CutoffError);
    EXPECT_THROW(basic_states(SystemParams(0, 0), DoubletBranch::from_ground(0), config, Mode::A, 3), CutoffError);
}

TEST(epsilon_apply, transition_algebra) {
    SpaceConfig config;
    for (double db : {0.0, 1.0, 4.0}) {
        SystemParams p = SystemParams::resonant_with_sum(db);
        for (int n = 0; n <= 2; ++n) {
            DoubletBranch branch = DoubletBranch::from_ground(n);
            QubitBasisPair pair = basic_states(p, branch, config);
            EXPECT_LT((epsilon_apply(p, branch, pair.psi) - pair.phi_bar).norm(), 1e-12);
            EXPECT_LT((epsilon_apply(p, branch, pair.phi_bar) - pair.psi).norm(), 1e-12);
            EXPECT_LT((epsilon_apply(p, branch, epsilon_apply(p, branch, pair.psi)) - pair.psi).norm(), 1e-12);
        }
    }
}

TEST(epsilon_apply, hadamard_point_example) {
    SpaceConfig config;
    StateVector g0 = StateVector::basis(config, {Atom::g, 0, 0});
    StateVector out = epsilon_apply(SystemParams(2, 2), DoubletBranch::from_ground(0), g0);
    EXPECT_NEAR(out.amplitude({Atom::g, 0, 0}).real(), -kInvSqrt2, 1e-15);
    EXPECT_NEAR(out.amplitude({Atom::e, 1, 0}).real(), kInvSqrt2, 1e-15);
}

TEST(epsilon_apply, squared_is_doublet_identity_as_matrix) {
    // Build epsilon^2 column by column on the doublet and compare to identity.
    SpaceConfig config;
    SystemParams p(0.9, 1.7);
    for (Mode mode : {Mode::A, Mode::B}) {
        for (int n = 0; n < 3; ++n) {
            DoubletBranch branch = DoubletBranch::from_ground(n);
            for (int k = 0; k <= config.cutoff(other_mode(mode)); ++k) {
                for (const BasisLabel &l : {branch.entry_label(mode, k), branch.partner_label(mode, k)}) {
                    StateVector s = StateVector::basis(config, l);
                    StateVector sq = epsilon_apply(p, branch, epsilon_apply(p, branch, s, mode), mode);
                    EXPECT_LT((sq - s).amplitudes().cwiseAbs().maxCoeff(), 1e-12);
                }
            }
        }
    }
}

TEST(epsilon_apply, matches_transition_matrix_from_model) {
    SpaceConfig config;
    SystemParams p(0.3, 2.2);
    std::mt19937 rng(9);
    for (Mode mode : {Mode::A, Mode::B}) {
        OperatorMatrix t = build_ajc(p, mode, config).transition;
        for (int n = 0; n < 3; ++n) {
            DoubletBranch branch = DoubletBranch::from_ground(n);
            StateVector s = random_doublet_state(config, branch, mode, rng);
            StateVector via_matrix = (1.0 / doublet_params(p, branch).a_bar) * (t * s);
            EXPECT_LT((epsilon_apply(p, branch, s, mode) - via_matrix).norm(), 1e-13);
        }
    }
}

TEST(epsilon_apply, rejects_leakage_and_cutoff) {
    SpaceConfig config;
    SystemParams p(0, 0);
    StateVector mixed = kInvSqrt2 * (StateVector::basis(config, {Atom::g, 0, 0}) +
                                     StateVector::basis(config, {Atom::g, 1, 0}));
    EXPECT_THROW(epsilon_apply(p, DoubletBranch::from_ground(0), mixed), LeakageError);
    StateVector dust = StateVector::basis(config, {Atom::g, 0, 0}) + 1e-6 * StateVector::basis(config, {Atom::g, 1, 0});
    EXPECT_NO_THROW(epsilon_apply(p, DoubletBranch::from_ground(0), dust));
    StateVector edge = StateVector::basis(config, {Atom::g, 3, 0});
    EXPECT_THROW(epsilon_apply(p, DoubletBranch::from_ground(3), edge), CutoffError);
}

TEST(rotate, examples) {
    SpaceConfig config;
    SystemParams p(0, 0);
    DoubletBranch branch = DoubletBranch::from_ground(0);
    StateVector g0 = StateVector::basis(config, {Atom::g, 0, 0});
    StateVector e1 = StateVector::basis(config, {Atom::e, 1, 0});
    EXPECT_LT((rotate(p, branch, 0.0, g0) - g0).norm(), 1e-15);
    EXPECT_LT((rotate(p, branch, kPi / 2, g0) - Complex(0, -1) * e1).norm(), 1e-15);
    EXPECT_LT((rotate(p, branch, kPi, g0) + g0).norm(), 1e-15);
    EXPECT_THROW(rotate(p, branch, INFINITY, g0), std::invalid_argument);
}

TEST(rotate, group_property_and_norm) {
    SpaceConfig config;
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> angle(-10, 10);
    std::uniform_real_distribution<double> db(0, 6);
    for (int i = 0; i < 100; ++i) {
        SystemParams p = SystemParams::resonant_with_sum(db(rng));
        DoubletBranch branch = DoubletBranch::from_ground(i % 3);
        Mode mode = i % 2 ? Mode::A : Mode::B;
        StateVector s = random_doublet_state(config, branch, mode, rng);
        double t1 = angle(rng), t2 = angle(rng);
        StateVector composed = rotate(p, branch, t1, rotate(p, branch, t2, s, mode), mode);
        EXPECT_LT((composed - rotate(p, branch, t1 + t2, s, mode)).norm(), 1e-12);
        EXPECT_NEAR(rotate(p, branch, t1, s, mode).norm(), 1.0, 1e-12);
    }
}

TEST(qubit_evolution, identity_and_survival_probability) {
    SpaceConfig config;
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> db(0, 6);
    std::uniform_real_distribution<double> time(0, 5);
    for (int i = 0; i < 40; ++i) {
        SystemParams p = SystemParams::resonant_with_sum(db(rng));
        int n = i % 3;
        DoubletBranch branch = DoubletBranch::from_ground(n);
        StateVector g = StateVector::basis(config, branch.entry_label(Mode::A));
        EXPECT_LT((qubit_evolution(p, branch, 0.0, g) - g).norm(), 1e-15);

        double t = time(rng);
        double survival = std::norm(g.inner(qubit_evolution(p, branch, t, g)));
        // Two-level Rabi formula with detuning alpha_bar and coupling sqrt(n+1),
        // written without the doublet parameters.
        double coupling_sq = 4.0 * (n + 1);
        double generalized = std::sqrt(p.alpha_bar() * p.alpha_bar() + coupling_sq);
        double expected = 1 - coupling_sq / (generalized * generalized) * std::pow(std::sin(generalized * t), 2);
        EXPECT_NEAR(survival, expected, 1e-12);
        DoubletParams d = doublet_params(p, branch);
        double rt = d.rabi_freq * t;
        EXPECT_NEAR(survival, std::pow(std::cos(rt), 2) + d.c_bar * d.c_bar * std::pow(std::sin(rt), 2), 1e-12);
    }
}

TEST(qubit_evolution, quarter_period_transfer_against_oracle) {
    SpaceConfig config;
    SystemParams p(1e-3, 1e-3);
    DoubletBranch branch = DoubletBranch::from_ground(0);
    double t = kPi / (2 * doublet_params(p, branch).rabi_freq);
    StateVector g0 = StateVector::basis(config, {Atom::g, 0, 0});
    StateVector e1 = StateVector::basis(config, {Atom::e, 1, 0});
    StateVector closed = qubit_evolution(p, branch, t, g0);
    StateVector oracle = Propagator(build_ajc(p, Mode::A, config).hamiltonian).evolve(g0, t);
    EXPECT_NEAR(fidelity_up_to_global_phase(e1, closed), 1.0, 1e-6);
    EXPECT_NEAR(fidelity_up_to_global_phase(e1, oracle), 1.0, 1e-6);
    EXPECT_LT((closed - oracle).norm(), 1e-12);
}

TEST(qubit_evolution, plus_sign_reverses_time) {
    SpaceConfig config;
    SystemParams p(0.2, 0.9);
    DoubletBranch branch = DoubletBranch::from_excited(2);
    std::mt19937 rng(4);
    StateVector s = random_doublet_state(config, branch, Mode::A, rng);
    StateVector forward = qubit_evolution(p, branch, 0.7, s);
    StateVector back = qubit_evolution(p, branch, 0.7, forward, Mode::A, ExponentSign::plus);
    EXPECT_LT((back - s).norm(), 1e-12);
}

TEST(free_wave, excited_vacuum_is_an_eigenstate) {
    SpaceConfig config;
    SystemParams p(0.3, 1.9);
    StateVector e0 = StateVector::basis(config, {Atom::e, 0, 1});
    StateVector he0 = build_ajc(p, Mode::A, config).hamiltonian * e0;
    EXPECT_LT((he0 - free_wave_energy(p) * e0).norm(), 1e-14);
}
