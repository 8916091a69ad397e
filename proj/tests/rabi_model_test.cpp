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

#include "ajc/rabi_model.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace ajc;

TEST(system_params, derived_quantities) {
    SystemParams p(0.3, 1.1, 0.5);
    EXPECT_DOUBLE_EQ(p.delta(), 0.8);
    EXPECT_DOUBLE_EQ(p.delta_bar(), 1.4);
    EXPECT_DOUBLE_EQ(p.alpha(), 0.8);
    EXPECT_DOUBLE_EQ(p.alpha_bar(), 1.4);
    EXPECT_NEAR(p.alpha_bar(), p.alpha() + p.omega() / p.lambda_coupling(), 1e-15);
    EXPECT_THROW(SystemParams(1, 1, 0), std::invalid_argument);
    EXPECT_THROW(SystemParams(-1, 1, 1), std::invalid_argument);
    EXPECT_THROW(SystemParams(1, NAN, 1), std::invalid_argument);
}

TEST(system_params, alpha_bar_identity_randomized) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0, 5);
    for (int i = 0; i < 100; ++i) {
        SystemParams p(u(rng), u(rng), 0.1 + u(rng));
        EXPECT_NEAR(p.alpha_bar(), p.alpha() + p.omega() / p.lambda_coupling(), 1e-12);
    }
}

TEST(build_rabi, decoupled_energy_and_coupling_element) {
    SpaceConfig config;
    SystemParams weak(0.8, 0.3, 1e-12);
    OperatorMatrix h = build_rabi(weak, Mode::A, config);
    StateVector g0 = StateVector::basis(config, {Atom::g, 0, 0});
    EXPECT_NEAR(g0.inner(h * g0).real(), 0.8 / 2 - 0.3 / 2, 1e-15);

    SystemParams p(0.8, 0.3, 0.7);
    for (Mode mode : {Mode::A, Mode::B}) {
        OperatorMatrix hr = build_rabi(p, mode, config);
        BasisLabel e1 = BasisLabel{Atom::e, 0, 0}.with_photons(mode, 1);
        EXPECT_NEAR(std::abs(hr.element(e1, {Atom::g, 0, 0}) - Complex(0.7)), 0.0, 1e-15);
        EXPECT_LT(hermiticity_residual(hr), 1e-14);
    }
}

TEST(build_jc, conserved_number_and_transition) {
    SpaceConfig config;
    SystemParams p(0.4, 1.3);
    ModelOperators jc = build_jc(p, Mode::A, config);
    EXPECT_LT(max_norm(commutator(jc.hamiltonian, jc.excitation_number)), 1e-12);
    EXPECT_LT(hermiticity_residual(jc.hamiltonian), 1e-14);

    StateVector g1 = StateVector::basis(config, {Atom::g, 1, 0});
    EXPECT_LT((jc.excitation_number * g1 - g1).norm(), 1e-15);

    StateVector e0 = StateVector::basis(config, {Atom::e, 0, 0});
    StateVector expected = (p.alpha() / 2) * e0 + g1;
    EXPECT_LT((jc.transition * e0 - expected).norm(), 1e-15);
}

TEST(build_ajc, conserved_number_and_transition) {
    SpaceConfig config;
    SystemParams p(0.4, 1.3);
    for (Mode mode : {Mode::A, Mode::B}) {
        ModelOperators ajc = build_ajc(p, mode, config);
        EXPECT_LT(max_norm(commutator(ajc.hamiltonian, ajc.excitation_number)), 1e-12);
        EXPECT_LT(hermiticity_residual(ajc.hamiltonian), 1e-14);
    }

    ModelOperators ajc = build_ajc(p, Mode::A, config);
    StateVector g0 = StateVector::basis(config, {Atom::g, 0, 0});
    StateVector e1 = StateVector::basis(config, {Atom::e, 1, 0});
    StateVector e0 = StateVector::basis(config, {Atom::e, 0, 0});
    EXPECT_LT((ajc.transition * g0 - ((-p.alpha_bar() / 2) * g0 + e1)).norm(), 1e-15);
    // |e,0> is an eigenstate: no coupling term survives.
    EXPECT_LT((ajc.transition * e0 - (p.alpha_bar() / 2) * e0).norm(), 1e-15);
}

TEST(build_ajc, excitation_numbers_are_non_negative_integers) {
    SpaceConfig config = make_space(3, 2);
    SystemParams p(0.4, 1.3);
    for (const auto &ops : {build_jc(p, Mode::A, config), build_ajc(p, Mode::A, config)}) {
        const CMatrix &n = ops.excitation_number.matrix();
        EXPECT_EQ(max_norm(CMatrix(n - CMatrix(n.diagonal().asDiagonal()))), 0.0);
        for (int i = 0; i < n.rows(); ++i) {
            double v = n(i, i).real();
            EXPECT_GE(v, 0.0);
            EXPECT_NEAR(v, std::round(v), 1e-12);
        }
    }
}

TEST(build_ajc, doublet_block_structure_and_eigenvalue) {
    SpaceConfig config = make_space(4, 2);
    SystemParams p(0.7, 2.1);
    for (Mode mode : {Mode::A, Mode::B}) {
        OperatorMatrix t = build_ajc(p, mode, config).transition;
        for (int n = 0; n < config.cutoff(mode); ++n) {
            double a_bar_sq = (n + 1) + p.delta_bar() * p.delta_bar() / 16;
            for (int k = 0; k <= config.cutoff(other_mode(mode)); ++k) {
                BasisLabel lo = BasisLabel{Atom::g, 0, 0}.with_photons(other_mode(mode), k).with_photons(mode, n);
                BasisLabel hi = BasisLabel{Atom::e, 0, 0}.with_photons(other_mode(mode), k).with_photons(mode, n + 1);
                for (const BasisLabel &member : {lo, hi}) {
                    StateVector s = StateVector::basis(config, member);
                    StateVector ts = t * s;
                    double inside = std::norm(ts.amplitude(lo)) + std::norm(ts.amplitude(hi));
                    EXPECT_NEAR(inside, ts.norm() * ts.norm(), 1e-14);
                    EXPECT_LT((t * ts - a_bar_sq * s).norm(), 1e-12);
                }
            }
        }
    }
}

TEST(build_ajc, top_fock_level_is_not_distorted) {
    SpaceConfig config = make_space(3, 2);
    ModelOperators ajc = build_ajc(SystemParams(0.4, 1.3), Mode::A, config);
    // a a^dag on |3> is 4 even though a^dag |3> leaves the space.
    EXPECT_NEAR(ajc.excitation_number.element({Atom::e, 3, 1}, {Atom::e, 3, 1}).real(), 4.0, 1e-15);
    EXPECT_NEAR(ajc.excitation_number.element({Atom::g, 3, 0}, {Atom::g, 3, 0}).real(), 5.0, 1e-15);
}

TEST(check_decomposition, exact_zero_case) {
    EXPECT_EQ(check_decomposition(SystemParams(0, 0, 1), Mode::A, SpaceConfig{}), 0.0);
}

TEST(check_decomposition, randomized_draws) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> freq(0, 10);
    std::uniform_real_distribution<double> coupling(0.05, 5);
    std::uniform_int_distribution<int> cutoff(2, 5);
    for (int i = 0; i < 100; ++i) {
        SystemParams p(freq(rng), freq(rng), coupling(rng));
        SpaceConfig config = make_space(cutoff(rng), cutoff(rng));
        EXPECT_LT(check_decomposition(p, i % 2 ? Mode::A : Mode::B, config), 1e-12);
    }
}
