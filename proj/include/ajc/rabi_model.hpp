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

#include "ajc/hilbert.hpp"

namespace ajc {

/// Physical parameters with hbar = 1. Frequencies are in units of the coupling.
class SystemParams {
   public:
    /// Throws std::invalid_argument for lambda <= 0, negative or non-finite frequencies.
    SystemParams(double omega, double omega0, double lambda_coupling = 1.0);

    /// Resonant split omega = omega0 = delta_bar / 2.
    static SystemParams resonant_with_sum(double delta_bar, double lambda_coupling = 1.0);

    double omega() const { return omega_; }
    double omega0() const { return omega0_; }
    double lambda_coupling() const { return lambda_; }

    /// omega0 - omega
    double delta() const { return omega0_ - omega_; }
    /// omega0 + omega
    double delta_bar() const { return omega0_ + omega_; }
    double alpha() const { return delta() / (2 * lambda_); }
    double alpha_bar() const { return delta_bar() / (2 * lambda_); }

    bool operator==(const SystemParams &) const = default;

   private:
    double omega_;
    double omega0_;
    double lambda_;
};

/// Full quantum Rabi Hamiltonian with the free field in symmetric order,
/// coupling the atom to `mode` only.
OperatorMatrix build_rabi(const SystemParams &params, Mode mode, const SpaceConfig &config);

/// Hamiltonian, conserved excitation number, and state transition operator of
/// one component model.
struct ModelOperators {
    OperatorMatrix hamiltonian;
    OperatorMatrix excitation_number;
    OperatorMatrix transition;
};

/// Jaynes-Cummings (polariton) component: co-rotating coupling a s+ + a^dag s-.
ModelOperators build_jc(const SystemParams &params, Mode mode, const SpaceConfig &config);

/// Anti-Jaynes-Cummings (anti-polariton) component: counter-rotating coupling
/// a s- + a^dag s+.
ModelOperators build_ajc(const SystemParams &params, Mode mode, const SpaceConfig &config);

/// Max-norm of H_R - (H_jc + H_ajc)/2 over the whole truncated space.
double check_decomposition(const SystemParams &params, Mode mode, const SpaceConfig &config);

}  // namespace ajc
