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

#include <vector>

#include "ajc/hilbert.hpp"

namespace ajc {

inline constexpr double kHermiticityTolerance = 1e-12;

/// Cached eigendecomposition of a Hermitian Hamiltonian, giving exp(-iHt) for
/// any t without re-diagonalising.
class Propagator {
   public:
    /// Throws std::invalid_argument if the matrix is not Hermitian to within
    /// kHermiticityTolerance relative to its max-norm. The matrix is
    /// symmetrised with its adjoint before decomposition.
    explicit Propagator(const OperatorMatrix &hamiltonian);

    const SpaceConfig &config() const { return config_; }
    const Eigen::VectorXd &energies() const { return energies_; }

    /// exp(-i H t)|initial>. Negative t evolves backwards.
    StateVector evolve(const StateVector &initial, double t) const;

    /// |<target| exp(-i H t) |initial>|^2
    double transfer_probability(const StateVector &initial, const StateVector &target, double t) const;

   private:
    SpaceConfig config_;
    Eigen::VectorXd energies_;
    CMatrix eigenvectors_;
};

struct EvolutionJob {
    OperatorMatrix hamiltonian;
    double duration;
    StateVector initial;
};

StateVector evolve(const EvolutionJob &job);

struct TransferSample {
    double t;
    double probability;
};

/// Transfer probability on the uniform grid t_i = i * t_max / (samples - 1).
std::vector<TransferSample> scan_transfer(const OperatorMatrix &hamiltonian, const StateVector &initial,
                                          const StateVector &target, double t_max, int samples);

}  // namespace ajc
