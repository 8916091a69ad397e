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

#include "ajc/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ajc {

Propagator::Propagator(const OperatorMatrix &hamiltonian) : config_(hamiltonian.config()) {
    double scale = std::max(1.0, max_norm(hamiltonian));
    double residual = hermiticity_residual(hamiltonian);
    if (residual > kHermiticityTolerance * scale) {
        throw std::invalid_argument("Hamiltonian is not Hermitian (residual " + std::to_string(residual) + ")");
    }
    CMatrix h = 0.5 * (hamiltonian.matrix() + hamiltonian.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    energies_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector Propagator::evolve(const StateVector &initial, double t) const {
    if (!(initial.config() == config_)) {
        throw std::invalid_argument("initial state does not live on the Hamiltonian's space");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite");
    }
    CVector coeffs = eigenvectors_.adjoint() * initial.amplitudes();
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::polar(1.0, -energies_[k] * t);
    }
    return StateVector(config_, eigenvectors_ * coeffs);
}

double Propagator::transfer_probability(const StateVector &initial, const StateVector &target, double t) const {
    return std::min(1.0, std::norm(target.inner(evolve(initial, t))));
}

StateVector evolve(const EvolutionJob &job) {
    return Propagator(job.hamiltonian).evolve(job.initial, job.duration);
}

std::vector<TransferSample> scan_transfer(const OperatorMatrix &hamiltonian, const StateVector &initial,
                                          const StateVector &target, double t_max, int samples) {
    if (samples < 2) {
        throw std::invalid_argument("scan needs at least 2 samples");
    }
    if (!(t_max > 0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("scan window must be positive and finite");
    }
    Propagator propagator(hamiltonian);
    std::vector<TransferSample> out;
    out.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double t = t_max * i / (samples - 1);
        out.push_back({t, propagator.transfer_probability(initial, target, t)});
    }
    return out;
}

}  // namespace ajc
