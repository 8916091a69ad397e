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
#include <stdexcept>

#include "ajc/errors.hpp"

namespace ajc {

namespace {

void require_fits(const DoubletBranch &branch, const SpaceConfig &config, Mode mode) {
    if (branch.ground_photons() + 1 > config.cutoff(mode)) {
        throw CutoffError("doublet " + to_string(branch) + " needs " + std::to_string(branch.ground_photons() + 1) +
                          " photons in mode " + to_string(mode) + " but the cutoff is " +
                          std::to_string(config.cutoff(mode)));
    }
}

bool in_doublet(const BasisLabel &label, int lower, Mode mode) {
    int n = label.photons(mode);
    return (label.atom == Atom::g && n == lower) || (label.atom == Atom::e && n == lower + 1);
}

void require_supported(const StateVector &state, const DoubletBranch &branch, Mode mode) {
    double outside = state.norm() * state.norm() - doublet_weight(state, branch, mode);
    if (outside > kDoubletTolerance) {
        throw LeakageError("state has weight " + std::to_string(outside) + " outside doublet " + to_string(branch) +
                           " of mode " + to_string(mode));
    }
}

/// Doublet component of `state`, with everything outside the doublet zeroed.
StateVector project(const StateVector &state, int lower, Mode mode) {
    CVector out = CVector::Zero(state.dim());
    for (int i = 0; i < state.dim(); ++i) {
        if (in_doublet(label_of(state.config(), i), lower, mode)) {
            out[i] = state.amplitudes()[i];
        }
    }
    return StateVector(state.config(), std::move(out));
}

}  // namespace

std::string to_string(ExponentSign sign) {
    return sign == ExponentSign::minus ? "minus" : "plus";
}

DoubletBranch DoubletBranch::from_ground(int n) {
    if (n < 0) {
        throw std::invalid_argument("photon number must be non-negative");
    }
    return DoubletBranch(Atom::g, n);
}

DoubletBranch DoubletBranch::from_excited(int n) {
    if (n < 1) {
        throw std::invalid_argument("from_excited(" + std::to_string(n) +
                                    ") is not a doublet: |e,0> is an eigenstate of the transition operator");
    }
    return DoubletBranch(Atom::e, n);
}

BasisLabel DoubletBranch::entry_label(Mode mode, int spectator_photons) const {
    BasisLabel label{entry_, 0, 0};
    return label.with_photons(other_mode(mode), spectator_photons).with_photons(mode, n_);
}

BasisLabel DoubletBranch::partner_label(Mode mode, int spectator_photons) const {
    Atom atom = entry_ == Atom::g ? Atom::e : Atom::g;
    int n = entry_ == Atom::g ? n_ + 1 : n_ - 1;
    BasisLabel label{atom, 0, 0};
    return label.with_photons(other_mode(mode), spectator_photons).with_photons(mode, n);
}

std::string to_string(const DoubletBranch &branch) {
    return std::string(branch.entry() == Atom::g ? "from_ground(" : "from_excited(") + std::to_string(branch.n()) +
           ")";
}

DoubletParams doublet_params(const SystemParams &params, const DoubletBranch &branch) {
    double lambda = params.lambda_coupling();
    double db = params.delta_bar();
    int m = branch.ground_photons();
    double a_bar = std::sqrt((m + 1) + db * db / (16 * lambda * lambda));
    double rabi = 2 * lambda * a_bar;
    return DoubletParams{
        .branch = branch,
        .c_bar = db / (2 * rabi),
        .s_bar = 2 * lambda * std::sqrt(static_cast<double>(m + 1)) / rabi,
        .rabi_freq = rabi,
        .a_bar = a_bar,
    };
}

QubitBasisPair basic_states(const SystemParams &params, const DoubletBranch &branch, const SpaceConfig &config,
                            Mode mode, int spectator_photons) {
    config.validate();
    require_fits(branch, config, mode);
    if (spectator_photons < 0 || spectator_photons > config.cutoff(other_mode(mode))) {
        throw CutoffError("spectator Fock state " + std::to_string(spectator_photons) + " outside mode " +
                          to_string(other_mode(mode)));
    }
    DoubletParams d = doublet_params(params, branch);
    StateVector psi = StateVector::basis(config, branch.entry_label(mode, spectator_photons));
    StateVector partner = StateVector::basis(config, branch.partner_label(mode, spectator_photons));
    double own = branch.entry() == Atom::g ? -d.c_bar : d.c_bar;
    return QubitBasisPair{psi, own * psi + d.s_bar * partner};
}

double doublet_weight(const StateVector &state, const DoubletBranch &branch, Mode mode) {
    int lower = branch.ground_photons();
    return weight_where(state, [&](const BasisLabel &l) { return in_doublet(l, lower, mode); });
}

StateVector doublet_component(const StateVector &state, const DoubletBranch &branch, Mode mode) {
    return project(state, branch.ground_photons(), mode);
}

StateVector epsilon_apply(const SystemParams &params, const DoubletBranch &branch, const StateVector &state,
                          Mode mode) {
    const SpaceConfig &config = state.config();
    require_fits(branch, config, mode);
    require_supported(state, branch, mode);

    DoubletParams d = doublet_params(params, branch);
    int lower = branch.ground_photons();
    double half_alpha = params.alpha_bar() / 2;
    double coupling = std::sqrt(static_cast<double>(lower + 1));

    // A_bar on {|g,m>, |e,m+1>} is [[-alpha/2, sqrt(m+1)], [sqrt(m+1), alpha/2]],
    // independently for every spectator Fock state.
    CVector out = CVector::Zero(state.dim());
    Mode spectator = other_mode(mode);
    for (int k = 0; k <= config.cutoff(spectator); ++k) {
        BasisLabel g_label = BasisLabel{Atom::g, 0, 0}.with_photons(spectator, k).with_photons(mode, lower);
        BasisLabel e_label = BasisLabel{Atom::e, 0, 0}.with_photons(spectator, k).with_photons(mode, lower + 1);
        int ig = index_of(config, g_label);
        int ie = index_of(config, e_label);
        Complex xg = state.amplitudes()[ig];
        Complex xe = state.amplitudes()[ie];
        out[ig] = (-half_alpha * xg + coupling * xe) / d.a_bar;
        out[ie] = (coupling * xg + half_alpha * xe) / d.a_bar;
    }
    return StateVector(config, std::move(out));
}

StateVector rotate(const SystemParams &params, const DoubletBranch &branch, double theta, const StateVector &state,
                   Mode mode) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    StateVector eps = epsilon_apply(params, branch, state, mode);
    StateVector identity_part = project(state, branch.ground_photons(), mode);
    return Complex(std::cos(theta), 0) * identity_part + Complex(0, -std::sin(theta)) * eps;
}

StateVector qubit_evolution(const SystemParams &params, const DoubletBranch &branch, double t,
                            const StateVector &state, Mode mode, ExponentSign sign) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite");
    }
    double signed_t = sign == ExponentSign::minus ? t : -t;
    DoubletParams d = doublet_params(params, branch);
    double free_energy = params.omega() * (branch.ground_photons() + 1.5);
    Complex phase = std::polar(1.0, -free_energy * signed_t);
    return phase * rotate(params, branch, d.rabi_freq * signed_t, state, mode);
}

double free_wave_energy(const SystemParams &params) {
    return params.omega() / 2 + params.lambda_coupling() * params.alpha_bar();
}

}  // namespace ajc
