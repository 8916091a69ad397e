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
#include "ajc/rabi_model.hpp"

namespace ajc {

/// Doublet membership tolerance: weight outside the doublet above this is leakage.
inline constexpr double kDoubletTolerance = 1e-10;

enum class ExponentSign { minus, plus };

std::string to_string(ExponentSign sign);

/// Identifies an anti-Jaynes-Cummings doublet {|g,m>, |e,m+1>} by the state the
/// atom enters with. from_excited(n) is the doublet from_ground(n-1) seen from
/// its upper member.
class DoubletBranch {
   public:
    static DoubletBranch from_ground(int n);
    /// Throws std::invalid_argument for n < 1: |e,0> is an eigenstate of the
    /// transition operator and belongs to no doublet.
    static DoubletBranch from_excited(int n);

    Atom entry() const { return entry_; }
    int n() const { return n_; }
    /// Photon number m of the lower member |g,m>.
    int ground_photons() const { return entry_ == Atom::g ? n_ : n_ - 1; }
    /// The label the atom enters with, at photon number n() in `mode`.
    BasisLabel entry_label(Mode mode, int spectator_photons = 0) const;
    /// The other doublet member.
    BasisLabel partner_label(Mode mode, int spectator_photons = 0) const;

    bool operator==(const DoubletBranch &) const = default;

   private:
    DoubletBranch(Atom entry, int n) : entry_(entry), n_(n) {}
    Atom entry_;
    int n_;
};

std::string to_string(const DoubletBranch &branch);

struct DoubletParams {
    DoubletBranch branch;
    double c_bar;
    double s_bar;
    double rabi_freq;
    double a_bar;
};

DoubletParams doublet_params(const SystemParams &params, const DoubletBranch &branch);

/// |psi> is the entry label; |phi_bar> = epsilon|psi>. For a ground entry this is
/// -c|g,n> + s|e,n+1>, so <psi|phi_bar> = -c. For an excited entry it is
/// c|e,n> + s|g,n-1> and the overlap is +c.
struct QubitBasisPair {
    StateVector psi;
    StateVector phi_bar;
};

/// Builds the pair on the joint space with the atom coupled to `mode` and the
/// other mode in Fock state `spectator_photons`. Throws CutoffError if the
/// doublet or the spectator does not fit under the cutoff.
QubitBasisPair basic_states(const SystemParams &params, const DoubletBranch &branch, const SpaceConfig &config,
                            Mode mode = Mode::A, int spectator_photons = 0);

/// Weight of `state` on the doublet, summed over spectator Fock states.
double doublet_weight(const StateVector &state, const DoubletBranch &branch, Mode mode);

/// Copy of `state` with every amplitude outside the doublet set to zero (the
/// action of I_bar).
StateVector doublet_component(const StateVector &state, const DoubletBranch &branch, Mode mode);

/// Normalised transition operator epsilon = A_bar / a_bar restricted to the
/// doublet, applied in closed form. Throws LeakageError if the state has more
/// than kDoubletTolerance weight outside the doublet, CutoffError if the
/// doublet does not fit.
StateVector epsilon_apply(const SystemParams &params, const DoubletBranch &branch, const StateVector &state,
                          Mode mode = Mode::A);

/// exp(-i theta epsilon) = cos(theta) I_bar - i sin(theta) epsilon.
StateVector rotate(const SystemParams &params, const DoubletBranch &branch, double theta, const StateVector &state,
                   Mode mode = Mode::A);

/// exp(-+i H_g t) with H_g = omega (m + 3/2) I_bar + R epsilon, m the lower
/// member's photon number. The rotation angle is theta = R t. `sign` selects
/// the exponent's sign; plus is the time-reversed map.
StateVector qubit_evolution(const SystemParams &params, const DoubletBranch &branch, double t,
                            const StateVector &state, Mode mode = Mode::A, ExponentSign sign = ExponentSign::minus);

/// Energy of |e,0> in `mode` under the anti-Jaynes-Cummings Hamiltonian; the
/// state is an eigenstate and only picks up this phase.
double free_wave_energy(const SystemParams &params);

}  // namespace ajc
