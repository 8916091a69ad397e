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

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace ajc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kNormTolerance = 1e-12;

enum class Atom { g = 0, e = 1 };
enum class Mode { A, B };

std::string to_string(Atom atom);
std::string to_string(Mode mode);
Mode other_mode(Mode mode);

/// Photon cutoffs (inclusive) for the two cavity modes.
///
/// The joint space is atom (x) mode A (x) mode B, with the atom slot slowest and
/// mode B fastest. The atom's local basis is ordered {g, e}.
struct SpaceConfig {
    int n_max_a = 3;
    int n_max_b = 3;

    /// Throws std::invalid_argument unless both cutoffs are at least 2.
    void validate() const;

    int cutoff(Mode mode) const { return mode == Mode::A ? n_max_a : n_max_b; }
    int mode_dim(Mode mode) const { return cutoff(mode) + 1; }
    int dim() const { return 2 * (n_max_a + 1) * (n_max_b + 1); }

    bool operator==(const SpaceConfig &) const = default;
};

SpaceConfig make_space(int n_max_a = 3, int n_max_b = 3);

struct BasisLabel {
    Atom atom = Atom::g;
    int n_a = 0;
    int n_b = 0;

    int photons(Mode mode) const { return mode == Mode::A ? n_a : n_b; }
    BasisLabel with_photons(Mode mode, int n) const;

    bool operator==(const BasisLabel &) const = default;
};

std::string to_string(const BasisLabel &label);

int index_of(const SpaceConfig &config, const BasisLabel &label);
BasisLabel label_of(const SpaceConfig &config, int index);

class StateVector {
   public:
    StateVector(SpaceConfig config, CVector amplitudes);

    static StateVector zero(const SpaceConfig &config);
    static StateVector basis(const SpaceConfig &config, const BasisLabel &label);

    const SpaceConfig &config() const { return config_; }
    const CVector &amplitudes() const { return amplitudes_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }

    Complex amplitude(const BasisLabel &label) const;
    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(double tol = kNormTolerance) const;
    StateVector normalized() const;

    /// <this|other>
    Complex inner(const StateVector &other) const;

    /// Label carrying the largest probability; ties resolve to the lowest index.
    BasisLabel dominant_label() const;

    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;
    StateVector operator*(Complex scalar) const;

   private:
    SpaceConfig config_;
    CVector amplitudes_;
};

StateVector operator*(Complex scalar, const StateVector &state);

class OperatorMatrix {
   public:
    OperatorMatrix(SpaceConfig config, CMatrix entries);

    static OperatorMatrix identity(const SpaceConfig &config);
    static OperatorMatrix zero(const SpaceConfig &config);

    const SpaceConfig &config() const { return config_; }
    const CMatrix &matrix() const { return entries_; }
    int dim() const { return static_cast<int>(entries_.rows()); }

    Complex element(const BasisLabel &row, const BasisLabel &col) const;
    OperatorMatrix adjoint() const;

    StateVector apply(const StateVector &state) const;
    StateVector operator*(const StateVector &state) const { return apply(state); }
    OperatorMatrix operator*(const OperatorMatrix &other) const;
    OperatorMatrix operator+(const OperatorMatrix &other) const;
    OperatorMatrix operator-(const OperatorMatrix &other) const;
    OperatorMatrix operator*(Complex scalar) const;

   private:
    SpaceConfig config_;
    CMatrix entries_;
};

OperatorMatrix operator*(Complex scalar, const OperatorMatrix &op);

/// Largest absolute entry.
double max_norm(const CMatrix &m);
double max_norm(const OperatorMatrix &op);
OperatorMatrix commutator(const OperatorMatrix &x, const OperatorMatrix &y);
double hermiticity_residual(const OperatorMatrix &op);

enum class Slot { atom, mode_a, mode_b };

/// Lifts an operator on one tensor slot to the joint space with identities on
/// the other slots. `local` must match the slot's dimension.
OperatorMatrix embed(const SpaceConfig &config, Slot slot, const CMatrix &local);

struct LadderOps {
    OperatorMatrix annihilation;
    OperatorMatrix creation;
};

/// Ladder operators of one mode. Creation on the top Fock level gives zero.
LadderOps ladder_ops(const SpaceConfig &config, Mode mode);

struct SpinOps {
    OperatorMatrix sz;
    OperatorMatrix raising;
    OperatorMatrix lowering;
};

SpinOps spin_ops(const SpaceConfig &config);

/// |<u|v>|. Equal to 1 exactly when u and v differ only by a global phase.
double fidelity_up_to_global_phase(const StateVector &u, const StateVector &v);

/// Weight of `state` on labels accepted by `keep`.
template <typename Pred>
double weight_where(const StateVector &state, Pred keep) {
    double w = 0;
    for (int i = 0; i < state.dim(); ++i) {
        if (keep(label_of(state.config(), i))) {
            w += std::norm(state.amplitudes()[i]);
        }
    }
    return w;
}

/// Reduced density matrix of the atom, ordered {g, e}.
Eigen::Matrix2cd reduced_atom_density(const StateVector &state);

}  // namespace ajc
