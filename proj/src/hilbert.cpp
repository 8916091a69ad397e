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

#include "ajc/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace ajc {

namespace {

void require_same(const SpaceConfig &a, const SpaceConfig &b, const char *what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": mismatched space configurations");
    }
}

}  // namespace

std::string to_string(Atom atom) {
    return atom == Atom::g ? "g" : "e";
}

std::string to_string(Mode mode) {
    return mode == Mode::A ? "A" : "B";
}

Mode other_mode(Mode mode) {
    return mode == Mode::A ? Mode::B : Mode::A;
}

void SpaceConfig::validate() const {
    if (n_max_a < 2 || n_max_b < 2) {
        throw std::invalid_argument(
            "photon cutoffs must be >= 2 (got n_max_a=" + std::to_string(n_max_a) +
            ", n_max_b=" + std::to_string(n_max_b) + ")");
    }
}

SpaceConfig make_space(int n_max_a, int n_max_b) {
    SpaceConfig config{n_max_a, n_max_b};
    config.validate();
    return config;
}

BasisLabel BasisLabel::with_photons(Mode mode, int n) const {
    BasisLabel out = *this;
    (mode == Mode::A ? out.n_a : out.n_b) = n;
    return out;
}

std::string to_string(const BasisLabel &label) {
    return "|" + to_string(label.atom) + "," + std::to_string(label.n_a) + "," +
           std::to_string(label.n_b) + ">";
}

int index_of(const SpaceConfig &config, const BasisLabel &label) {
    if (label.n_a < 0 || label.n_a > config.n_max_a || label.n_b < 0 || label.n_b > config.n_max_b) {
        throw std::out_of_range("basis label " + to_string(label) + " outside the truncated space");
    }
    int atom = static_cast<int>(label.atom);
    return (atom * config.mode_dim(Mode::A) + label.n_a) * config.mode_dim(Mode::B) + label.n_b;
}

BasisLabel label_of(const SpaceConfig &config, int index) {
    if (index < 0 || index >= config.dim()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " outside the truncated space");
    }
    int db = config.mode_dim(Mode::B);
    int da = config.mode_dim(Mode::A);
    BasisLabel label;
    label.n_b = index % db;
    label.n_a = (index / db) % da;
    label.atom = static_cast<Atom>(index / (db * da));
    return label;
}

StateVector::StateVector(SpaceConfig config, CVector amplitudes)
    : config_(config), amplitudes_(std::move(amplitudes)) {
    config_.validate();
    if (amplitudes_.size() != config_.dim()) {
        throw std::invalid_argument("state vector length does not match the joint dimension");
    }
}

StateVector StateVector::zero(const SpaceConfig &config) {
    return StateVector(config, CVector::Zero(config.dim()));
}

StateVector StateVector::basis(const SpaceConfig &config, const BasisLabel &label) {
    CVector v = CVector::Zero(config.dim());
    v[index_of(config, label)] = 1.0;
    return StateVector(config, std::move(v));
}

Complex StateVector::amplitude(const BasisLabel &label) const {
    return amplitudes_[index_of(config_, label)];
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return StateVector(config_, amplitudes_ / n);
}

Complex StateVector::inner(const StateVector &other) const {
    require_same(config_, other.config_, "inner product");
    return amplitudes_.dot(other.amplitudes_);
}

BasisLabel StateVector::dominant_label() const {
    Eigen::Index best = 0;
    amplitudes_.cwiseAbs2().maxCoeff(&best);
    return label_of(config_, static_cast<int>(best));
}

StateVector StateVector::operator+(const StateVector &other) const {
    require_same(config_, other.config_, "state sum");
    return StateVector(config_, amplitudes_ + other.amplitudes_);
}

StateVector StateVector::operator-(const StateVector &other) const {
    require_same(config_, other.config_, "state difference");
    return StateVector(config_, amplitudes_ - other.amplitudes_);
}

StateVector StateVector::operator*(Complex scalar) const {
    return StateVector(config_, amplitudes_ * scalar);
}

StateVector operator*(Complex scalar, const StateVector &state) {
    return state * scalar;
}

OperatorMatrix::OperatorMatrix(SpaceConfig config, CMatrix entries)
    : config_(config), entries_(std::move(entries)) {
    config_.validate();
    if (entries_.rows() != config_.dim() || entries_.cols() != config_.dim()) {
        throw std::invalid_argument("operator shape does not match the joint dimension");
    }
}

OperatorMatrix OperatorMatrix::identity(const SpaceConfig &config) {
    return OperatorMatrix(config, CMatrix::Identity(config.dim(), config.dim()));
}

OperatorMatrix OperatorMatrix::zero(const SpaceConfig &config) {
    return OperatorMatrix(config, CMatrix::Zero(config.dim(), config.dim()));
}

Complex OperatorMatrix::element(const BasisLabel &row, const BasisLabel &col) const {
    return entries_(index_of(config_, row), index_of(config_, col));
}

OperatorMatrix OperatorMatrix::adjoint() const {
    return OperatorMatrix(config_, entries_.adjoint());
}

StateVector OperatorMatrix::apply(const StateVector &state) const {
    require_same(config_, state.config(), "operator application");
    return StateVector(config_, entries_ * state.amplitudes());
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix &other) const {
    require_same(config_, other.config_, "operator product");
    return OperatorMatrix(config_, entries_ * other.entries_);
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix &other) const {
    require_same(config_, other.config_, "operator sum");
    return OperatorMatrix(config_, entries_ + other.entries_);
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix &other) const {
    require_same(config_, other.config_, "operator difference");
    return OperatorMatrix(config_, entries_ - other.entries_);
}

OperatorMatrix OperatorMatrix::operator*(Complex scalar) const {
    return OperatorMatrix(config_, entries_ * scalar);
}

OperatorMatrix operator*(Complex scalar, const OperatorMatrix &op) {
    return op * scalar;
}

double max_norm(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_norm(const OperatorMatrix &op) {
    return max_norm(op.matrix());
}

OperatorMatrix commutator(const OperatorMatrix &x, const OperatorMatrix &y) {
    return x * y - y * x;
}

double hermiticity_residual(const OperatorMatrix &op) {
    return max_norm(CMatrix(op.matrix() - op.matrix().adjoint()));
}

OperatorMatrix embed(const SpaceConfig &config, Slot slot, const CMatrix &local) {
    config.validate();
    CMatrix atom = CMatrix::Identity(2, 2);
    CMatrix mode_a = CMatrix::Identity(config.mode_dim(Mode::A), config.mode_dim(Mode::A));
    CMatrix mode_b = CMatrix::Identity(config.mode_dim(Mode::B), config.mode_dim(Mode::B));
    CMatrix &target = slot == Slot::atom ? atom : (slot == Slot::mode_a ? mode_a : mode_b);
    if (local.rows() != target.rows() || local.cols() != target.cols()) {
        throw std::invalid_argument("local operator shape does not match its tensor slot");
    }
    target = local;
    CMatrix joint = Eigen::kroneckerProduct(Eigen::kroneckerProduct(atom, mode_a).eval(), mode_b);
    return OperatorMatrix(config, std::move(joint));
}

LadderOps ladder_ops(const SpaceConfig &config, Mode mode) {
    int d = config.mode_dim(mode);
    CMatrix a = CMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    Slot slot = mode == Mode::A ? Slot::mode_a : Slot::mode_b;
    CMatrix a_dag = a.adjoint();
    return LadderOps{embed(config, slot, a), embed(config, slot, a_dag)};
}

SpinOps spin_ops(const SpaceConfig &config) {
    // Local basis {g, e}.
    CMatrix sz(2, 2), sp(2, 2);
    sz << -0.5, 0.0, 0.0, 0.5;
    sp << 0.0, 0.0, 1.0, 0.0;
    CMatrix sm = sp.adjoint();
    return SpinOps{embed(config, Slot::atom, sz), embed(config, Slot::atom, sp), embed(config, Slot::atom, sm)};
}

double fidelity_up_to_global_phase(const StateVector &u, const StateVector &v) {
    require_same(u.config(), v.config(), "fidelity");
    return std::min(1.0, std::abs(u.inner(v)));
}

Eigen::Matrix2cd reduced_atom_density(const StateVector &state) {
    const auto &cfg = state.config();
    int block = cfg.mode_dim(Mode::A) * cfg.mode_dim(Mode::B);
    auto g = state.amplitudes().segment(0, block);
    auto e = state.amplitudes().segment(block, block);
    Eigen::Matrix2cd rho;
    rho(0, 0) = g.squaredNorm();
    rho(1, 1) = e.squaredNorm();
    rho(0, 1) = e.dot(g);  // sum conj(e) g = <g|rho|e>
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

}  // namespace ajc
