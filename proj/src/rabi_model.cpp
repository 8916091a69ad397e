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
#include <stdexcept>
#include <vector>

namespace ajc {

SystemParams::SystemParams(double omega, double omega0, double lambda_coupling)
    : omega_(omega), omega0_(omega0), lambda_(lambda_coupling) {
    if (!std::isfinite(omega) || !std::isfinite(omega0) || !std::isfinite(lambda_coupling)) {
        throw std::invalid_argument("system parameters must be finite");
    }
    if (lambda_coupling <= 0) {
        throw std::invalid_argument("coupling strength must be positive");
    }
    if (omega < 0 || omega0 < 0) {
        throw std::invalid_argument("field and atomic frequencies must be non-negative");
    }
}

SystemParams SystemParams::resonant_with_sum(double delta_bar, double lambda_coupling) {
    return SystemParams(delta_bar / 2, delta_bar / 2, lambda_coupling);
}

OperatorMatrix build_rabi(const SystemParams &params, Mode mode, const SpaceConfig &config) {
    auto [a, a_dag] = ladder_ops(config, mode);
    auto [sz, sp, sm] = spin_ops(config);
    double w = params.omega();
    // (a^dag a + a a^dag) / 2 = a^dag a + 1/2, exact on the top Fock level too.
    return w * (a_dag * a + 0.5 * OperatorMatrix::identity(config)) + params.omega0() * sz +
           params.lambda_coupling() * ((a + a_dag) * (sp + sm));
}

ModelOperators build_jc(const SystemParams &params, Mode mode, const SpaceConfig &config) {
    auto [a, a_dag] = ladder_ops(config, mode);
    auto [sz, sp, sm] = spin_ops(config);
    OperatorMatrix number = a_dag * a + sp * sm;
    OperatorMatrix transition = params.alpha() * sz + a * sp + a_dag * sm;
    OperatorMatrix h = params.omega() * number + 2 * params.lambda_coupling() * transition -
                       0.5 * params.omega() * OperatorMatrix::identity(config);
    return ModelOperators{std::move(h), std::move(number), std::move(transition)};
}

ModelOperators build_ajc(const SystemParams &params, Mode mode, const SpaceConfig &config) {
    auto [a, a_dag] = ladder_ops(config, mode);
    auto [sz, sp, sm] = spin_ops(config);
    // a a^dag written as a^dag a + 1 so the top Fock level keeps its exact value.
    OperatorMatrix number = a_dag * a + OperatorMatrix::identity(config) + sm * sp;
    OperatorMatrix transition = params.alpha_bar() * sz + a * sm + a_dag * sp;
    OperatorMatrix h = params.omega() * number + 2 * params.lambda_coupling() * transition -
                       0.5 * params.omega() * OperatorMatrix::identity(config);
    return ModelOperators{std::move(h), std::move(number), std::move(transition)};
}

double check_decomposition(const SystemParams &params, Mode mode, const SpaceConfig &config) {
    OperatorMatrix rabi = build_rabi(params, mode, config);
    OperatorMatrix jc = build_jc(params, mode, config).hamiltonian;
    OperatorMatrix ajc = build_ajc(params, mode, config).hamiltonian;
    return max_norm(OperatorMatrix(config, rabi.matrix() - 0.5 * (jc.matrix() + ajc.matrix())));
}

}  // namespace ajc
