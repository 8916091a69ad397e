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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ajc/protocols.hpp"
#include "json.hpp"

namespace ajc {

using Json = nlohmann::ordered_json;

enum class Command { decompose_check, cnot, hadamard, calibrate, sweep };
enum class OutputFormat { json, csv };

std::string to_string(Command command);

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Inclusive grid: steps points from lo to hi (a single point at lo when steps == 1).
struct GridAxis {
    double lo = 0;
    double hi = 0;
    int steps = 1;

    double at(int i) const;
};

struct RunConfig {
    Command command = Command::cnot;
    double omega = 1e-3;
    double omega0 = 1e-3;
    int n_max = 3;
    Routing routing = Routing::paper;
    Backend backend = Backend::oracle;
    OutputFormat output_format = OutputFormat::json;
    std::string output_path = "-";

    // cnot
    bool calibrated = true;
    // hadamard
    Atom initial = Atom::g;
    HadamardMethod method = HadamardMethod::operator_action;
    // calibrate
    Atom entry = Atom::g;
    int photons = 0;
    TransferObjective objective = TransferObjective::full;
    // sweep: delta_bar / lambda and t lambda
    GridAxis delta_bar{0, 8, 81};
    GridAxis time{0, 3.141592653589793, 101};

    /// Throws std::invalid_argument on any inconsistent setting.
    void validate() const;
    SystemParams params() const { return SystemParams(omega, omega0, 1.0); }
    SpaceConfig space() const { return make_space(n_max, n_max); }
};

Json decompose_report(const RunConfig &config);
Json cnot_report(const RunConfig &config);
Json hadamard_report(const RunConfig &config);
Json calibrate_report(const RunConfig &config);

struct SweepPoint {
    double delta_bar_over_lambda;
    double t_lambda;
    double probability;
};

/// |g,0> -> |e,1> transfer under the anti-Jaynes-Cummings Hamiltonian at the
/// resonant split omega = omega0 = delta_bar / 2, delta_bar-major order.
std::vector<SweepPoint> sweep(const RunConfig &config);
std::string sweep_csv(const std::vector<SweepPoint> &points);

/// Full report text for the configured command.
std::string render(const RunConfig &config);

/// Renders and writes the report. Returns 0 on success, 2 for invalid
/// settings, 3 for physics errors, 4 for I/O errors; diagnostics go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace ajc
