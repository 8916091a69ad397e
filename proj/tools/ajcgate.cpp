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

#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ajc/reports.hpp"

using namespace ajc;

namespace {

struct Flags {
    std::optional<double> omega;
    std::optional<double> omega0;
    int n_max = 3;
    std::string output = "-";
    std::string format = "json";
};

void add_common(CLI::App *cmd, Flags &flags) {
    cmd->add_option("--omega", flags.omega, "field frequency in units of lambda");
    cmd->add_option("--omega0", flags.omega0, "atomic transition frequency in units of lambda");
    cmd->add_option("--n-max", flags.n_max, "photon cutoff per mode (inclusive)")->capture_default_str();
    cmd->add_option("-o,--output", flags.output, "report path, '-' for stdout")->capture_default_str();
    cmd->add_option("--format", flags.format, "json or csv (csv: sweep only)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Anti-Jaynes-Cummings gate simulator and verification reports"};
    app.require_subcommand(1);

    Flags flags;
    RunConfig config;

    auto *decompose = app.add_subcommand("decompose-check", "check H_R = (H_jc + H_ajc)/2 and number conservation");
    add_common(decompose, flags);

    auto *cnot = app.add_subcommand("cnot", "dual-rail C-NOT truth table");
    add_common(cnot, flags);
    std::map<std::string, Routing> routings{{"paper", Routing::paper}, {"AB", Routing::fixed_ab}, {"BA", Routing::fixed_ba}};
    std::map<std::string, Backend> backends{{"oracle", Backend::oracle}, {"closed-form", Backend::closed_form}};
    cnot->add_option("--routing", config.routing, "paper, AB or BA")->transform(CLI::CheckedTransformer(routings));
    cnot->add_option("--backend", config.backend, "oracle or closed-form")
        ->transform(CLI::CheckedTransformer(backends));
    std::string timing = "calibrated";
    cnot->add_option("--timing", timing, "calibrated or paper durations")
        ->check(CLI::IsMember({"calibrated", "paper"}))
        ->capture_default_str();

    auto *hadamard = app.add_subcommand("hadamard", "Hadamard operation at delta_bar = 4 lambda");
    add_common(hadamard, flags);
    std::map<std::string, Atom> atoms{{"g", Atom::g}, {"e", Atom::e}};
    hadamard->add_option("--initial", config.initial, "g or e")->transform(CLI::CheckedTransformer(atoms));
    std::map<std::string, HadamardMethod> methods{{"operator", HadamardMethod::operator_action},
                                                  {"timed", HadamardMethod::timed_evolution}};
    hadamard->add_option("--method", config.method, "operator or timed")->transform(CLI::CheckedTransformer(methods));

    auto *calibrate = app.add_subcommand("calibrate", "oracle pulse calibration for one doublet");
    add_common(calibrate, flags);
    calibrate->add_option("--entry", config.entry, "atom state on entry: g or e")
        ->transform(CLI::CheckedTransformer(atoms));
    calibrate->add_option("--n", config.photons, "photon number on entry")->capture_default_str();
    std::map<std::string, TransferObjective> objectives{{"full", TransferObjective::full},
                                                        {"half", TransferObjective::half}};
    calibrate->add_option("--objective", config.objective, "full or half")
        ->transform(CLI::CheckedTransformer(objectives));

    auto *sweep_cmd = app.add_subcommand("sweep", "transfer probability over a delta_bar x time grid");
    add_common(sweep_cmd, flags);
    sweep_cmd->add_option("--db-lo", config.delta_bar.lo, "delta_bar/lambda lower bound")->capture_default_str();
    sweep_cmd->add_option("--db-hi", config.delta_bar.hi, "delta_bar/lambda upper bound")->capture_default_str();
    sweep_cmd->add_option("--db-steps", config.delta_bar.steps, "delta_bar grid points")->capture_default_str();
    sweep_cmd->add_option("--t-lo", config.time.lo, "lambda t lower bound")->capture_default_str();
    sweep_cmd->add_option("--t-hi", config.time.hi, "lambda t upper bound")->capture_default_str();
    sweep_cmd->add_option("--t-steps", config.time.steps, "time grid points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Per-command defaults sit at each command's operating point.
    double default_omega = 1e-3, default_omega0 = 1e-3;
    if (*decompose) {
        config.command = Command::decompose_check;
        default_omega = 1.0;
        default_omega0 = 1.5;
    } else if (*cnot) {
        config.command = Command::cnot;
        config.calibrated = timing == "calibrated";
    } else if (*hadamard) {
        config.command = Command::hadamard;
        default_omega = 2.0;
        default_omega0 = 2.0;
    } else if (*calibrate) {
        config.command = Command::calibrate;
    } else {
        config.command = Command::sweep;
        flags.format = sweep_cmd->count("--format") ? flags.format : "csv";
    }
    config.omega = flags.omega.value_or(default_omega);
    config.omega0 = flags.omega0.value_or(default_omega0);
    config.n_max = flags.n_max;
    config.output_path = flags.output;
    config.output_format = flags.format == "csv" ? OutputFormat::csv : OutputFormat::json;

    return run(config, std::cout, std::cerr);
}
