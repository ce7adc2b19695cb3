// Copyright 2026 The gatefid developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <clocale>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gatefid/commands.hpp"
#include "gatefid/version.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> mc_samples;
    std::optional<double> tol;
};

void add_common(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("config", args.config_path, "YAML analysis config")->required();
    cmd->add_option("--out", args.out, "write the report to this path instead of stdout");
    cmd->add_option("--format", args.format, "text | json | csv");
    cmd->add_option("--seed", args.seed, "RNG seed for Monte Carlo runs");
    cmd->add_option("--mc-samples", args.mc_samples, "Haar Monte Carlo sample count");
    cmd->add_option("--tol", args.tol, "override quadrature and solver tolerances");
}

int emit(const gatefid::CommandResult& result, const gatefid::AnalysisConfig& config) {
    const std::string text = gatefid::render_report(result.report, config.options.format);
    if (config.options.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(config.options.out);
        if (!out) {
            std::cerr << "error: cannot write " << config.options.out << "\n";
            return gatefid::kExitConfig;
        }
        out << text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");

    CLI::App app{"gatefid: first-order gate-fidelity budgets under Markovian decoherence, "
                 "with an exact Lindblad oracle"};
    app.set_version_flag("--version", gatefid::kVersion);
    app.require_subcommand(1);

    CliArgs args;
    CLI::App* budget = app.add_subcommand("budget", "analytic first-order fidelity budget");
    CLI::App* oracle = app.add_subcommand("oracle", "exact master-equation fidelity");
    CLI::App* compare = app.add_subcommand("compare", "analytic vs oracle residuals");
    CLI::App* sweep = app.add_subcommand("sweep", "budget over a parameter grid");
    for (CLI::App* cmd : {budget, oracle, compare, sweep}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        gatefid::AnalysisConfig config = gatefid::load_config(args.config_path);
        if (!args.format.empty()) config.options.format = args.format;
        if (!args.out.empty()) config.options.out = args.out;
        if (args.seed) config.options.seed = *args.seed;
        if (args.mc_samples) config.options.mc_samples = *args.mc_samples;
        if (args.tol) {
            config.options.quad_tol = *args.tol;
            config.options.solver_tol = *args.tol;
        }
        if (const char* env = std::getenv("GATEFID_THREADS"))
            config.options.threads = std::max(1, std::atoi(env));

        gatefid::CommandResult result;
        if (budget->parsed()) result = gatefid::cmd_budget(config);
        else if (oracle->parsed()) result = gatefid::cmd_oracle(config);
        else if (compare->parsed()) result = gatefid::cmd_compare(config);
        else result = gatefid::cmd_sweep(config);
        return emit(result, config);
    } catch (const gatefid::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return gatefid::kExitConfig;
    } catch (const gatefid::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return gatefid::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gatefid::kExitNumerical;
    }
}
