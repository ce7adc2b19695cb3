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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gatefid/gates.hpp"

namespace gatefid {

struct CustomSegmentSpec {
    std::string hamiltonian_file;  // entries in rad/s
    double duration = 0.0;         // seconds
};

struct GateSpec {
    std::string name;

    // builtin parameters, already canonicalized to SI
    std::optional<double> lambda;  // rad/s
    std::optional<double> tau;     // s
    std::optional<double> omega;   // rad/s
    std::optional<double> delta_over_omega;
    std::optional<double> xi;      // rad
    std::optional<double> phi;     // rad
    std::optional<double> g;       // rad/s
    std::optional<double> lambda_tau_over_pi;
    int n_qubits = 0;

    std::vector<GateSpec> children;  // parallel

    // custom gate from matrix files
    std::vector<int> dims;
    std::vector<std::array<int, 2>> cmp_levels;
    std::vector<CustomSegmentSpec> segments;
    std::string target_file;  // empty: identity target
    std::optional<double> report_tau;
};

struct ChannelSpec {
    int site = -1;            // 0-based internally; 1-based (q1..qN) in config files
    std::string kind;         // template kind, or empty for an explicit matrix
    std::string matrix_file;
    double convention = 1.0;  // explicit-matrix channels only
    std::string label;
    double rate = 0.0;        // 1/s
};

struct SweepSpec {
    std::string parameter;        // lambda_tau_over_pi | phi | delta_over_omega | xi
    std::vector<double> values;
    bool with_oracle = false;
};

struct RunOptions {
    double quad_tol = 1e-10;
    double solver_tol = 1e-9;
    int mc_samples = 0;
    std::uint64_t seed = 1;
    std::vector<double> scales;
    std::string format = "text";  // text | json | csv
    std::string out;              // empty: stdout
    int threads = 1;
};

struct AnalysisConfig {
    GateSpec gate;
    std::vector<ChannelSpec> channels;
    RunOptions options;
    std::optional<SweepSpec> sweep;
};

/// Parse and validate a YAML config file. Throws ValidationError with the
/// offending location in the message.
AnalysisConfig load_config(const std::string& path);

/// Build the gate model a spec describes (recursing into parallel children).
GateModel build_model(const GateSpec& spec);

/// Resolve channel specs against a model's templates (or load explicit
/// matrices). Rates are already in 1/s.
std::vector<NoiseChannel> build_channels(const GateModel& model,
                                         const std::vector<ChannelSpec>& specs);

/// Matrix file format: first line "dim <n>", then n rows of n
/// whitespace-separated "re,im" pairs.
Matrix load_matrix_file(const std::string& path);
void save_matrix_file(const std::string& path, const Matrix& m);

/// Fully resolved echo of the configuration (defaults expanded, SI units),
/// embedded in every report so runs are reproducible from the report alone.
nlohmann::json config_echo(const AnalysisConfig& config);

}  // namespace gatefid
