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

#include "gatefid/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "gatefid/units.hpp"

namespace gatefid {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("config: " + where + ": " + what);
}

double number_or_unit(const YAML::Node& node, const std::string& where,
                      double (*parser)(const std::string&)) {
    if (!node) fail(where, "missing value");
    return parser(node.as<std::string>());
}

std::optional<double> opt_plain(const YAML::Node& node) {
    if (!node) return std::nullopt;
    return node.as<double>();
}

std::optional<double> opt_unit(const YAML::Node& node, const std::string& where,
                               double (*parser)(const std::string&)) {
    if (!node) return std::nullopt;
    return number_or_unit(node, where, parser);
}

GateSpec parse_gate(const YAML::Node& node, const std::string& where) {
    if (!node || !node.IsMap()) fail(where, "expected a mapping with a 'name'");
    GateSpec spec;
    spec.name = node["name"] ? node["name"].as<std::string>() : "";
    if (spec.name.empty()) fail(where, "gate name is required");

    spec.lambda = opt_unit(node["lambda"], where + ".lambda", parse_angular_frequency);
    spec.tau = opt_unit(node["tau"], where + ".tau", parse_time);
    spec.omega = opt_unit(node["omega"], where + ".omega", parse_angular_frequency);
    spec.delta_over_omega = opt_plain(node["delta_over_omega"]);
    spec.xi = opt_plain(node["xi"]);
    spec.phi = opt_plain(node["phi"]);
    spec.g = opt_unit(node["g"], where + ".g", parse_angular_frequency);
    spec.lambda_tau_over_pi = opt_plain(node["lambda_tau_over_pi"]);
    if (node["n"]) spec.n_qubits = node["n"].as<int>();
    spec.report_tau = opt_unit(node["report_tau"], where + ".report_tau", parse_time);

    if (node["of"]) {
        if (!node["of"].IsSequence()) fail(where + ".of", "expected a sequence of gates");
        int k = 0;
        for (const auto& child : node["of"])
            spec.children.push_back(parse_gate(child, where + ".of[" + std::to_string(k++) + "]"));
    }
    if (node["dims"]) {
        for (const auto& d : node["dims"]) spec.dims.push_back(d.as<int>());
        if (node["cmp_levels"])
            for (const auto& pair : node["cmp_levels"])
                spec.cmp_levels.push_back({pair[0].as<int>(), pair[1].as<int>()});
        if (!node["segments"] || !node["segments"].IsSequence())
            fail(where, "custom gate needs a 'segments' sequence");
        for (const auto& seg : node["segments"]) {
            CustomSegmentSpec s;
            if (!seg["hamiltonian"]) fail(where + ".segments", "missing 'hamiltonian' file");
            s.hamiltonian_file = seg["hamiltonian"].as<std::string>();
            s.duration = number_or_unit(seg["duration"], where + ".segments.duration", parse_time);
            spec.segments.push_back(std::move(s));
        }
        if (node["target"]) spec.target_file = node["target"].as<std::string>();
    }
    return spec;
}

int gate_subsystems(const GateSpec& spec) {
    if (spec.name == "cz" || spec.name == "iswap" || spec.name == "rydberg_cz") return 2;
    if (spec.name == "cczs") return 3;
    if (spec.name == "idle") return spec.n_qubits;
    if (spec.name == "custom") return static_cast<int>(spec.dims.size());
    if (spec.name == "parallel") {
        int n = 0;
        for (const auto& c : spec.children) n += gate_subsystems(c);
        return n;
    }
    return 0;
}

}  // namespace

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("matrix file: cannot open '" + path + "'");
    std::string keyword;
    Eigen::Index n = 0;
    in >> keyword >> n;
    if (keyword != "dim" || n <= 0)
        throw ValidationError("matrix file '" + path + "': first line must be 'dim <n>'");
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            std::string pair;
            if (!(in >> pair))
                throw ValidationError("matrix file '" + path + "': too few entries");
            const auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw ValidationError("matrix file '" + path + "': entry '" + pair +
                                      "' is not 're,im'");
            try {
                m(i, j) = Complex(std::stod(pair.substr(0, comma)),
                                  std::stod(pair.substr(comma + 1)));
            } catch (const std::exception&) {
                throw ValidationError("matrix file '" + path + "': bad number in '" + pair + "'");
            }
        }
    return m;
}

void save_matrix_file(const std::string& path, const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("save_matrix_file: matrix must be square");
    std::ofstream out(path);
    if (!out) throw ValidationError("matrix file: cannot write '" + path + "'");
    out << "dim " << m.rows() << "\n";
    out.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j).real() << "," << m(i, j).imag();
        out << "\n";
    }
}

AnalysisConfig load_config(const std::string& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::Exception& e) {
        throw ValidationError("config: cannot parse '" + path + "': " + e.what());
    }

    AnalysisConfig config;
    config.gate = parse_gate(root["gate"], "gate");

    const int n_sites = gate_subsystems(config.gate);
    if (root["channels"]) {
        if (!root["channels"].IsSequence()) fail("channels", "expected a sequence");
        int k = 0;
        for (const auto& ch : root["channels"]) {
            const std::string where = "channels[" + std::to_string(k++) + "]";
            ChannelSpec spec;
            if (ch["site"]) {
                const int site_1based = ch["site"].as<int>();
                if (site_1based < 1 || (n_sites > 0 && site_1based > n_sites))
                    fail(where, "site " + std::to_string(site_1based) +
                                    " out of range (subsystems are q1..q" +
                                    std::to_string(n_sites) + ")");
                spec.site = site_1based - 1;
            }
            if (ch["kind"]) spec.kind = ch["kind"].as<std::string>();
            if (ch["matrix"]) spec.matrix_file = ch["matrix"].as<std::string>();
            if (spec.kind.empty() && spec.matrix_file.empty())
                fail(where, "need either 'kind' or 'matrix'");
            if (!spec.kind.empty() && spec.site < 0) fail(where, "kind channels need a 'site'");
            if (ch["convention"]) spec.convention = ch["convention"].as<double>();
            if (ch["label"]) spec.label = ch["label"].as<std::string>();
            spec.rate = number_or_unit(ch["rate"], where + ".rate", parse_rate);
            if (spec.rate < 0) fail(where, "rate must be >= 0");
            config.channels.push_back(std::move(spec));
        }
    }

    if (const auto opts = root["options"]) {
        if (opts["quad_tol"]) config.options.quad_tol = opts["quad_tol"].as<double>();
        if (opts["solver_tol"]) config.options.solver_tol = opts["solver_tol"].as<double>();
        if (opts["mc_samples"]) config.options.mc_samples = opts["mc_samples"].as<int>();
        if (opts["seed"]) config.options.seed = opts["seed"].as<std::uint64_t>();
        if (opts["scales"])
            for (const auto& s : opts["scales"])
                config.options.scales.push_back(s.as<double>());
        if (opts["format"]) config.options.format = opts["format"].as<std::string>();
        if (opts["out"]) config.options.out = opts["out"].as<std::string>();
        if (opts["threads"]) config.options.threads = opts["threads"].as<int>();
    }
    if (config.options.format != "text" && config.options.format != "json" &&
        config.options.format != "csv")
        fail("options.format", "must be text, json, or csv");

    if (const auto sweep = root["sweep"]) {
        SweepSpec s;
        if (!sweep["parameter"]) fail("sweep", "missing 'parameter'");
        s.parameter = sweep["parameter"].as<std::string>();
        if (sweep["values"]) {
            for (const auto& v : sweep["values"]) s.values.push_back(v.as<double>());
        } else {
            if (!sweep["from"] || !sweep["to"] || !sweep["points"])
                fail("sweep", "need 'values' or 'from'/'to'/'points'");
            const double from = sweep["from"].as<double>();
            const double to = sweep["to"].as<double>();
            const int points = sweep["points"].as<int>();
            if (points < 2) fail("sweep", "points must be >= 2");
            for (int i = 0; i < points; ++i)
                s.values.push_back(from + (to - from) * i / (points - 1));
        }
        if (sweep["oracle"]) s.with_oracle = sweep["oracle"].as<bool>();
        config.sweep = std::move(s);
    }
    return config;
}

GateModel build_model(const GateSpec& spec) {
    if (spec.name == "cz") {
        if (!spec.tau) throw ValidationError("gate cz: 'tau' is required");
        double lambda = M_PI / *spec.tau;
        if (spec.lambda_tau_over_pi) lambda *= *spec.lambda_tau_over_pi;
        if (spec.lambda) lambda = *spec.lambda;
        return transmon_cz(lambda, *spec.tau);
    }
    if (spec.name == "rydberg_cz") {
        if (!spec.omega) throw ValidationError("gate rydberg_cz: 'omega' is required");
        const double delta = spec.delta_over_omega.value_or(0.377371) * *spec.omega;
        return rydberg_cz(*spec.omega, delta, spec.xi.value_or(3.90242));
    }
    if (spec.name == "cczs") {
        double lambda = 0.0;
        if (spec.lambda) lambda = *spec.lambda;
        else if (spec.tau) lambda = M_PI / (std::sqrt(2.0) * *spec.tau);
        else throw ValidationError("gate cczs: need 'lambda' or 'tau'");
        return cczs(lambda, spec.phi.value_or(0.0));
    }
    if (spec.name == "iswap") {
        if (!spec.tau) throw ValidationError("gate iswap: 'tau' is required");
        const double g = spec.g.value_or(M_PI / (2.0 * *spec.tau));
        return iswap(g, *spec.tau);
    }
    if (spec.name == "idle") {
        if (spec.n_qubits < 1) throw ValidationError("gate idle: 'n' is required");
        if (!spec.tau) throw ValidationError("gate idle: 'tau' is required");
        return idle(spec.n_qubits, *spec.tau);
    }
    if (spec.name == "parallel") {
        if (spec.children.empty()) throw ValidationError("gate parallel: 'of' list is required");
        std::vector<GateModel> parts;
        parts.reserve(spec.children.size());
        for (const auto& c : spec.children) parts.push_back(build_model(c));
        return parallel(parts);
    }
    if (spec.name == "custom") {
        if (spec.dims.empty() || spec.segments.empty())
            throw ValidationError("gate custom: 'dims' and 'segments' are required");
        auto layout = SystemLayout::compose(spec.dims, spec.cmp_levels);
        std::vector<Segment> segments;
        for (const auto& s : spec.segments)
            segments.push_back({load_matrix_file(s.hamiltonian_file), s.duration});
        Matrix target = spec.target_file.empty()
                            ? Matrix(Matrix::Identity(layout.full_dim(), layout.full_dim()))
                            : load_matrix_file(spec.target_file);
        GateModel model{"custom", layout,
                        HamiltonianSchedule(layout, std::move(segments), std::move(target),
                                            PhaseConvention::exact,
                                            spec.report_tau.value_or(-1.0)),
                        {}};
        return model;
    }
    throw ValidationError("gate: unknown name '" + spec.name + "' (builtins: cz, rydberg_cz, "
                          "cczs, iswap, idle, parallel, custom)");
}

std::vector<NoiseChannel> build_channels(const GateModel& model,
                                         const std::vector<ChannelSpec>& specs) {
    std::vector<NoiseChannel> out;
    for (const auto& spec : specs) {
        if (!spec.matrix_file.empty()) {
            Matrix jump = load_matrix_file(spec.matrix_file);
            const std::string label =
                spec.label.empty() ? "custom:" + spec.matrix_file : spec.label;
            out.emplace_back(label, OperatorMatrix(model.layout, std::move(jump)), spec.rate,
                             spec.convention, spec.site, "custom");
            continue;
        }
        if (spec.site < 0 || spec.site >= model.layout.num_subsystems())
            throw ValidationError("channel: site out of range for this gate");
        out.push_back(model.make_channel(spec.kind, spec.site, spec.rate));
    }
    return out;
}

nlohmann::json config_echo(const AnalysisConfig& config) {
    using nlohmann::json;
    std::function<json(const GateSpec&)> gate_json = [&](const GateSpec& g) {
        json j;
        j["name"] = g.name;
        if (g.lambda) j["lambda_rad_per_s"] = *g.lambda;
        if (g.tau) j["tau_s"] = *g.tau;
        if (g.omega) j["omega_rad_per_s"] = *g.omega;
        if (g.delta_over_omega) j["delta_over_omega"] = *g.delta_over_omega;
        if (g.xi) j["xi_rad"] = *g.xi;
        if (g.phi) j["phi_rad"] = *g.phi;
        if (g.g) j["g_rad_per_s"] = *g.g;
        if (g.lambda_tau_over_pi) j["lambda_tau_over_pi"] = *g.lambda_tau_over_pi;
        if (g.n_qubits) j["n"] = g.n_qubits;
        if (g.report_tau) j["report_tau_s"] = *g.report_tau;
        if (!g.dims.empty()) j["dims"] = g.dims;
        if (!g.target_file.empty()) j["target"] = g.target_file;
        for (const auto& s : g.segments)
            j["segments"].push_back({{"hamiltonian", s.hamiltonian_file},
                                     {"duration_s", s.duration}});
        for (const auto& c : g.children) j["of"].push_back(gate_json(c));
        return j;
    };

    json j;
    j["gate"] = gate_json(config.gate);
    j["channels"] = json::array();
    for (const auto& ch : config.channels) {
        json c;
        c["site"] = ch.site + 1;
        if (!ch.kind.empty()) c["kind"] = ch.kind;
        if (!ch.matrix_file.empty()) {
            c["matrix"] = ch.matrix_file;
            c["convention"] = ch.convention;
        }
        if (!ch.label.empty()) c["label"] = ch.label;
        c["rate_per_s"] = ch.rate;
        j["channels"].push_back(std::move(c));
    }
    j["options"] = {{"quad_tol", config.options.quad_tol},
                    {"solver_tol", config.options.solver_tol},
                    {"mc_samples", config.options.mc_samples},
                    {"seed", config.options.seed},
                    {"scales", config.options.scales},
                    {"format", config.options.format},
                    {"threads", config.options.threads}};
    if (config.sweep) {
        j["sweep"] = {{"parameter", config.sweep->parameter},
                      {"values", config.sweep->values},
                      {"oracle", config.sweep->with_oracle}};
    }
    return j;
}

}  // namespace gatefid
