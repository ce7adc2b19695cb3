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

#include "gatefid/commands.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "gatefid/rational.hpp"
#include "gatefid/tomography.hpp"
#include "gatefid/version.hpp"

namespace gatefid {

namespace {

using nlohmann::json;

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json provenance(const AnalysisConfig& config, const Stopwatch& watch) {
    return {{"version", kVersion},
            {"seed", config.options.seed},
            {"rng", "mt19937_64/box-muller"},
            {"tolerances",
             {{"quad_tol", config.options.quad_tol}, {"solver_tol", config.options.solver_tol}}},
            {"threads", config.options.threads},
            {"wall_time_s", watch.seconds()}};
}

json budget_json(const FidelityBudget& budget) {
    json rows = json::array();
    for (const auto& e : budget.entries) {
        json row = {{"label", e.label},
                    {"kind", e.kind},
                    {"site", e.site + 1},
                    {"rate_per_s", e.rate},
                    {"convention", e.convention},
                    {"coefficient", e.coefficient},
                    {"contribution", e.contribution}};
        const std::string hint = rational_hint(e.coefficient);
        if (!hint.empty()) row["coefficient_hint"] = hint;
        row["gamma_tau"] = e.rate * budget.tau;
        rows.push_back(std::move(row));
    }
    json j = {{"tau_s", budget.tau},
              {"channels", std::move(rows)},
              {"fidelity", budget.total},
              {"one_minus_fidelity", 1.0 - budget.total},
              {"quadrature_error_estimate", budget.quadrature_error_estimate}};
    const std::string hint = rational_hint(1.0 - budget.total);
    if (!hint.empty()) j["one_minus_fidelity_hint"] = hint;
    if (!budget.warnings.empty()) j["warnings"] = budget.warnings;
    return j;
}

QuadratureSpec quad_spec(const AnalysisConfig& config) {
    QuadratureSpec q;
    q.abs_tol = config.options.quad_tol;
    return q;
}

SolverOptions solver_options(const AnalysisConfig& config) {
    SolverOptions s;
    s.tolerance = config.options.solver_tol;
    return s;
}

struct Prepared {
    GateModel model;
    std::vector<NoiseChannel> channels;
};

Prepared prepare(const AnalysisConfig& config) {
    GateModel model = build_model(config.gate);
    std::vector<NoiseChannel> channels = build_channels(model, config.channels);
    return {std::move(model), std::move(channels)};
}

json oracle_json(const AnalysisConfig& config, const GateModel& model,
                 const std::vector<NoiseChannel>& channels) {
    const ChannelTomogram tomogram = channel_tomography(
        model.schedule, channels, solver_options(config), config.options.threads);
    json j;
    j["fidelity"] = haar_average_fidelity(tomogram, model.ideal_gate());
    if (config.options.mc_samples > 0) {
        const McFidelityResult mc = haar_mc_fidelity(tomogram, model.ideal_gate(),
                                                     config.options.mc_samples,
                                                     config.options.seed);
        j["mc"] = {{"estimate", mc.estimate},
                   {"std_error", mc.std_error},
                   {"n_samples", mc.n_samples},
                   {"seed", mc.seed},
                   {"rng", mc.rng}};
    }
    return j;
}

}  // namespace

CommandResult cmd_budget(const AnalysisConfig& config) {
    Stopwatch watch;
    const Prepared p = prepare(config);
    const FidelityBudget budget =
        assemble_budget(p.model.schedule, p.channels, quad_spec(config));
    json report = {{"command", "budget"},
                   {"gate", p.model.name},
                   {"config", config_echo(config)},
                   {"budget", budget_json(budget)}};
    report["provenance"] = provenance(config, watch);
    return {kExitOk, std::move(report)};
}

CommandResult cmd_oracle(const AnalysisConfig& config) {
    Stopwatch watch;
    const Prepared p = prepare(config);
    json report = {{"command", "oracle"},
                   {"gate", p.model.name},
                   {"config", config_echo(config)},
                   {"oracle", oracle_json(config, p.model, p.channels)}};
    report["provenance"] = provenance(config, watch);
    return {kExitOk, std::move(report)};
}

CommandResult cmd_compare(const AnalysisConfig& config) {
    Stopwatch watch;
    const Prepared p = prepare(config);
    const FidelityBudget budget =
        assemble_budget(p.model.schedule, p.channels, quad_spec(config));
    json oracle = oracle_json(config, p.model, p.channels);

    json report = {{"command", "compare"},
                   {"gate", p.model.name},
                   {"config", config_echo(config)},
                   {"budget", budget_json(budget)},
                   {"oracle", oracle}};
    const double residual = oracle["fidelity"].get<double>() - budget.total;
    report["compare"] = {{"residual", residual}, {"abs_residual", std::abs(residual)}};

    int exit_code = kExitOk;
    if (!config.options.scales.empty()) {
        const ScalingResult scaling = residual_scaling_check(
            p.model.schedule, p.channels, p.model.ideal_gate(), config.options.scales,
            solver_options(config), quad_spec(config), 1e-10, config.options.threads);
        report["compare"]["scaling"] = {{"scales", scaling.scales},
                                        {"residuals", scaling.residuals},
                                        {"inconclusive", scaling.inconclusive}};
        if (scaling.inconclusive)
            exit_code = kExitInconclusive;
        else
            report["compare"]["scaling"]["slope"] = scaling.slope;
    }
    report["provenance"] = provenance(config, watch);
    return {exit_code, std::move(report)};
}

CommandResult cmd_sweep(const AnalysisConfig& config) {
    Stopwatch watch;
    if (!config.sweep) throw ValidationError("sweep: config has no 'sweep' section");
    const SweepSpec& sweep = *config.sweep;

    json rows = json::array();
    std::vector<std::string> channel_labels;
    for (double value : sweep.values) {
        AnalysisConfig point = config;
        GateSpec& g = point.gate;
        if (sweep.parameter == "lambda_tau_over_pi") {
            g.lambda_tau_over_pi = value;
            g.lambda.reset();
        } else if (sweep.parameter == "phi") {
            g.phi = value;
        } else if (sweep.parameter == "delta_over_omega") {
            g.delta_over_omega = value;
        } else if (sweep.parameter == "xi") {
            g.xi = value;
        } else {
            throw ValidationError("sweep: unsupported parameter '" + sweep.parameter +
                                  "' (use lambda_tau_over_pi, phi, delta_over_omega, xi)");
        }
        const Prepared p = prepare(point);
        const FidelityBudget budget =
            assemble_budget(p.model.schedule, p.channels, quad_spec(point));
        json row;
        row[sweep.parameter] = value;
        json coeffs;
        channel_labels.clear();
        for (const auto& e : budget.entries) {
            coeffs[e.label] = e.coefficient;
            channel_labels.push_back(e.label);
        }
        row["coefficients"] = std::move(coeffs);
        row["fidelity_analytic"] = budget.total;
        if (sweep.with_oracle) {
            const ChannelTomogram tomogram = channel_tomography(
                p.model.schedule, p.channels, solver_options(point), point.options.threads);
            row["fidelity_oracle"] = haar_average_fidelity(tomogram, p.model.ideal_gate());
        }
        rows.push_back(std::move(row));
    }

    json report = {{"command", "sweep"},
                   {"gate", config.gate.name},
                   {"config", config_echo(config)},
                   {"sweep", {{"parameter", sweep.parameter},
                              {"channel_labels", channel_labels},
                              {"rows", std::move(rows)}}}};
    report["provenance"] = provenance(config, watch);
    return {kExitOk, std::move(report)};
}

namespace {

void render_budget_text(std::ostringstream& out, const json& b) {
    out << "  tau = " << fmt(b["tau_s"].get<double>()) << " s\n";
    out << "  channel        site  rate(1/s)       coefficient        contribution\n";
    for (const auto& row : b["channels"]) {
        char line[160];
        std::string label = row["label"].get<std::string>();
        std::string hint;
        if (row.contains("coefficient_hint"))
            hint = "  (~ " + row["coefficient_hint"].get<std::string>() + ")";
        std::snprintf(line, sizeof(line), "  %-14s %3d  %-14.8g  %-16.12g %-16.12g%s\n",
                      label.c_str(), row["site"].get<int>(), row["rate_per_s"].get<double>(),
                      row["coefficient"].get<double>(), row["contribution"].get<double>(),
                      hint.c_str());
        out << line;
    }
    out << "  F (analytic, first order) = " << fmt(b["fidelity"].get<double>());
    out << "   [1-F = " << fmt(b["one_minus_fidelity"].get<double>());
    if (b.contains("one_minus_fidelity_hint"))
        out << " ~ " << b["one_minus_fidelity_hint"].get<std::string>();
    out << "]\n";
    if (b.contains("warnings"))
        for (const auto& w : b["warnings"]) out << "  warning: " << w.get<std::string>() << "\n";
}

std::string render_text(const json& report) {
    std::ostringstream out;
    out << "gatefid " << report["command"].get<std::string>() << " — gate "
        << report["gate"].get<std::string>() << "\n";
    if (report.contains("budget")) {
        out << "first-order budget:\n";
        render_budget_text(out, report["budget"]);
    }
    if (report.contains("oracle")) {
        out << "oracle (Lindblad, two-design average):\n";
        out << "  F = " << fmt(report["oracle"]["fidelity"].get<double>()) << "\n";
        if (report["oracle"].contains("mc")) {
            const auto& mc = report["oracle"]["mc"];
            out << "  MC  F = " << fmt(mc["estimate"].get<double>()) << " +- "
                << fmt(mc["std_error"].get<double>()) << "  (n = " << mc["n_samples"]
                << ", seed = " << mc["seed"] << ", " << mc["rng"].get<std::string>() << ")\n";
        }
    }
    if (report.contains("compare")) {
        const auto& c = report["compare"];
        out << "compare:\n  oracle - analytic = " << fmt(c["residual"].get<double>()) << "\n";
        if (c.contains("scaling")) {
            const auto& s = c["scaling"];
            out << "  scaling residuals:";
            for (const auto& r : s["residuals"]) out << " " << fmt(r.get<double>());
            if (s["inconclusive"].get<bool>())
                out << "\n  scaling: inconclusive (residuals at solver noise floor)\n";
            else
                out << "\n  scaling slope = " << fmt(s["slope"].get<double>()) << "\n";
        }
    }
    if (report.contains("sweep")) {
        const auto& s = report["sweep"];
        out << "sweep over " << s["parameter"].get<std::string>() << ":\n";
        out << "  " << s["parameter"].get<std::string>();
        for (const auto& l : s["channel_labels"]) out << "  c[" << l.get<std::string>() << "]";
        out << "  F_analytic";
        if (!s["rows"].empty() && s["rows"][0].contains("fidelity_oracle")) out << "  F_oracle";
        out << "\n";
        for (const auto& row : s["rows"]) {
            out << "  " << fmt(row[s["parameter"].get<std::string>()].get<double>());
            for (const auto& l : s["channel_labels"])
                out << "  " << fmt(row["coefficients"][l.get<std::string>()].get<double>());
            out << "  " << fmt(row["fidelity_analytic"].get<double>());
            if (row.contains("fidelity_oracle"))
                out << "  " << fmt(row["fidelity_oracle"].get<double>());
            out << "\n";
        }
    }
    const auto& p = report["provenance"];
    out << "(v" << p["version"].get<std::string>() << ", wall "
        << fmt(p["wall_time_s"].get<double>()) << " s)\n";
    return out.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const json& report) {
    std::ostringstream out;
    if (report.contains("sweep")) {
        const auto& s = report["sweep"];
        const std::string param = s["parameter"].get<std::string>();
        out << param;
        for (const auto& l : s["channel_labels"])
            out << ",c_" << csv_escape(l.get<std::string>());
        out << ",fidelity_analytic";
        const bool oracle = !s["rows"].empty() && s["rows"][0].contains("fidelity_oracle");
        if (oracle) out << ",fidelity_oracle";
        out << "\n";
        for (const auto& row : s["rows"]) {
            out << fmt(row[param].get<double>());
            for (const auto& l : s["channel_labels"])
                out << "," << fmt(row["coefficients"][l.get<std::string>()].get<double>());
            out << "," << fmt(row["fidelity_analytic"].get<double>());
            if (oracle) out << "," << fmt(row["fidelity_oracle"].get<double>());
            out << "\n";
        }
        return out.str();
    }
    if (report.contains("budget")) {
        out << "label,site,kind,rate_per_s,convention,coefficient,contribution\n";
        for (const auto& row : report["budget"]["channels"]) {
            out << csv_escape(row["label"].get<std::string>()) << ","
                << row["site"].get<int>() << "," << csv_escape(row["kind"].get<std::string>())
                << "," << fmt(row["rate_per_s"].get<double>()) << ","
                << fmt(row["convention"].get<double>()) << ","
                << fmt(row["coefficient"].get<double>()) << ","
                << fmt(row["contribution"].get<double>()) << "\n";
        }
        out << "total_fidelity," << fmt(report["budget"]["fidelity"].get<double>()) << "\n";
        if (report.contains("oracle"))
            out << "oracle_fidelity," << fmt(report["oracle"]["fidelity"].get<double>()) << "\n";
        return out.str();
    }
    if (report.contains("oracle")) {
        out << "key,value\noracle_fidelity,"
            << fmt(report["oracle"]["fidelity"].get<double>()) << "\n";
        return out.str();
    }
    return out.str();
}

}  // namespace

std::string render_report(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "csv") return render_csv(report);
    if (format == "text") return render_text(report);
    throw ValidationError("render: unknown format '" + format + "'");
}

}  // namespace gatefid
