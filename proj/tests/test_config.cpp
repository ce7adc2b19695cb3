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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "gatefid/commands.hpp"
#include "gatefid/config.hpp"
#include "gatefid/rational.hpp"
#include "gatefid/units.hpp"

using namespace gatefid;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/gatefid_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("unit parsing") {
    CHECK(parse_time("250 ns") == Catch::Approx(250e-9));
    CHECK(parse_time("1.5 us") == Catch::Approx(1.5e-6));
    CHECK(parse_time("0.05ms") == Catch::Approx(5e-5));
    CHECK(parse_time("2e-7 s") == Catch::Approx(2e-7));
    CHECK_THROWS_AS(parse_time("250"), ValidationError);  // unit mandatory
    CHECK_THROWS_AS(parse_time("fast"), ValidationError);

    CHECK(parse_rate("5398 /s") == Catch::Approx(5398.0));
    CHECK(parse_rate("0.02 /us") == Catch::Approx(2e4));
    CHECK(parse_rate("20 /ms") == Catch::Approx(2e4));
    CHECK(parse_rate("1 s^-1") == Catch::Approx(1.0));
    CHECK(parse_rate("3 kHz") == Catch::Approx(3e3));
    CHECK_THROWS_AS(parse_rate("5398"), ValidationError);

    CHECK(parse_angular_frequency("2pi*3.5 MHz") == Catch::Approx(2 * M_PI * 3.5e6));
    CHECK(parse_angular_frequency("3.5 MHz*2pi") == Catch::Approx(2 * M_PI * 3.5e6));
    CHECK(parse_angular_frequency("1.2e7 rad/s") == Catch::Approx(1.2e7));
    CHECK_THROWS_AS(parse_angular_frequency("3.5 MHz"), ValidationError);  // must be angular
    CHECK_THROWS_AS(parse_angular_frequency("2pi*1 rad/s"), ValidationError);
}

TEST_CASE("rational hints") {
    CHECK(rational_hint(0.5) == "1/2");
    CHECK(rational_hint(61.0 / 80.0) == "61/80");
    CHECK(rational_hint(6.0 / 29.0) == "6/29");
    CHECK(rational_hint(2.0) == "2");
    CHECK(rational_hint(0.5 + 1e-7) == "");           // outside the 1e-9 window
    CHECK(rational_hint(0.30628417) == "");           // no small-denominator match
    CHECK(rational_hint(1.0 / 1024.0) == "");         // denominator above 1000
    CHECK(rational_hint(-0.3625) == "-29/80");
}

TEST_CASE("matrix file round trip") {
    Matrix m(2, 2);
    m << Complex(1.0, -0.5), Complex(0.0, 2.25), Complex(-3.5, 0.0), Complex(0.125, 1e-14);
    const std::string path = "/tmp/gatefid_test_matrix.mat";
    save_matrix_file(path, m);
    const Matrix back = load_matrix_file(path);
    CHECK(max_abs(Matrix(m - back)) == 0.0);

    const std::string bad = write_temp("bad.mat", "dim 2\n1,0 2,0\n3,0\n");
    CHECK_THROWS_AS(load_matrix_file(bad), ValidationError);
    const std::string bad2 = write_temp("bad2.mat", "size 2\n");
    CHECK_THROWS_AS(load_matrix_file(bad2), ValidationError);
    std::remove(path.c_str());
}

TEST_CASE("config parsing and validation") {
    SECTION("full cz config resolves") {
        const std::string path = write_temp("cz.yaml",
                                            "gate:\n"
                                            "  name: cz\n"
                                            "  tau: 50 ns\n"
                                            "channels:\n"
                                            "  - {site: 1, kind: relaxation, rate: 20 /ms}\n"
                                            "  - {site: 2, kind: dephasing, rate: 1 kHz}\n"
                                            "options:\n"
                                            "  seed: 42\n"
                                            "  format: json\n");
        const AnalysisConfig config = load_config(path);
        CHECK(config.gate.name == "cz");
        CHECK(*config.gate.tau == Catch::Approx(50e-9));
        REQUIRE(config.channels.size() == 2);
        CHECK(config.channels[0].site == 0);
        CHECK(config.channels[1].site == 1);
        CHECK(config.channels[0].rate == Catch::Approx(2e4));
        CHECK(config.options.seed == 42);

        const GateModel model = build_model(config.gate);
        const auto channels = build_channels(model, config.channels);
        REQUIRE(channels.size() == 2);
        CHECK(channels[0].label == "Gamma1_q1");
        CHECK(channels[1].label == "Gammaphi_q2");
        CHECK(channels[1].rate_convention == 2.0);
    }

    SECTION("site out of range is a config error naming the range") {
        const std::string path = write_temp("bad_site.yaml",
                                            "gate: {name: cz, tau: 50 ns}\n"
                                            "channels:\n"
                                            "  - {site: 3, kind: relaxation, rate: 1 /s}\n");
        CHECK_THROWS_WITH(load_config(path), Catch::Matchers::ContainsSubstring("q2"));
    }

    SECTION("missing rate unit is a config error") {
        const std::string path = write_temp("no_unit.yaml",
                                            "gate: {name: cz, tau: 50 ns}\n"
                                            "channels:\n"
                                            "  - {site: 1, kind: relaxation, rate: 100}\n");
        CHECK_THROWS_AS(load_config(path), ValidationError);
    }

    SECTION("unknown gate name") {
        const std::string path = write_temp("bad_gate.yaml", "gate: {name: cnot, tau: 1 s}\n");
        const AnalysisConfig config = load_config(path);
        CHECK_THROWS_AS(build_model(config.gate), ValidationError);
    }

    SECTION("parallel gate spec") {
        const std::string path = write_temp("par.yaml",
                                            "gate:\n"
                                            "  name: parallel\n"
                                            "  of:\n"
                                            "    - {name: cz, tau: 100 ns}\n"
                                            "    - {name: idle, n: 2, tau: 100 ns}\n"
                                            "channels:\n"
                                            "  - {site: 4, kind: dephasing, rate: 1 /ms}\n");
        const AnalysisConfig config = load_config(path);
        const GateModel model = build_model(config.gate);
        CHECK(model.layout.full_dim() == 36);
        const auto channels = build_channels(model, config.channels);
        CHECK(channels[0].label == "Gammaphi_q4");
    }

    SECTION("explicit-matrix channel on a builtin gate") {
        Matrix jump = Matrix::Zero(9, 9);
        jump(0, 4) = 1.0;  // |00><11| on the two-qutrit space
        save_matrix_file("/tmp/gatefid_test_jump.mat", jump);
        const std::string path = write_temp("mat_channel.yaml",
                                            "gate: {name: cz, tau: 50 ns}\n"
                                            "channels:\n"
                                            "  - {matrix: /tmp/gatefid_test_jump.mat, "
                                            "rate: 1 /ms, convention: 0.5, label: pairdecay}\n");
        const AnalysisConfig config = load_config(path);
        const GateModel model = build_model(config.gate);
        const auto channels = build_channels(model, config.channels);
        REQUIRE(channels.size() == 1);
        CHECK(channels[0].label == "pairdecay");
        CHECK(channels[0].rate_convention == 0.5);
        CHECK(channels[0].rate == Catch::Approx(1e3));
        CHECK(channels[0].jump.data(0, 4) == Complex(1.0));
    }

    SECTION("custom gate from matrix files") {
        Matrix h = Matrix::Zero(2, 2);
        h(0, 1) = h(1, 0) = 1.0;
        save_matrix_file("/tmp/gatefid_test_h.mat", h);
        const std::string path = write_temp("custom.yaml",
                                            "gate:\n"
                                            "  name: custom\n"
                                            "  dims: [2]\n"
                                            "  segments:\n"
                                            "    - {hamiltonian: /tmp/gatefid_test_h.mat, "
                                            "duration: 1 s}\n");
        const AnalysisConfig config = load_config(path);
        const GateModel model = build_model(config.gate);
        CHECK(model.layout.full_dim() == 2);
        CHECK(model.schedule.segments().size() == 1);
    }

    SECTION("sweep grid expansion") {
        const std::string path = write_temp("sweep.yaml",
                                            "gate: {name: cz, tau: 1 us}\n"
                                            "channels:\n"
                                            "  - {site: 1, kind: relaxation, rate: 1 /s}\n"
                                            "sweep:\n"
                                            "  parameter: lambda_tau_over_pi\n"
                                            "  from: 0.8\n"
                                            "  to: 1.2\n"
                                            "  points: 41\n");
        const AnalysisConfig config = load_config(path);
        REQUIRE(config.sweep.has_value());
        CHECK(config.sweep->values.size() == 41);
        CHECK(config.sweep->values.front() == Catch::Approx(0.8));
        CHECK(config.sweep->values.back() == Catch::Approx(1.2));
    }
}

TEST_CASE("reports") {
    const std::string path = write_temp("report.yaml",
                                        "gate: {name: cz, tau: 50 ns}\n"
                                        "channels:\n"
                                        "  - {site: 1, kind: relaxation, rate: 20 /ms}\n");
    const AnalysisConfig config = load_config(path);

    SECTION("budget JSON round-trips and embeds the resolved config") {
        const CommandResult result = cmd_budget(config);
        CHECK(result.exit_code == 0);
        const std::string text = render_report(result.report, "json");
        const nlohmann::json parsed = nlohmann::json::parse(text);
        CHECK(parsed == result.report);
        CHECK(parsed["config"]["gate"]["tau_s"].get<double>() == Catch::Approx(50e-9));
        CHECK(parsed["config"]["options"]["seed"].get<std::uint64_t>() == 1);
        CHECK(parsed["budget"]["channels"][0]["coefficient_hint"] == "1/2");
        CHECK(parsed["budget"]["fidelity"].get<double>() == Catch::Approx(0.9995));
        CHECK(parsed["provenance"]["version"].is_string());
    }

    SECTION("text rendering uses '.' decimals and the csv renderer emits rows") {
        const CommandResult result = cmd_budget(config);
        const std::string text = render_report(result.report, "text");
        CHECK(text.find("0.9995") != std::string::npos);
        CHECK(text.find("0,9995") == std::string::npos);
        const std::string csv = render_report(result.report, "csv");
        CHECK(csv.find("label,site,kind") == 0);
        CHECK(csv.find("Gamma1_q1,1,relaxation") != std::string::npos);
    }

    SECTION("sweep report has one row per grid point") {
        AnalysisConfig swept = config;
        SweepSpec sweep;
        sweep.parameter = "lambda_tau_over_pi";
        sweep.values = {0.9, 1.0, 1.1};
        swept.sweep = sweep;
        const CommandResult result = cmd_sweep(swept);
        CHECK(result.report["sweep"]["rows"].size() == 3);
        // the lambda tau = pi row matches cmd_budget exactly
        const auto& row = result.report["sweep"]["rows"][1];
        CHECK(row["coefficients"]["Gamma1_q1"].get<double>() ==
              Catch::Approx(0.5).margin(1e-10));
        const std::string csv = render_report(result.report, "csv");
        CHECK(csv.find("lambda_tau_over_pi,") == 0);
    }
}
