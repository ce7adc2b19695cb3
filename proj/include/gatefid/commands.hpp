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

#include <string>

#include <nlohmann/json.hpp>

#include "gatefid/config.hpp"

namespace gatefid {

// Exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 inconclusive scaling check.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitInconclusive = 4;

struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::json report;
};

CommandResult cmd_budget(const AnalysisConfig& config);
CommandResult cmd_oracle(const AnalysisConfig& config);
CommandResult cmd_compare(const AnalysisConfig& config);
CommandResult cmd_sweep(const AnalysisConfig& config);

/// Render a report in "text", "json", or "csv". Decimal points are always
/// '.', independent of locale.
std::string render_report(const nlohmann::json& report, const std::string& format);

}  // namespace gatefid
