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

#include <optional>
#include <string>
#include <utility>

namespace gatefid {

/// Nearest small-denominator rational, used only for report readability:
/// returns p/q with |x - p/q| <= tol and q <= max_den, or nothing.
std::optional<std::pair<long long, long long>> nearest_rational(double x,
                                                                long long max_den = 1000,
                                                                double tol = 1e-9);

/// "p/q" when a hint exists, empty string otherwise.
std::string rational_hint(double x, long long max_den = 1000, double tol = 1e-9);

}  // namespace gatefid
