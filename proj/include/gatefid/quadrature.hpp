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

#include <functional>

namespace gatefid {

enum class QuadratureMethod { adaptive_simpson, gauss_legendre };

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::adaptive_simpson;
    double abs_tol = 1e-10;
    int max_subdivisions = 100000;
    int gl_order = 20;
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Integrate f over [a, b] with the requested method. Adaptive Simpson refines until the
/// local error estimate meets abs_tol (throws NumericalError past
/// max_subdivisions); fixed Gauss-Legendre reports a node-doubling error
/// estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec);

}  // namespace gatefid
