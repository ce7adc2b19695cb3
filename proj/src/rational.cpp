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

#include "gatefid/rational.hpp"

#include <cmath>

namespace gatefid {

std::optional<std::pair<long long, long long>> nearest_rational(double x, long long max_den,
                                                                double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double sign = x < 0 ? -1.0 : 1.0;
    double v = std::abs(x);

    // continued-fraction convergents
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        const double floor_part = std::floor(frac);
        if (floor_part > 2e18) break;
        const long long a = static_cast<long long>(floor_part);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(v - static_cast<double>(p1) / q1) <= tol) {
            return std::make_pair(static_cast<long long>(sign * p1), q1);
        }
        const double rem = frac - floor_part;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    return std::nullopt;
}

std::string rational_hint(double x, long long max_den, double tol) {
    const auto r = nearest_rational(x, max_den, tol);
    if (!r) return "";
    if (r->second == 1) return std::to_string(r->first);
    return std::to_string(r->first) + "/" + std::to_string(r->second);
}

}  // namespace gatefid
