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
#include <utility>

#include "gatefid/operators.hpp"

namespace gatefid {

/// A labeled Lindblad jump operator with its physical rate and the
/// convention multiplier between that rate and the dissipator prefactor
/// (1 for relaxation Gamma_1; 1/2 for sigma_z dephasing so coherences decay
/// at Gamma_phi; 2 for the transmon |1><1| + 2|2><2| dephasing operator).
/// Conventions are always explicit, never inferred from the operator.
struct NoiseChannel {
    NoiseChannel(std::string label_, OperatorMatrix jump_, double rate_,
                 double rate_convention_, int site_ = -1, std::string kind_ = {})
        : label(std::move(label_)),
          jump(std::move(jump_)),
          rate(rate_),
          rate_convention(rate_convention_),
          site(site_),
          kind(std::move(kind_)) {
        if (rate < 0.0) throw ValidationError("channel " + label + ": rate must be >= 0");
        if (rate_convention <= 0.0)
            throw ValidationError("channel " + label + ": rate convention must be > 0");
    }

    std::string label;
    OperatorMatrix jump;
    double rate;             // 1/s
    double rate_convention;  // dissipator prefactor = rate * rate_convention
    int site;                // subsystem bookkeeping, -1 if not applicable
    std::string kind;        // "relaxation" | "dephasing" | "rydberg_decay" | "custom"

    double effective_rate() const { return rate * rate_convention; }
};

}  // namespace gatefid
