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

#include <vector>

#include "gatefid/noise.hpp"
#include "gatefid/schedule.hpp"

namespace gatefid {

/// A physical state: Hermitian (1e-10), unit trace (1e-10), positive
/// semidefinite down to a -1e-10 eigenvalue floor. Checked at construction.
class DensityMatrix {
  public:
    DensityMatrix(SystemLayout layout, Matrix data);

    const SystemLayout& layout() const { return layout_; }
    const Matrix& data() const { return data_; }

    static DensityMatrix pure(const SystemLayout& layout, const Vector& state);

    /// Solver output: Hermiticity/trace checked to 1e-9, eigenvalue floor
    /// -1e-8 (integration drifts positivity slightly below the construction
    /// tolerances).
    static DensityMatrix from_evolution(const SystemLayout& layout, Matrix data);

  private:
    struct Unchecked {};
    DensityMatrix(SystemLayout layout, Matrix data, Unchecked)
        : layout_(std::move(layout)), data_(std::move(data)) {}

    SystemLayout layout_;
    Matrix data_;
};

struct SolverOptions {
    double tolerance = 1e-9;        // Richardson self-check threshold
    double max_phase_step = 0.05;   // ||H|| * h bound on the base step
    double max_rate_step = 1e-3;    // Gamma_eff * h bound on the base step
    int min_steps_per_segment = 16;
    bool self_check = true;         // step-double until the estimate meets tolerance
};

/// Integrate d rho/dt = -i[H, rho] + sum_k Gamma_k conv_k D[L_k] rho with
/// fixed-step RK4 through the whole schedule. Trace and Hermiticity are
/// preserved by the scheme up to roundoff; positivity only approximately.
/// Works on any Hermitian input (tomography feeds dyad combinations).
///
/// With self_check set, the base step (from the phase/rate bounds) is halved
/// until the Richardson error estimate |rho_h - rho_{h/2}|/15 meets the
/// tolerance; a positive step_multiplier instead runs at exactly that
/// refinement of the base step with no check (used to reuse a calibration).
Matrix lindblad_propagate(const Matrix& rho0, const HamiltonianSchedule& schedule,
                          const std::vector<NoiseChannel>& channels, const SolverOptions& opts,
                          long step_multiplier = 0);

/// Step-multiplier that meets opts.tolerance for this schedule and channel
/// set, measured on a probe state.
long lindblad_calibrate_steps(const Matrix& probe, const HamiltonianSchedule& schedule,
                              const std::vector<NoiseChannel>& channels,
                              const SolverOptions& opts);

/// Validated front end: checks the input is a physical state and that the
/// output preserves Hermiticity and trace to 1e-9.
DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const HamiltonianSchedule& schedule,
                              const std::vector<NoiseChannel>& channels,
                              const SolverOptions& opts = {});

}  // namespace gatefid
