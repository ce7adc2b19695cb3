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

#include <cstdint>
#include <vector>

#include "gatefid/budget.hpp"
#include "gatefid/lindblad.hpp"

namespace gatefid {

/// Linear extension of the channel over the computational-basis dyads:
/// maps[a*d + b] = E(|a><b|) on the full space. Complete by construction.
class ChannelTomogram {
  public:
    ChannelTomogram(SystemLayout layout, std::vector<Matrix> maps);

    const SystemLayout& layout() const { return layout_; }
    Eigen::Index d() const { return layout_.cmp_dim(); }
    const Matrix& at(Eigen::Index a, Eigen::Index b) const { return maps_[a * d() + b]; }

  private:
    SystemLayout layout_;
    std::vector<Matrix> maps_;
};

/// d^2 master-equation solves over Hermitian dyad combinations
/// (|i><j|+|j><i|)/2 and the antisymmetric partner, recombined by linearity.
/// The Richardson self-check runs on the first solve only; the remaining
/// dyads share the same generator and step size. Solves are distributed
/// over n_threads; results land in index order regardless of thread count.
ChannelTomogram channel_tomography(const HamiltonianSchedule& schedule,
                                   const std::vector<NoiseChannel>& channels,
                                   const SolverOptions& opts = {}, int n_threads = 1);

/// Haar-averaged gate fidelity via the exact second-moment identity:
/// with E'(X) = P U_g^dag E(X) U_g P,
///   F = [sum_{i,k} <k|E'(|i><i|)|k> + sum_{i,j} <i|E'(|i><j|)|j>] / (d(d+1)).
/// Valid with or without leakage (no trace-preservation assumption on the
/// subspace-restricted channel).
double haar_average_fidelity(const ChannelTomogram& tomogram, const Matrix& ideal_gate);

struct McFidelityResult {
    double estimate;
    double std_error;
    int n_samples;
    std::uint64_t seed;
    std::string rng;  // algorithm name, recorded in reports
};

/// Monte Carlo over Haar-random computational-subspace states (normalized
/// complex Gaussian vectors). E(psi psi) is assembled from the tomogram by
/// linearity of the master equation, which the RK4 scheme preserves exactly,
/// so this equals per-state integration up to roundoff.
McFidelityResult haar_mc_fidelity(const ChannelTomogram& tomogram, const Matrix& ideal_gate,
                                  int n_samples, std::uint64_t seed);
McFidelityResult haar_mc_fidelity(const HamiltonianSchedule& schedule,
                                  const std::vector<NoiseChannel>& channels,
                                  const Matrix& ideal_gate, int n_samples, std::uint64_t seed,
                                  const SolverOptions& opts = {});

struct ScalingResult {
    double slope = 0.0;
    bool inconclusive = false;
    std::vector<double> scales;
    std::vector<double> residuals;  // |F_oracle - F_analytic| per scale
};

/// Fit log|F_oracle - F_analytic| against log(scale) for rate multipliers.
/// Residuals at or below the solver noise floor flag the result
/// inconclusive instead of fabricating a slope. A negative noise_floor means
/// 10x the solver tolerance.
ScalingResult residual_scaling_check(const HamiltonianSchedule& schedule,
                                     const std::vector<NoiseChannel>& channels,
                                     const Matrix& ideal_gate, const std::vector<double>& scales,
                                     const SolverOptions& opts = {},
                                     const QuadratureSpec& quad = {},
                                     double noise_floor = -1.0, int n_threads = 1);

}  // namespace gatefid
