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

#include "gatefid/core.hpp"
#include "gatefid/layout.hpp"
#include "gatefid/operators.hpp"

namespace gatefid {

/// One piecewise-constant Hamiltonian segment. The generator is in angular
/// frequency units (rad/s), duration in seconds.
struct Segment {
    Matrix generator;
    double duration;
};

/// How a gate model wants to be compared against its target unitary.
enum class PhaseConvention { exact, global_phase };

/// Ordered piecewise-constant Hamiltonian schedule with the ideal target
/// gate it is meant to realize. Generators must be Hermitian (checked to
/// 1e-12) and the target unitary (checked to 1e-10).
///
/// report_tau is the time unit used when quoting budget coefficients
/// (F = 1 - sum c_k Gamma_k * report_tau); it defaults to the total
/// duration but may differ, e.g. a two-pulse protocol quoted per pulse.
class HamiltonianSchedule {
  public:
    HamiltonianSchedule(SystemLayout layout, std::vector<Segment> segments,
                        Matrix target_gate,
                        PhaseConvention convention = PhaseConvention::exact,
                        double report_tau = -1.0);

    const SystemLayout& layout() const { return layout_; }
    const std::vector<Segment>& segments() const { return segments_; }
    double tau_total() const { return tau_total_; }
    double report_tau() const { return report_tau_; }
    const Matrix& target_gate() const { return target_gate_; }
    PhaseConvention phase_convention() const { return convention_; }

  private:
    SystemLayout layout_;
    std::vector<Segment> segments_;
    Matrix target_gate_;
    PhaseConvention convention_;
    double tau_total_ = 0.0;
    double report_tau_ = 0.0;
};

/// Per-segment eigendecompositions, computed once; propagator evaluation is
/// then O(full_dim^2) matrix work per call. Immutable after construction.
class PropagatorCache {
  public:
    explicit PropagatorCache(const HamiltonianSchedule& schedule);

    const HamiltonianSchedule& schedule() const { return *schedule_; }

    /// U(t) = exp(-i H_k dt_k) ... exp(-i H_1 t_1), 0 <= t <= tau_total.
    Matrix propagator_at(double t) const;

    /// Heisenberg-evolved jump operator U(t)^dag L U(t).
    Matrix heisenberg_jump(const Matrix& jump, double t) const;

    /// Largest |eigenvalue| over all segment generators (rad/s).
    double max_generator_norm() const { return max_norm_; }

  private:
    const HamiltonianSchedule* schedule_;
    struct SegmentEigen {
        Eigen::VectorXd eigenvalues;
        Matrix eigenvectors;
        Matrix start_unitary;  // U at the segment's start time
        double t_begin;
        double t_end;
    };
    std::vector<SegmentEigen> segs_;
    double max_norm_ = 0.0;
};

/// exp(-i H t) for Hermitian H via eigendecomposition.
Matrix expm_hermitian(const Matrix& hamiltonian, double t);

/// Max deviation of the realized cmp-block propagator at tau_total from the
/// target gate, after quotienting exactly the declared phase convention.
double ideal_gate_check(const HamiltonianSchedule& schedule);
double ideal_gate_check(const PropagatorCache& cache);

}  // namespace gatefid
