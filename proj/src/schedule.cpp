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

#include "gatefid/schedule.hpp"

#include <algorithm>

namespace gatefid {

HamiltonianSchedule::HamiltonianSchedule(SystemLayout layout, std::vector<Segment> segments,
                                         Matrix target_gate, PhaseConvention convention,
                                         double report_tau)
    : layout_(std::move(layout)),
      segments_(std::move(segments)),
      target_gate_(std::move(target_gate)),
      convention_(convention) {
    if (segments_.empty()) throw ValidationError("schedule: needs at least one segment");
    const Eigen::Index n = layout_.full_dim();
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        const auto& seg = segments_[k];
        if (seg.generator.rows() != n || seg.generator.cols() != n)
            throw ValidationError("schedule: segment " + std::to_string(k) +
                                  " generator does not match layout dimension");
        if (!(seg.duration > 0.0))
            throw ValidationError("schedule: segment " + std::to_string(k) +
                                  " duration must be > 0");
        if (!is_hermitian(seg.generator, 1e-12))
            throw ValidationError("schedule: segment " + std::to_string(k) +
                                  " generator is not Hermitian to 1e-12");
        tau_total_ += seg.duration;
    }
    if (target_gate_.rows() != n || target_gate_.cols() != n)
        throw ValidationError("schedule: target gate does not match layout dimension");
    if (!is_unitary(target_gate_, 1e-10))
        throw ValidationError("schedule: target gate is not unitary to 1e-10");
    report_tau_ = report_tau > 0.0 ? report_tau : tau_total_;
}

Matrix expm_hermitian(const Matrix& hamiltonian, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
    if (es.info() != Eigen::Success)
        throw NumericalError("expm_hermitian: eigendecomposition failed");
    const Eigen::Index n = hamiltonian.rows();
    Vector phases(n);
    for (Eigen::Index i = 0; i < n; ++i)
        phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i) * t));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

PropagatorCache::PropagatorCache(const HamiltonianSchedule& schedule) : schedule_(&schedule) {
    const Eigen::Index n = schedule.layout().full_dim();
    Matrix acc = Matrix::Identity(n, n);
    double t0 = 0.0;
    for (const auto& seg : schedule.segments()) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(seg.generator);
        if (es.info() != Eigen::Success)
            throw NumericalError("propagator: eigendecomposition failed");
        SegmentEigen se;
        se.eigenvalues = es.eigenvalues();
        se.eigenvectors = es.eigenvectors();
        se.start_unitary = acc;
        se.t_begin = t0;
        se.t_end = t0 + seg.duration;
        max_norm_ = std::max(max_norm_, se.eigenvalues.cwiseAbs().maxCoeff());
        t0 = se.t_end;

        Vector phases(n);
        for (Eigen::Index i = 0; i < n; ++i)
            phases(i) = std::exp(Complex(0.0, -se.eigenvalues(i) * seg.duration));
        acc = se.eigenvectors * phases.asDiagonal() * se.eigenvectors.adjoint() * acc;
        segs_.push_back(std::move(se));
    }
}

Matrix PropagatorCache::propagator_at(double t) const {
    const double tau = schedule_->tau_total();
    if (t < -1e-15 * tau || t > tau * (1.0 + 1e-12) + 1e-300)
        throw ValidationError("propagator_at: t out of [0, tau_total]");
    t = std::clamp(t, 0.0, tau);

    // locate the active segment (boundary times belong to the earlier one)
    std::size_t k = 0;
    while (k + 1 < segs_.size() && t > segs_[k].t_end) ++k;
    const auto& se = segs_[k];
    const double dt = t - se.t_begin;
    const Eigen::Index n = se.eigenvectors.rows();
    Vector phases(n);
    for (Eigen::Index i = 0; i < n; ++i)
        phases(i) = std::exp(Complex(0.0, -se.eigenvalues(i) * dt));
    return se.eigenvectors * phases.asDiagonal() * se.eigenvectors.adjoint() * se.start_unitary;
}

Matrix PropagatorCache::heisenberg_jump(const Matrix& jump, double t) const {
    if (jump.rows() != schedule_->layout().full_dim() ||
        jump.cols() != schedule_->layout().full_dim())
        throw ValidationError("heisenberg_jump: jump operator does not match layout");
    const Matrix u = propagator_at(t);
    return u.adjoint() * jump * u;
}

double ideal_gate_check(const PropagatorCache& cache) {
    const auto& schedule = cache.schedule();
    const auto& layout = schedule.layout();
    const Matrix u = cache.propagator_at(schedule.tau_total());
    Matrix realized = project_cmp(OperatorMatrix(layout, u));
    const Matrix target = project_cmp(OperatorMatrix(layout, schedule.target_gate()));

    if (schedule.phase_convention() == PhaseConvention::global_phase) {
        const Complex overlap = (target.adjoint() * realized).trace();
        if (std::abs(overlap) > 1e-14) realized *= std::conj(overlap / std::abs(overlap));
    }
    return max_abs(Matrix(realized - target));
}

double ideal_gate_check(const HamiltonianSchedule& schedule) {
    return ideal_gate_check(PropagatorCache(schedule));
}

}  // namespace gatefid
