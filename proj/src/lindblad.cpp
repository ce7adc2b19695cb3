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

#include "gatefid/lindblad.hpp"

#include <cmath>
#include <cstdio>

namespace gatefid {

DensityMatrix::DensityMatrix(SystemLayout layout, Matrix data)
    : layout_(std::move(layout)), data_(std::move(data)) {
    if (data_.rows() != layout_.full_dim() || data_.cols() != layout_.full_dim())
        throw ValidationError("density matrix: dimension does not match layout");
    if (!is_hermitian(data_, 1e-10))
        throw ValidationError("density matrix: not Hermitian to 1e-10");
    if (std::abs(data_.trace() - Complex(1.0)) > 1e-10)
        throw ValidationError("density matrix: trace differs from 1 by more than 1e-10");
    Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw ValidationError("density matrix: negative eigenvalue below -1e-10 floor");
}

DensityMatrix DensityMatrix::pure(const SystemLayout& layout, const Vector& state) {
    Vector psi = state / state.norm();
    return DensityMatrix(layout, psi * psi.adjoint());
}

DensityMatrix DensityMatrix::from_evolution(const SystemLayout& layout, Matrix data) {
    if (!is_hermitian(data, 1e-9))
        throw NumericalError("lindblad: Hermiticity drifted beyond 1e-9");
    if (std::abs(data.trace() - Complex(1.0)) > 1e-9)
        throw NumericalError("lindblad: trace drifted beyond 1e-9");
    Eigen::SelfAdjointEigenSolver<Matrix> es(data, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw NumericalError("lindblad: positivity drifted below -1e-8");
    return DensityMatrix(layout, std::move(data), Unchecked{});
}

namespace {

struct ChannelTerms {
    Matrix jump;      // sqrt(eff) L
    Matrix jump_dag;
};

long base_steps(const Segment& seg, const std::vector<NoiseChannel>& channels,
                const SolverOptions& opts) {
    double max_eff = 0.0;
    for (const auto& ch : channels) max_eff = std::max(max_eff, ch.effective_rate());
    // infinity norm bounds the spectral radius of the Hermitian generator
    const double norm_h = seg.generator.cwiseAbs().rowwise().sum().maxCoeff();

    double h = seg.duration / opts.min_steps_per_segment;
    if (norm_h > 0.0) h = std::min(h, opts.max_phase_step / norm_h);
    if (max_eff > 0.0) h = std::min(h, opts.max_rate_step / max_eff);
    return static_cast<long>(std::ceil(seg.duration / h));
}

Matrix run_fixed_step(const Matrix& rho0, const HamiltonianSchedule& schedule,
                      const std::vector<NoiseChannel>& channels, const SolverOptions& opts,
                      long step_multiplier) {
    const Eigen::Index dim = rho0.rows();
    Matrix rho = rho0;
    Matrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim);
    Matrix stage(dim, dim), tmp(dim, dim);

    for (const auto& seg : schedule.segments()) {
        const long n = base_steps(seg, channels, opts) * step_multiplier;
        if (n > 50000000L) throw NumericalError("lindblad: step-size underflow");
        const double h = seg.duration / static_cast<double>(n);

        std::vector<ChannelTerms> terms;
        terms.reserve(channels.size());
        // fold -i[H, .] and the anticommutator -{sum eff/2 L^dag L, .} into a
        // single drift A . + . A^dag with A = -iH - sum eff/2 L^dag L
        Matrix drift = Complex(0.0, -1.0) * seg.generator;
        for (const auto& ch : channels) {
            const double eff = ch.effective_rate();
            if (eff == 0.0) continue;
            ChannelTerms t;
            t.jump = std::sqrt(eff) * ch.jump.data;
            t.jump_dag = t.jump.adjoint();
            drift.noalias() -= 0.5 * (t.jump_dag * t.jump);
            terms.push_back(std::move(t));
        }
        const Matrix drift_dag = drift.adjoint();

        const auto rhs = [&](const Matrix& state, Matrix& out) {
            out.noalias() = drift * state;
            out.noalias() += state * drift_dag;
            for (const auto& t : terms) {
                tmp.noalias() = t.jump * state;
                out.noalias() += tmp * t.jump_dag;
            }
        };

        for (long k = 0; k < n; ++k) {
            rhs(rho, k1);
            stage = rho;
            stage.noalias() += (0.5 * h) * k1;
            rhs(stage, k2);
            stage = rho;
            stage.noalias() += (0.5 * h) * k2;
            rhs(stage, k3);
            stage = rho;
            stage.noalias() += h * k3;
            rhs(stage, k4);
            rho.noalias() += (h / 6.0) * k1;
            rho.noalias() += (h / 3.0) * k2;
            rho.noalias() += (h / 3.0) * k3;
            rho.noalias() += (h / 6.0) * k4;
        }
    }
    return rho;
}

void check_layouts(const Matrix& rho0, const HamiltonianSchedule& schedule,
                   const std::vector<NoiseChannel>& channels) {
    if (rho0.rows() != schedule.layout().full_dim() ||
        rho0.cols() != schedule.layout().full_dim())
        throw ValidationError("lindblad: state does not match schedule layout");
    for (const auto& ch : channels)
        if (!(ch.jump.layout == schedule.layout()))
            throw ValidationError("lindblad: channel " + ch.label + " layout mismatch");
}

// step-doubling until the Richardson error estimate meets the tolerance;
// returns the accepted fine-run state and the multiplier that produced it
Matrix calibrated_run(const Matrix& rho0, const HamiltonianSchedule& schedule,
                      const std::vector<NoiseChannel>& channels, const SolverOptions& opts,
                      long* out_multiplier) {
    Matrix coarse = run_fixed_step(rho0, schedule, channels, opts, 1);
    for (long multiplier = 2; multiplier <= 512; multiplier *= 2) {
        Matrix fine = run_fixed_step(rho0, schedule, channels, opts, multiplier);
        const double err = max_abs(Matrix(fine - coarse)) / 15.0;
        if (err <= opts.tolerance) {
            if (out_multiplier) *out_multiplier = multiplier;
            return fine;
        }
        coarse = std::move(fine);
    }
    char msg[96];
    std::snprintf(msg, sizeof(msg), "lindblad: Richardson self-check cannot reach tol %.3e",
                  opts.tolerance);
    throw NumericalError(msg);
}

}  // namespace

long lindblad_calibrate_steps(const Matrix& probe, const HamiltonianSchedule& schedule,
                              const std::vector<NoiseChannel>& channels,
                              const SolverOptions& opts) {
    check_layouts(probe, schedule, channels);
    long multiplier = 0;
    calibrated_run(probe, schedule, channels, opts, &multiplier);
    return multiplier;
}

Matrix lindblad_propagate(const Matrix& rho0, const HamiltonianSchedule& schedule,
                          const std::vector<NoiseChannel>& channels, const SolverOptions& opts,
                          long step_multiplier) {
    check_layouts(rho0, schedule, channels);
    if (step_multiplier > 0)
        return run_fixed_step(rho0, schedule, channels, opts, step_multiplier);
    if (!opts.self_check) return run_fixed_step(rho0, schedule, channels, opts, 2);
    return calibrated_run(rho0, schedule, channels, opts, nullptr);
}

DensityMatrix lindblad_evolve(const DensityMatrix& rho0, const HamiltonianSchedule& schedule,
                              const std::vector<NoiseChannel>& channels,
                              const SolverOptions& opts) {
    Matrix out = lindblad_propagate(rho0.data(), schedule, channels, opts);
    return DensityMatrix::from_evolution(schedule.layout(), std::move(out));
}

}  // namespace gatefid
