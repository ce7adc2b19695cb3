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

#include "gatefid/tomography.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

namespace gatefid {

ChannelTomogram::ChannelTomogram(SystemLayout layout, std::vector<Matrix> maps)
    : layout_(std::move(layout)), maps_(std::move(maps)) {
    const std::size_t expected =
        static_cast<std::size_t>(layout_.cmp_dim()) * static_cast<std::size_t>(layout_.cmp_dim());
    if (maps_.size() != expected)
        throw ValidationError("tomogram: incomplete, expected " + std::to_string(expected) +
                              " dyad images");
    // Hermiticity preservation of the channel: E(|i><j|)^dag = E(|j><i|)
    const Eigen::Index d = layout_.cmp_dim();
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = a; b < d; ++b)
            if (max_abs(Matrix(at(a, b).adjoint() - at(b, a))) > 1e-9)
                throw NumericalError("tomogram: Hermiticity-preservation violated beyond 1e-9");
}

ChannelTomogram channel_tomography(const HamiltonianSchedule& schedule,
                                   const std::vector<NoiseChannel>& channels,
                                   const SolverOptions& opts, int n_threads) {
    const auto& layout = schedule.layout();
    const Eigen::Index d = layout.cmp_dim();
    const Eigen::Index n = layout.full_dim();
    const auto& idx = layout.cmp_indices();

    // Hermitian inputs to evolve: d diagonal dyads, then (re, im) pairs per i<j
    struct Job {
        Eigen::Index a, b;
        bool imaginary_part;
    };
    std::vector<Job> jobs;
    for (Eigen::Index a = 0; a < d; ++a) jobs.push_back({a, a, false});
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = a + 1; b < d; ++b) {
            jobs.push_back({a, b, false});
            jobs.push_back({a, b, true});
        }

    std::vector<Matrix> evolved(jobs.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto dyad_state = [&](const Job& job) {
        Matrix rho = Matrix::Zero(n, n);
        if (job.a == job.b) {
            rho(idx[job.a], idx[job.a]) = 1.0;
        } else if (!job.imaginary_part) {
            rho(idx[job.a], idx[job.b]) = 0.5;
            rho(idx[job.b], idx[job.a]) = 0.5;
        } else {
            rho(idx[job.a], idx[job.b]) = Complex(0.0, -0.5);
            rho(idx[job.b], idx[job.a]) = Complex(0.0, 0.5);
        }
        return rho;
    };

    // calibrate the step once on a probe that populates every computational
    // basis state (a single dyad can sit in a decoupled block); every solve
    // shares the same generator, so the multiplier carries over
    const long multiplier = [&] {
        if (!opts.self_check) return 2L;
        Vector uniform = Vector::Zero(n);
        for (Eigen::Index a = 0; a < d; ++a)
            uniform(idx[a]) = 1.0 / std::sqrt(static_cast<double>(d));
        const Matrix probe = uniform * uniform.adjoint();
        return lindblad_calibrate_steps(probe, schedule, channels, opts);
    }();

    auto run_job = [&](std::size_t j) {
        evolved[j] = lindblad_propagate(dyad_state(jobs[j]), schedule, channels, opts,
                                        multiplier);
    };

    n_threads = std::max(1, n_threads);
    if (n_threads == 1) {
        for (std::size_t j = 0; j < jobs.size(); ++j) run_job(j);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t j = next.fetch_add(1);
                    if (j >= jobs.size()) return;
                    try {
                        run_job(j);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    // recombine in fixed index order
    std::vector<Matrix> maps(static_cast<std::size_t>(d) * d);
    std::size_t j = 0;
    for (Eigen::Index a = 0; a < d; ++a) maps[a * d + a] = evolved[j++];
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = a + 1; b < d; ++b) {
            const Matrix& re = evolved[j++];
            const Matrix& im = evolved[j++];
            maps[a * d + b] = re + Complex(0.0, 1.0) * im;
            maps[b * d + a] = re - Complex(0.0, 1.0) * im;
        }
    return ChannelTomogram(layout, std::move(maps));
}

namespace {

// columns are U_g |i> for the computational basis states
Matrix gate_columns(const SystemLayout& layout, const Matrix& ideal_gate) {
    if (ideal_gate.rows() != layout.full_dim() || ideal_gate.cols() != layout.full_dim())
        throw ValidationError("fidelity: ideal gate does not match layout");
    const auto& idx = layout.cmp_indices();
    Matrix w(layout.full_dim(), layout.cmp_dim());
    for (Eigen::Index a = 0; a < layout.cmp_dim(); ++a) w.col(a) = ideal_gate.col(idx[a]);
    return w;
}

}  // namespace

double haar_average_fidelity(const ChannelTomogram& tomogram, const Matrix& ideal_gate) {
    const auto& layout = tomogram.layout();
    const Eigen::Index d = tomogram.d();
    const Matrix w = gate_columns(layout, ideal_gate);

    Complex s1 = 0.0, s2 = 0.0;
    for (Eigen::Index a = 0; a < d; ++a) {
        const Matrix& diag = tomogram.at(a, a);
        for (Eigen::Index k = 0; k < d; ++k) s1 += w.col(k).dot(diag * w.col(k));
    }
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) s2 += w.col(a).dot(tomogram.at(a, b) * w.col(b));

    const Complex f = (s1 + s2) / (static_cast<double>(d) * (d + 1.0));
    if (std::abs(f.imag()) > 1e-10)
        throw NumericalError("haar_average_fidelity: imaginary residue exceeds 1e-10");
    return f.real();
}

namespace {

class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    // Box-Muller on the engine's 53-bit uniforms; platform-stable, unlike
    // std::normal_distribution
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    static const char* name() { return "mt19937_64/box-muller"; }

  private:
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

McFidelityResult haar_mc_fidelity(const ChannelTomogram& tomogram, const Matrix& ideal_gate,
                                  int n_samples, std::uint64_t seed) {
    if (n_samples < 100) throw ValidationError("haar_mc_fidelity: need n_samples >= 100");
    const auto& layout = tomogram.layout();
    const Eigen::Index d = tomogram.d();
    const Matrix w = gate_columns(layout, ideal_gate);

    GaussianSampler rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    Vector psi(d);
    for (int s = 0; s < n_samples; ++s) {
        for (Eigen::Index a = 0; a < d; ++a) psi(a) = Complex(rng.normal(), rng.normal());
        psi /= psi.norm();
        const Vector target = w * psi;  // U_g |psi> on the full space
        Complex f = 0.0;
        for (Eigen::Index a = 0; a < d; ++a)
            for (Eigen::Index b = 0; b < d; ++b)
                f += psi(a) * std::conj(psi(b)) * target.dot(tomogram.at(a, b) * target);
        if (std::abs(f.imag()) > 1e-8)
            throw NumericalError("haar_mc_fidelity: imaginary residue exceeds 1e-8");
        sum += f.real();
        sum_sq += f.real() * f.real();
    }
    const double mean = sum / n_samples;
    const double var = std::max(0.0, sum_sq / n_samples - mean * mean);
    const double std_error = std::sqrt(var / std::max(1, n_samples - 1));
    return {mean, std_error, n_samples, seed, GaussianSampler::name()};
}

McFidelityResult haar_mc_fidelity(const HamiltonianSchedule& schedule,
                                  const std::vector<NoiseChannel>& channels,
                                  const Matrix& ideal_gate, int n_samples, std::uint64_t seed,
                                  const SolverOptions& opts) {
    return haar_mc_fidelity(channel_tomography(schedule, channels, opts), ideal_gate, n_samples,
                            seed);
}

ScalingResult residual_scaling_check(const HamiltonianSchedule& schedule,
                                     const std::vector<NoiseChannel>& channels,
                                     const Matrix& ideal_gate, const std::vector<double>& scales,
                                     const SolverOptions& opts, const QuadratureSpec& quad,
                                     double noise_floor, int n_threads) {
    if (noise_floor < 0.0) noise_floor = std::max(1e-10, 10.0 * opts.tolerance);
    if (scales.size() < 3)
        throw ValidationError("residual_scaling_check: need at least 3 scales");
    for (double s : scales)
        if (!(s > 0.0)) throw ValidationError("residual_scaling_check: scales must be > 0");
    for (const auto& ch : channels)
        for (double s : scales)
            if (ch.effective_rate() * s * schedule.tau_total() > 0.05)
                throw ValidationError("residual_scaling_check: channel " + ch.label +
                                      " leaves the Gamma*tau <= 0.05 regime at scale " +
                                      std::to_string(s));

    // base-rate budget; contributions are linear in the rates
    const FidelityBudget base = assemble_budget(schedule, channels, quad);
    double base_loss = 0.0;
    for (const auto& e : base.entries) base_loss += e.contribution;

    ScalingResult out;
    out.scales = scales;
    for (double s : scales) {
        std::vector<NoiseChannel> scaled;
        scaled.reserve(channels.size());
        for (const auto& ch : channels) {
            NoiseChannel c = ch;
            c.rate *= s;
            scaled.push_back(std::move(c));
        }
        const double f_oracle =
            haar_average_fidelity(channel_tomography(schedule, scaled, opts, n_threads),
                                  ideal_gate);
        const double f_analytic = 1.0 - s * base_loss;
        out.residuals.push_back(std::abs(f_oracle - f_analytic));
    }

    for (double r : out.residuals)
        if (r <= noise_floor) {
            out.inconclusive = true;
            return out;
        }

    // least-squares slope of log r vs log s
    const std::size_t n = scales.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(scales[i]);
        my += std::log(out.residuals[i]);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(scales[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(out.residuals[i]) - my);
    }
    out.slope = sxy / sxx;
    return out;
}

}  // namespace gatefid
