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

#include "gatefid/budget.hpp"

#include <cmath>

namespace gatefid {

namespace {

struct CmpTraces {
    Complex tr_jump;    // Tr_cmp[L(t)]
    double tr_product;  // Tr_cmp[L(t)^dag L(t)], full-space product
};

CmpTraces cmp_traces(const OperatorMatrix& op) {
    CmpTraces out{0.0, 0.0};
    for (Eigen::Index i : op.layout.cmp_indices()) {
        out.tr_jump += op.data(i, i);
        out.tr_product += op.data.col(i).squaredNorm();
    }
    return out;
}

double check_real(Complex value, const char* where) {
    if (std::abs(value.imag()) > 1e-12)
        throw NumericalError(std::string(where) + ": imaginary residue " +
                             std::to_string(value.imag()) + " exceeds 1e-12");
    return value.real();
}

}  // namespace

double delta_f(const OperatorMatrix& evolved_jump) {
    const double d = static_cast<double>(evolved_jump.layout.cmp_dim());
    const CmpTraces tr = cmp_traces(evolved_jump);
    const Complex value =
        std::conj(tr.tr_jump) * tr.tr_jump / (d * (d + 1.0)) - tr.tr_product / (d + 1.0);
    return check_real(value, "delta_f");
}

double delta_f_subspace(const OperatorMatrix& jump) { return delta_f(jump); }

double delta_f_parallel(const OperatorMatrix& evolved_jump, int m, int n_total) {
    if (m > n_total) throw ValidationError("delta_f_parallel: m exceeds N");
    if (m < 1) throw ValidationError("delta_f_parallel: m must be >= 1");
    const double dm = static_cast<double>(Eigen::Index{1} << m);
    const double d = static_cast<double>(Eigen::Index{1} << n_total);
    if (evolved_jump.layout.cmp_dim() != Eigen::Index{1} << m)
        throw ValidationError("delta_f_parallel: operator layout has the wrong qubit count");
    const CmpTraces tr = cmp_traces(evolved_jump);
    const Complex value = std::conj(tr.tr_jump) * tr.tr_jump * (d / (dm * dm * (d + 1.0))) -
                          tr.tr_product * (d / (dm * (d + 1.0)));
    return check_real(value, "delta_f_parallel");
}

ChannelCoefficient channel_coefficient(const PropagatorCache& cache, const NoiseChannel& channel,
                                       const QuadratureSpec& quad,
                                       std::optional<ParallelContext> parallel) {
    const auto& schedule = cache.schedule();
    if (!(channel.jump.layout == schedule.layout()))
        throw ValidationError("channel " + channel.label +
                              ": jump operator layout does not match schedule");

    // integrate in units of report_tau so the integrand and interval are O(1)
    // and abs_tol bounds the coefficient error directly, independent of the
    // second-scale of the schedule
    const double tau_ref = schedule.report_tau();
    auto integrand = [&](double u) {
        OperatorMatrix lt(schedule.layout(),
                          cache.heisenberg_jump(channel.jump.data, u * tau_ref));
        return parallel ? delta_f_parallel(lt, parallel->m, parallel->n_total) : delta_f(lt);
    };

    // segment-aligned panels: the integrand is smooth inside segments but may
    // kink at boundaries (e.g. the Rydberg phase jump)
    double integral = 0.0;
    double err = 0.0;
    double t0 = 0.0;
    for (const auto& seg : schedule.segments()) {
        const QuadratureResult r =
            integrate(integrand, t0 / tau_ref, (t0 + seg.duration) / tau_ref, quad);
        integral += r.value;
        err += r.error_estimate;
        t0 += seg.duration;
    }

    double c = -channel.rate_convention * integral;
    if (c < -1e-10)
        throw NumericalError("channel " + channel.label +
                             ": negative coefficient " + std::to_string(c));
    if (c < 0.0) c = 0.0;
    return {c, err};
}

ChannelCoefficient channel_coefficient(const HamiltonianSchedule& schedule,
                                       const NoiseChannel& channel, const QuadratureSpec& quad,
                                       std::optional<ParallelContext> parallel) {
    return channel_coefficient(PropagatorCache(schedule), channel, quad, parallel);
}

FidelityBudget assemble_budget(const PropagatorCache& cache,
                               const std::vector<NoiseChannel>& channels,
                               const QuadratureSpec& quad) {
    const auto& schedule = cache.schedule();
    FidelityBudget budget;
    budget.tau = schedule.report_tau();
    double loss = 0.0;
    for (const auto& ch : channels) {
        if (ch.effective_rate() * schedule.tau_total() > 0.1)
            budget.warnings.push_back("channel " + ch.label +
                                      ": Gamma*tau > 0.1, first-order expansion is marginal");
        const ChannelCoefficient c = channel_coefficient(cache, ch, quad);
        const double contribution = c.value * ch.rate * budget.tau;
        budget.entries.push_back({ch.label, ch.kind, ch.site, ch.rate, ch.rate_convention,
                                  c.value, contribution});
        budget.quadrature_error_estimate += c.error_estimate;
        loss += contribution;
    }
    budget.total = 1.0 - loss;
    return budget;
}

FidelityBudget assemble_budget(const HamiltonianSchedule& schedule,
                               const std::vector<NoiseChannel>& channels,
                               const QuadratureSpec& quad) {
    return assemble_budget(PropagatorCache(schedule), channels, quad);
}

FidelityBudget imperfect_cz_budget(double lambda, double tau, const TransmonRates& rates) {
    if (!(lambda > 0.0) || !(tau > 0.0))
        throw ValidationError("imperfect_cz_budget: lambda and tau must be > 0");
    const double s2 = std::sin(2.0 * lambda * tau) / (20.0 * lambda * tau);
    const double p2 = std::sin(2.0 * lambda * tau) / (80.0 * lambda * tau);
    const double p4 = std::sin(4.0 * lambda * tau) / (640.0 * lambda * tau);

    const double c1q1 = 0.5 - s2;
    const double c1q2 = 0.3 + s2;
    const double cpq1 = 2.0 * (61.0 / 160.0 - 7.0 * p2 - p4);
    const double cpq2 = 2.0 * (29.0 / 160.0 + p2 - p4);

    FidelityBudget budget;
    budget.tau = tau;
    const struct {
        const char* label;
        const char* kind;
        int site;
        double rate;
        double conv;
        double c;
    } rows[] = {
        {"Gamma1_q1", "relaxation", 0, rates.gamma1_q1, 1.0, c1q1},
        {"Gamma1_q2", "relaxation", 1, rates.gamma1_q2, 1.0, c1q2},
        {"Gammaphi_q1", "dephasing", 0, rates.gamma_phi_q1, 2.0, cpq1},
        {"Gammaphi_q2", "dephasing", 1, rates.gamma_phi_q2, 2.0, cpq2},
    };
    double loss = 0.0;
    for (const auto& row : rows) {
        const double contribution = row.c * row.rate * tau;
        budget.entries.push_back({row.label, row.kind, row.site, row.rate, row.conv, row.c,
                                  contribution});
        loss += contribution;
    }
    budget.total = 1.0 - loss;
    return budget;
}

}  // namespace gatefid
