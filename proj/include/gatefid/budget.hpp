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

#include <optional>
#include <string>
#include <vector>

#include "gatefid/noise.hpp"
#include "gatefid/quadrature.hpp"
#include "gatefid/schedule.hpp"

namespace gatefid {

/// First-order fidelity-reduction density for an evolved jump operator:
///   dF(L(t)) = Tr_cmp[L^dag] Tr_cmp[L] / (d(d+1)) - Tr_cmp[L^dag L] / (d+1),
/// where the product L^dag L is taken on the full space before the subspace
/// trace. Always <= 0. Throws NumericalError if the imaginary residue
/// exceeds 1e-12.
double delta_f(const OperatorMatrix& evolved_jump);

/// Time-independent shortcut for operations confined to the computational
/// subspace; equals delta_f(L(t)) at every t for such gates.
double delta_f_subspace(const OperatorMatrix& jump);

/// Reduction for one m-qubit gate running inside an N-qubit system whose
/// other qubits evolve under their own perfect gates. evolved_jump lives on
/// the m-qubit gate's own space; weights are d/(d_m^2 (d+1)) and
/// d/(d_m (d+1)) with d = 2^N, d_m = 2^m. Reduces to delta_f when m == N.
double delta_f_parallel(const OperatorMatrix& evolved_jump, int m, int n_total);

struct ParallelContext {
    int m;
    int n_total;
};

struct ChannelCoefficient {
    double value;           // dimensionless c, contribution is c * Gamma * report_tau
    double error_estimate;  // quadrature error on the underlying integral
};

/// c = -(rate_convention / report_tau) * integral of delta_f(L(t)) over the
/// schedule, integrated segment by segment.
ChannelCoefficient channel_coefficient(const PropagatorCache& cache, const NoiseChannel& channel,
                                       const QuadratureSpec& quad,
                                       std::optional<ParallelContext> parallel = std::nullopt);
ChannelCoefficient channel_coefficient(const HamiltonianSchedule& schedule,
                                       const NoiseChannel& channel, const QuadratureSpec& quad,
                                       std::optional<ParallelContext> parallel = std::nullopt);

struct BudgetEntry {
    std::string label;
    std::string kind;
    int site;
    double rate;         // 1/s
    double convention;
    double coefficient;  // c_k >= 0
    double contribution; // c_k * Gamma_k * report_tau
};

struct FidelityBudget {
    std::vector<BudgetEntry> entries;
    double total = 1.0;  // 1 - sum of contributions, exactly
    double tau = 0.0;    // report_tau of the schedule
    double quadrature_error_estimate = 0.0;
    std::vector<std::string> warnings;
};

/// Per-channel coefficients and assembled first-order fidelity. Emits a
/// warning entry for any channel with effective Gamma * tau_total > 0.1.
FidelityBudget assemble_budget(const HamiltonianSchedule& schedule,
                               const std::vector<NoiseChannel>& channels,
                               const QuadratureSpec& quad);
FidelityBudget assemble_budget(const PropagatorCache& cache,
                               const std::vector<NoiseChannel>& channels,
                               const QuadratureSpec& quad);

struct TransmonRates {
    double gamma1_q1 = 0.0;
    double gamma1_q2 = 0.0;
    double gamma_phi_q1 = 0.0;
    double gamma_phi_q2 = 0.0;
};

/// Closed-form budget for the two-transmon CZ gate at arbitrary coupling
/// (coherent-error case lambda != pi/tau); no quadrature involved. Agrees
/// with the quadrature path to <= 1e-9 per coefficient.
FidelityBudget imperfect_cz_budget(double lambda, double tau, const TransmonRates& rates);

}  // namespace gatefid
