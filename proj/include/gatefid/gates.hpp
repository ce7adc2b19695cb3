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

#include <span>
#include <string>
#include <vector>

#include "gatefid/noise.hpp"
#include "gatefid/schedule.hpp"

namespace gatefid {

/// A noise channel with everything but the rate: the per-model physics of
/// which jump operator a given decoherence kind uses on a given subsystem.
struct ChannelTemplate {
    std::string kind;  // "relaxation" | "dephasing" | "rydberg_decay"
    int site;
    OperatorMatrix jump;
    double convention;
};

/// Builtin gate: schedule plus target unitary plus noise-channel templates.
struct GateModel {
    std::string name;
    SystemLayout layout;
    HamiltonianSchedule schedule;
    std::vector<ChannelTemplate> templates;

    const Matrix& ideal_gate() const { return schedule.target_gate(); }

    /// Instantiate the template matching (kind, site) at the given rate.
    NoiseChannel make_channel(const std::string& kind, int site, double rate) const;

    /// Every template instantiated at one common rate.
    std::vector<NoiseChannel> all_channels(double rate) const;
};

/// Two three-level transmons coupled |11> <-> |20| at strength lambda; the
/// CZ gate is ideal at lambda*tau = pi, other values model coherent error.
GateModel transmon_cz(double lambda, double tau);

/// Relaxation + dephasing channels per subsystem: three-level subsystems get
/// the transmon operators sigma01- + sqrt2 sigma12- (convention 1) and
/// |1><1| + 2|2><2| (convention 2); two-level subsystems get sigma- and
/// sigma_z (convention 1/2).
std::vector<NoiseChannel> transmon_noise(const SystemLayout& layout,
                                         std::span<const double> gamma1,
                                         std::span<const double> gamma_phi);

/// Levine-protocol CZ between two four-level atoms (0, 1, r, O): two pulses
/// of length tau = 2pi/sqrt(Delta^2 + 2 Omega^2) with a laser phase jump xi
/// between them. The Rydberg blockade is built structurally: |11> couples
/// only to |W> = (|r1> + |1r>)/sqrt2, never |rr>. The target gate is the
/// realized cmp-block unitary (single-qubit phases included).
GateModel rydberg_cz(double omega);
GateModel rydberg_cz(double omega, double delta, double xi);

/// Rydberg-state decay |O><r| per atom, convention 1.
std::vector<NoiseChannel> rydberg_noise(const SystemLayout& layout,
                                        std::span<const double> gamma_r);

/// Three-qubit CCZS gate: simultaneous CZ couplings lambda_1 = lambda,
/// lambda_2 = -lambda e^{i phi}, zero detuning, tau = pi/(sqrt2 lambda).
/// Only q1 populates |2>; q2/q3 noise uses plain sigma01- and sigma_z.
GateModel cczs(double lambda, double phi);

/// In-subspace two-qubit excitation swap; ideal at g*tau = pi/2.
GateModel iswap(double g, double tau);

/// N idle qubits under a zero Hamiltonian (two-level subsystems).
GateModel idle(int n_qubits, double tau);

/// Tensor composition of gates running simultaneously. Shorter schedules are
/// padded with zero-Hamiltonian segments when pad is set, otherwise equal
/// durations are required. Channel templates are re-embedded with global
/// subsystem numbering.
GateModel parallel(const std::vector<GateModel>& models, bool pad = true);

/// Names accepted by the model registry / CLI.
const std::vector<std::string>& builtin_gate_names();

}  // namespace gatefid
