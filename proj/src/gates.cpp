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

#include "gatefid/gates.hpp"

#include <algorithm>
#include <cmath>

namespace gatefid {

namespace {

std::string channel_label(const std::string& kind, int site) {
    const std::string q = "q" + std::to_string(site + 1);
    if (kind == "relaxation") return "Gamma1_" + q;
    if (kind == "dephasing") return "Gammaphi_" + q;
    if (kind == "rydberg_decay") return "Gammar_" + q;
    return kind + "_" + q;
}

Matrix transmon_lowering() {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = 1.0;
    m(1, 2) = std::sqrt(2.0);
    return m;
}

Matrix transmon_dephasing() {
    Matrix m = Matrix::Zero(3, 3);
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    return m;
}

Matrix qubit_lowering(int dim = 2) {
    Matrix m = Matrix::Zero(dim, dim);
    m(0, 1) = 1.0;
    return m;
}

Matrix qubit_sigma_z(int dim = 2) {
    Matrix m = Matrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ChannelTemplate make_template(const std::string& kind, int site, OperatorMatrix jump,
                              double convention) {
    return ChannelTemplate{kind, site, std::move(jump), convention};
}

}  // namespace

NoiseChannel GateModel::make_channel(const std::string& kind, int site, double rate) const {
    for (const auto& t : templates)
        if (t.kind == kind && t.site == site)
            return NoiseChannel(channel_label(kind, site), t.jump, rate, t.convention, site,
                                kind);
    throw ValidationError("model " + name + ": no '" + kind + "' channel on subsystem " +
                          std::to_string(site));
}

std::vector<NoiseChannel> GateModel::all_channels(double rate) const {
    std::vector<NoiseChannel> out;
    out.reserve(templates.size());
    for (const auto& t : templates)
        out.emplace_back(channel_label(t.kind, t.site), t.jump, rate, t.convention, t.site,
                         t.kind);
    return out;
}

GateModel transmon_cz(double lambda, double tau) {
    if (!(lambda > 0.0) || !(tau > 0.0))
        throw ValidationError("transmon_cz: lambda and tau must be > 0");
    auto layout = SystemLayout::compose({3, 3});
    Matrix h = ketbra(layout, {1, 1}, {2, 0});
    h += ketbra(layout, {2, 0}, {1, 1});
    h *= lambda;

    // target: CZ on the computational block, identity elsewhere
    Matrix target = Matrix::Identity(layout.full_dim(), layout.full_dim());
    target(layout.index_of({1, 1}), layout.index_of({1, 1})) = -1.0;

    GateModel model{"cz", layout,
                    HamiltonianSchedule(layout, {{h, tau}}, target), {}};
    const Matrix lm = transmon_lowering();
    const Matrix lphi = transmon_dephasing();
    for (int q = 0; q < 2; ++q) {
        model.templates.push_back(make_template("relaxation", q, embed(lm, q, layout), 1.0));
        model.templates.push_back(make_template("dephasing", q, embed(lphi, q, layout), 2.0));
    }
    return model;
}

std::vector<NoiseChannel> transmon_noise(const SystemLayout& layout,
                                         std::span<const double> gamma1,
                                         std::span<const double> gamma_phi) {
    const std::size_t n = static_cast<std::size_t>(layout.num_subsystems());
    if (gamma1.size() != n || gamma_phi.size() != n)
        throw ValidationError("transmon_noise: need one rate pair per subsystem");
    std::vector<NoiseChannel> out;
    for (std::size_t q = 0; q < n; ++q) {
        const int dim = layout.dims()[q];
        Matrix lower, dephase;
        double dephase_conv;
        if (dim == 3) {
            lower = transmon_lowering();
            dephase = transmon_dephasing();
            dephase_conv = 2.0;
        } else if (dim == 2) {
            lower = qubit_lowering();
            dephase = qubit_sigma_z();
            dephase_conv = 0.5;
        } else {
            throw ValidationError("transmon_noise: subsystem " + std::to_string(q) +
                                  " must have 2 or 3 levels");
        }
        const int site = static_cast<int>(q);
        out.emplace_back(channel_label("relaxation", site), embed(lower, site, layout),
                         gamma1[q], 1.0, site, "relaxation");
        out.emplace_back(channel_label("dephasing", site), embed(dephase, site, layout),
                         gamma_phi[q], dephase_conv, site, "dephasing");
    }
    return out;
}

namespace {

// Blocked Rydberg Hamiltonian on two (0,1,r,O) atoms for one pulse with
// complex Rabi amplitude omega_c: single-atom drives on {|01>,|0r>} and
// {|10>,|r0>}, the blockaded {|11>,|W>} block, zero elsewhere.
Matrix rydberg_hamiltonian(const SystemLayout& layout, Complex omega_c, double delta) {
    const Eigen::Index n = layout.full_dim();
    Matrix h = Matrix::Zero(n, n);
    const auto id = [&](int a, int b) { return layout.index_of({a, b}); };
    constexpr int R = 2;  // level index of |r>

    const auto add_drive = [&](Eigen::Index one, Eigen::Index ryd) {
        h(one, ryd) += 0.5 * omega_c;
        h(ryd, one) += 0.5 * std::conj(omega_c);
        h(ryd, ryd) += -delta;
    };
    add_drive(id(0, 1), id(0, R));
    add_drive(id(1, 0), id(R, 0));

    Vector w = Vector::Zero(n);
    w(id(R, 1)) = w(id(1, R)) = 1.0 / std::sqrt(2.0);
    Vector v11 = Vector::Zero(n);
    v11(id(1, 1)) = 1.0;
    h += (std::sqrt(2.0) / 2.0) * omega_c * v11 * w.adjoint();
    h += (std::sqrt(2.0) / 2.0) * std::conj(omega_c) * w * v11.adjoint();
    h += -delta * w * w.adjoint();
    return h;
}

// closest unitary to the cmp block of u, embedded as identity elsewhere
Matrix unitarized_cmp_target(const SystemLayout& layout, const Matrix& u) {
    Matrix block = project_cmp(OperatorMatrix(layout, u));
    Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix polar = svd.matrixU() * svd.matrixV().adjoint();
    Matrix target = Matrix::Identity(layout.full_dim(), layout.full_dim());
    const auto& idx = layout.cmp_indices();
    for (Eigen::Index i = 0; i < layout.cmp_dim(); ++i)
        for (Eigen::Index j = 0; j < layout.cmp_dim(); ++j) target(idx[i], idx[j]) = polar(i, j);
    return target;
}

}  // namespace

GateModel rydberg_cz(double omega) { return rydberg_cz(omega, 0.377371 * omega, 3.90242); }

GateModel rydberg_cz(double omega, double delta, double xi) {
    if (!(omega > 0.0)) throw ValidationError("rydberg_cz: Omega must be > 0");
    auto layout = SystemLayout::compose({4, 4});
    const double omega2 = std::sqrt(delta * delta + 2.0 * omega * omega);
    const double tau = 2.0 * M_PI / omega2;  // first pulse drives a full |11><->|W> cycle

    const Matrix h1 = rydberg_hamiltonian(layout, omega, delta);
    const Matrix h2 = rydberg_hamiltonian(layout, omega * std::exp(Complex(0.0, xi)), delta);
    const Matrix u = expm_hermitian(h2, tau) * expm_hermitian(h1, tau);
    const Matrix target = unitarized_cmp_target(layout, u);

    GateModel model{"rydberg_cz", layout,
                    HamiltonianSchedule(layout, {{h1, tau}, {h2, tau}}, target,
                                        PhaseConvention::exact, tau),
                    {}};
    Matrix decay = Matrix::Zero(4, 4);
    decay(3, 2) = 1.0;  // |O><r|
    for (int q = 0; q < 2; ++q)
        model.templates.push_back(
            make_template("rydberg_decay", q, embed(decay, q, layout), 1.0));
    return model;
}

std::vector<NoiseChannel> rydberg_noise(const SystemLayout& layout,
                                        std::span<const double> gamma_r) {
    const std::size_t n = static_cast<std::size_t>(layout.num_subsystems());
    if (gamma_r.size() != n)
        throw ValidationError("rydberg_noise: need one rate per atom");
    std::vector<NoiseChannel> out;
    for (std::size_t q = 0; q < n; ++q) {
        if (layout.dims()[q] != 4)
            throw ValidationError("rydberg_noise: atoms must have 4 levels (0, 1, r, O)");
        Matrix decay = Matrix::Zero(4, 4);
        decay(3, 2) = 1.0;
        const int site = static_cast<int>(q);
        out.emplace_back(channel_label("rydberg_decay", site), embed(decay, site, layout),
                         gamma_r[q], 1.0, site, "rydberg_decay");
    }
    return out;
}

GateModel cczs(double lambda, double phi) {
    if (!(lambda > 0.0)) throw ValidationError("cczs: lambda must be > 0");
    auto layout = SystemLayout::compose({3, 3, 3});
    const double tau = M_PI / (std::sqrt(2.0) * lambda);
    const Complex l1 = lambda;
    const Complex l2 = -lambda * std::exp(Complex(0.0, phi));

    Matrix h = l1 * (ketbra(layout, {1, 1, 0}, {2, 0, 0}) + ketbra(layout, {1, 1, 1}, {2, 0, 1}));
    h += l2 * (ketbra(layout, {1, 0, 1}, {2, 0, 0}) + ketbra(layout, {1, 1, 1}, {2, 1, 0}));
    h = Matrix(h + h.adjoint());

    // exp(-i H tau): conditional swap-with-phases on (q2, q3), minus sign on |111>
    Matrix target = Matrix::Identity(layout.full_dim(), layout.full_dim());
    const auto idx = [&](int a, int b, int c) { return layout.index_of({a, b, c}); };
    target(idx(1, 0, 1), idx(1, 0, 1)) = 0.0;
    target(idx(1, 1, 0), idx(1, 1, 0)) = 0.0;
    target(idx(1, 0, 1), idx(1, 1, 0)) = std::exp(Complex(0.0, phi));
    target(idx(1, 1, 0), idx(1, 0, 1)) = std::exp(Complex(0.0, -phi));
    target(idx(1, 1, 1), idx(1, 1, 1)) = -1.0;

    GateModel model{"cczs", layout, HamiltonianSchedule(layout, {{h, tau}}, target), {}};
    model.templates.push_back(
        make_template("relaxation", 0, embed(transmon_lowering(), 0, layout), 1.0));
    model.templates.push_back(
        make_template("dephasing", 0, embed(transmon_dephasing(), 0, layout), 2.0));
    // q2/q3 never populate |2>: plain sigma- and sigma_z on the qubit levels
    for (int q = 1; q < 3; ++q) {
        model.templates.push_back(
            make_template("relaxation", q, embed(qubit_lowering(3), q, layout), 1.0));
        model.templates.push_back(
            make_template("dephasing", q, embed(qubit_sigma_z(3), q, layout), 0.5));
    }
    return model;
}

GateModel iswap(double g, double tau) {
    if (!(g > 0.0) || !(tau > 0.0)) throw ValidationError("iswap: g and tau must be > 0");
    auto layout = SystemLayout::compose({2, 2});
    Matrix h = ketbra(layout, {0, 1}, {1, 0});
    h += ketbra(layout, {1, 0}, {0, 1});
    h *= g;

    // closed form of exp(-i H tau) on the {|01>,|10>} block
    const double c = std::cos(g * tau);
    const Complex ms = Complex(0.0, -std::sin(g * tau));
    Matrix target = Matrix::Identity(4, 4);
    target(1, 1) = c;
    target(2, 2) = c;
    target(1, 2) = ms;
    target(2, 1) = ms;

    GateModel model{"iswap", layout, HamiltonianSchedule(layout, {{h, tau}}, target), {}};
    for (int q = 0; q < 2; ++q) {
        model.templates.push_back(
            make_template("relaxation", q, embed(qubit_lowering(), q, layout), 1.0));
        model.templates.push_back(
            make_template("dephasing", q, embed(qubit_sigma_z(), q, layout), 0.5));
    }
    return model;
}

GateModel idle(int n_qubits, double tau) {
    if (n_qubits < 1) throw ValidationError("idle: need at least one qubit");
    if (!(tau > 0.0)) throw ValidationError("idle: tau must be > 0");
    std::vector<int> dims(n_qubits, 2);
    auto layout = SystemLayout::compose(dims);
    const Eigen::Index n = layout.full_dim();
    GateModel model{"idle", layout,
                    HamiltonianSchedule(layout, {{Matrix::Zero(n, n), tau}},
                                        Matrix::Identity(n, n)),
                    {}};
    for (int q = 0; q < n_qubits; ++q) {
        model.templates.push_back(
            make_template("relaxation", q, embed(qubit_lowering(), q, layout), 1.0));
        model.templates.push_back(
            make_template("dephasing", q, embed(qubit_sigma_z(), q, layout), 0.5));
    }
    return model;
}

GateModel parallel(const std::vector<GateModel>& models, bool pad) {
    if (models.empty()) throw ValidationError("parallel: need at least one model");

    double tau_max = 0.0;
    for (const auto& m : models) tau_max = std::max(tau_max, m.schedule.tau_total());
    if (!pad)
        for (const auto& m : models)
            if (std::abs(m.schedule.tau_total() - tau_max) > 1e-15 * tau_max)
                throw ValidationError("parallel: schedules have different durations and "
                                      "padding is disabled");

    std::vector<int> dims;
    std::vector<std::array<int, 2>> cmp_levels;
    std::vector<int> site_offset(models.size());
    for (std::size_t m = 0; m < models.size(); ++m) {
        site_offset[m] = static_cast<int>(dims.size());
        const auto& l = models[m].layout;
        dims.insert(dims.end(), l.dims().begin(), l.dims().end());
        cmp_levels.insert(cmp_levels.end(), l.cmp_levels().begin(), l.cmp_levels().end());
    }
    auto layout = SystemLayout::compose(dims, cmp_levels);

    // union of segment boundaries across models
    std::vector<double> cuts{0.0};
    for (const auto& m : models) {
        double t = 0.0;
        for (const auto& seg : m.schedule.segments()) {
            t += seg.duration;
            cuts.push_back(std::min(t, tau_max));
        }
    }
    cuts.push_back(tau_max);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [&](double a, double b) { return b - a < 1e-15 * tau_max; }),
               cuts.end());

    const auto generator_at = [](const GateModel& m, double t) -> const Matrix* {
        double t0 = 0.0;
        for (const auto& seg : m.schedule.segments()) {
            if (t < t0 + seg.duration) return &seg.generator;
            t0 += seg.duration;
        }
        return nullptr;  // past the end: idle padding
    };

    // dims to the left/right of each model's block, for Kronecker placement
    std::vector<Eigen::Index> left(models.size(), 1), right(models.size(), 1);
    for (std::size_t m = 0; m < models.size(); ++m) {
        for (std::size_t k = 0; k < m; ++k) left[m] *= models[k].layout.full_dim();
        for (std::size_t k = m + 1; k < models.size(); ++k)
            right[m] *= models[k].layout.full_dim();
    }
    const auto embed_block = [&](const Matrix& op, std::size_t m) {
        return kron(kron(Matrix::Identity(left[m], left[m]), op),
                    Matrix::Identity(right[m], right[m]));
    };

    std::vector<Segment> segments;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        Matrix h = Matrix::Zero(layout.full_dim(), layout.full_dim());
        for (std::size_t m = 0; m < models.size(); ++m)
            if (const Matrix* g = generator_at(models[m], mid)) h += embed_block(*g, m);
        segments.push_back({std::move(h), cuts[k + 1] - cuts[k]});
    }

    Matrix target = models[0].ideal_gate();
    for (std::size_t m = 1; m < models.size(); ++m) target = kron(target, models[m].ideal_gate());

    PhaseConvention convention = PhaseConvention::exact;
    for (const auto& m : models)
        if (m.schedule.phase_convention() == PhaseConvention::global_phase)
            convention = PhaseConvention::global_phase;

    std::string name = "parallel(";
    for (std::size_t m = 0; m < models.size(); ++m)
        name += (m ? "," : "") + models[m].name;
    name += ")";

    GateModel out{std::move(name), layout,
                  HamiltonianSchedule(layout, std::move(segments), std::move(target), convention),
                  {}};
    for (std::size_t m = 0; m < models.size(); ++m)
        for (const auto& t : models[m].templates)
            out.templates.push_back(make_template(
                t.kind, t.site + site_offset[m],
                OperatorMatrix(layout, embed_block(t.jump.data, m)), t.convention));
    return out;
}

const std::vector<std::string>& builtin_gate_names() {
    static const std::vector<std::string> names{"cz", "rydberg_cz", "cczs", "iswap", "idle",
                                                "parallel"};
    return names;
}

}  // namespace gatefid
