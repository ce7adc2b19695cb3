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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gatefid/gates.hpp"
#include "gatefid/operators.hpp"
#include "gatefid/schedule.hpp"

using namespace gatefid;

namespace {

// closed-form CZ propagator: identity except the {|11>,|20>} rotation block
Matrix cz_closed_form(const SystemLayout& layout, double lambda, double t) {
    Matrix u = Matrix::Identity(9, 9);
    const auto i11 = layout.index_of({1, 1});
    const auto i20 = layout.index_of({2, 0});
    u(i11, i11) = u(i20, i20) = std::cos(lambda * t);
    u(i11, i20) = u(i20, i11) = Complex(0.0, -std::sin(lambda * t));
    return u;
}

Matrix random_hermitian(Eigen::Index n, double scale, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix h = 0.5 * (m + m.adjoint());
    const double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
    return h * (scale / norm);
}

// independent oracle: 12th-order Taylor with scaling and squaring
Matrix expm_taylor(const Matrix& h, double t) {
    Matrix a = Complex(0.0, -t) * h;
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.1) {
        a *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Matrix term = Matrix::Identity(h.rows(), h.cols());
    Matrix sum = term;
    for (int k = 1; k <= 12; ++k) {
        term = Matrix(term * a) / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = Matrix(sum * sum);
    return sum;
}

}  // namespace

TEST_CASE("CZ propagator matches the closed form") {
    const double lambda = 1.3, tau = M_PI / lambda;
    const GateModel cz = transmon_cz(lambda, tau);
    PropagatorCache cache(cz.schedule);

    for (double frac : {0.0, 0.21, 0.5, 0.77, 1.0}) {
        const double t = frac * tau;
        CHECK(max_abs(Matrix(cache.propagator_at(t) - cz_closed_form(cz.layout, lambda, t))) <
              1e-12);
    }
}

TEST_CASE("propagator basics") {
    const GateModel cz = transmon_cz(1.0, M_PI);
    PropagatorCache cache(cz.schedule);

    SECTION("t = 0 is the identity") {
        CHECK(max_abs(Matrix(cache.propagator_at(0.0) - Matrix::Identity(9, 9))) < 1e-14);
    }

    SECTION("t out of range throws") {
        CHECK_THROWS_AS(cache.propagator_at(-0.5), ValidationError);
        CHECK_THROWS_AS(cache.propagator_at(2.0 * M_PI), ValidationError);
    }

    SECTION("unitarity at 100 random times") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> pick(0.0, M_PI);
        for (int k = 0; k < 100; ++k) {
            const Matrix u = cache.propagator_at(pick(rng));
            CHECK(max_abs(Matrix(u.adjoint() * u - Matrix::Identity(9, 9))) < 1e-10);
        }
    }

    SECTION("composition within a segment") {
        const double t1 = 0.4, t2 = 1.1;
        const Matrix u_sum = cache.propagator_at(t1 + t2);
        const Matrix u_step = expm_hermitian(cz.schedule.segments()[0].generator, t2) *
                              cache.propagator_at(t1);
        CHECK(max_abs(Matrix(u_sum - u_step)) < 1e-10);
    }
}

TEST_CASE("Heisenberg-evolved CZ jump operators match their closed forms") {
    auto layout = SystemLayout::compose({3, 3});
    const double lambda = 1.0;
    const GateModel cz = transmon_cz(lambda, M_PI);
    PropagatorCache cache(cz.schedule);
    Matrix lower = Matrix::Zero(3, 3);
    lower(0, 1) = 1.0;
    lower(1, 2) = std::sqrt(2.0);

    SECTION("relaxation on qubit 1") {
        for (double t : {0.3, 1.7}) {
            const double c = std::cos(lambda * t), s = std::sin(lambda * t);
            const Matrix lt = cache.heisenberg_jump(embed(lower, 0, layout).data, t);
            // full comparison against U^dag L U with the closed-form U
            const Matrix u = cz_closed_form(layout, lambda, t);
            CHECK(max_abs(Matrix(lt - u.adjoint() * embed(lower, 0, layout).data * u)) < 1e-12);
            // spot-check the closed-form entries
            CHECK(std::abs(lt(layout.index_of({0, 0}), layout.index_of({1, 0})) - 1.0) < 1e-12);
            CHECK(std::abs(lt(layout.index_of({0, 1}), layout.index_of({1, 1})) - c) < 1e-12);
            CHECK(std::abs(lt(layout.index_of({1, 0}), layout.index_of({2, 0})) -
                           std::sqrt(2.0) * c) < 1e-12);
            CHECK(std::abs(lt(layout.index_of({0, 1}), layout.index_of({2, 0})) -
                           Complex(0.0, -s)) < 1e-12);
            CHECK(std::abs(lt(layout.index_of({1, 0}), layout.index_of({1, 1})) -
                           Complex(0.0, -std::sqrt(2.0) * s)) < 1e-12);
        }
    }

    SECTION("relaxation on qubit 2") {
        const double t = 0.9;
        const double c = std::cos(lambda * t), s = std::sin(lambda * t);
        const Matrix lt = cache.heisenberg_jump(embed(lower, 1, layout).data, t);
        CHECK(std::abs(lt(layout.index_of({0, 0}), layout.index_of({0, 1})) - 1.0) < 1e-12);
        CHECK(std::abs(lt(layout.index_of({1, 0}), layout.index_of({1, 1})) - c) < 1e-12);
        CHECK(std::abs(lt(layout.index_of({1, 0}), layout.index_of({2, 0})) -
                       Complex(0.0, -s)) < 1e-12);
        CHECK(std::abs(lt(layout.index_of({1, 0}), layout.index_of({2, 0})).imag()) ==
              Catch::Approx(s));  // magnitude drives every trace downstream
    }

    SECTION("identity jump is inert") {
        const Matrix lt = cache.heisenberg_jump(Matrix::Identity(9, 9), 1.2);
        CHECK(max_abs(Matrix(lt - Matrix::Identity(9, 9))) < 1e-12);
    }

    SECTION("full-space traces are preserved, cmp trace is not") {
        Matrix lphi = Matrix::Zero(3, 3);
        lphi(1, 1) = 1.0;
        lphi(2, 2) = 2.0;
        const Matrix l0 = embed(lphi, 0, layout).data;
        for (double t : {0.4, 2.2}) {
            const Matrix lt = cache.heisenberg_jump(l0, t);
            CHECK(std::abs(lt.trace() - l0.trace()) < 1e-12);
            CHECK(std::abs((lt.adjoint() * lt).trace() - (l0.adjoint() * l0).trace()) < 1e-11);
        }
        // cmp-restricted second moment does change mid-gate
        const Matrix lt = cache.heisenberg_jump(l0, 0.7);
        double tr_cmp_t = 0.0, tr_cmp_0 = 0.0;
        for (Eigen::Index i : layout.cmp_indices()) {
            tr_cmp_t += lt.col(i).squaredNorm();
            tr_cmp_0 += l0.col(i).squaredNorm();
        }
        CHECK(std::abs(tr_cmp_t - tr_cmp_0) > 0.1);
    }
}

TEST_CASE("eigendecomposition exponential matches a Taylor reference") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 8; ++k) {
        const Matrix h = random_hermitian(9, 10.0, rng);
        const Matrix via_eigen = expm_hermitian(h, 1.0);
        const Matrix via_taylor = expm_taylor(h, 1.0);
        CHECK(max_abs(Matrix(via_eigen - via_taylor)) < 1e-10);
    }
}

TEST_CASE("ideal_gate_check") {
    SECTION("perfect CZ passes to 1e-10") {
        CHECK(ideal_gate_check(transmon_cz(1.0, M_PI).schedule) < 1e-10);
    }

    SECTION("coherent error is visible") {
        CHECK(ideal_gate_check(transmon_cz(0.9, M_PI).schedule) > 0.01);
    }

    SECTION("iSWAP at nominal time passes") {
        CHECK(ideal_gate_check(iswap(1.0, M_PI / 2.0).schedule) < 1e-10);
    }

    SECTION("global-phase convention quotients exactly a global phase") {
        auto layout = SystemLayout::compose({2});
        Matrix h = Matrix::Zero(2, 2);
        h(0, 0) = 1.0;
        h(1, 1) = 1.0;  // pure global phase generator
        const Matrix target = Matrix::Identity(2, 2);
        HamiltonianSchedule strict(layout, {{h, 0.3}}, target, PhaseConvention::exact);
        HamiltonianSchedule quotiented(layout, {{h, 0.3}}, target,
                                       PhaseConvention::global_phase);
        CHECK(ideal_gate_check(strict) > 0.01);
        CHECK(ideal_gate_check(quotiented) < 1e-12);
    }
}

TEST_CASE("schedule validation") {
    auto layout = SystemLayout::compose({2});
    Matrix h = Matrix::Zero(2, 2);
    h(0, 1) = 1.0;  // not Hermitian

    CHECK_THROWS_AS(HamiltonianSchedule(layout, {{h, 1.0}}, Matrix::Identity(2, 2)),
                    ValidationError);
    Matrix herm = h + Matrix(h.adjoint());
    CHECK_THROWS_AS(HamiltonianSchedule(layout, {{herm, -1.0}}, Matrix::Identity(2, 2)),
                    ValidationError);
    Matrix not_unitary = 2.0 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(HamiltonianSchedule(layout, {{herm, 1.0}}, not_unitary), ValidationError);
}

TEST_CASE("Rydberg propagator protocol checks") {
    const GateModel ryd = rydberg_cz(1.0);
    PropagatorCache cache(ryd.schedule);
    const double tau = ryd.schedule.report_tau();
    const auto& layout = ryd.layout;

    SECTION("first pulse drives a perfect detuned Rabi cycle on |11>") {
        const Matrix u1 = cache.propagator_at(tau);
        const Eigen::Index i11 = layout.index_of({1, 1});
        CHECK(std::abs(std::abs(u1(i11, i11)) - 1.0) < 1e-9);
        // phase -e^{i Delta tau / 2}
        const double delta = 0.377371;
        const double expected = M_PI + 0.5 * delta * tau;
        const double phase = std::arg(u1(i11, i11));
        const double diff = std::remainder(phase - expected, 2.0 * M_PI);
        CHECK(std::abs(diff) < 1e-9);
    }

    SECTION("full protocol returns |10> and |11> with the protocol phases") {
        const Matrix u = cache.propagator_at(2.0 * tau);
        const Eigen::Index i10 = layout.index_of({1, 0});
        const Eigen::Index i11 = layout.index_of({1, 1});
        const Eigen::Index i01 = layout.index_of({0, 1});
        CHECK(std::abs(std::abs(u(i10, i10)) - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(u(i11, i11)) - 1.0) < 1e-9);

        // phi_11 = Delta * tau exactly (full |11><->|W> cycles per pulse)
        const double delta_tau = 0.377371 * tau;
        CHECK(std::abs(std::remainder(std::arg(u(i11, i11)) - delta_tau, 2.0 * M_PI)) < 1e-6);

        // single-qubit phase symmetric between the atoms
        CHECK(std::abs(u(i10, i10) - u(i01, i01)) < 1e-9);

        // CZ phase relation phi_11 = 2 phi_10 - pi (mod 2pi)
        const double phi10 = std::arg(u(i10, i10));
        const double phi11 = std::arg(u(i11, i11));
        CHECK(std::abs(std::remainder(2.0 * phi10 - M_PI - phi11, 2.0 * M_PI)) < 1e-3);

        // the realized single-qubit phase is 2pi - xi = 2.380765, not the
        // 3.925 quoted alongside the protocol; see the acceptance report
        CHECK(std::abs(std::remainder(phi10 - (2.0 * M_PI - 3.90242), 2.0 * M_PI)) < 1e-3);
    }

    SECTION("blockade: |11> never reaches |rr>") {
        const Eigen::Index irr = layout.index_of({2, 2});
        const Eigen::Index i11 = layout.index_of({1, 1});
        for (double frac : {0.3, 0.8, 1.4, 1.9}) {
            const Matrix u = cache.propagator_at(frac * tau);
            CHECK(std::abs(u(irr, i11)) < 1e-12);
        }
    }
}
