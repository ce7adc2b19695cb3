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

#include "gatefid/budget.hpp"
#include "gatefid/gates.hpp"
#include "gatefid/pauli.hpp"

using namespace gatefid;

namespace {

Matrix random_matrix(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

constexpr double kCzG1q1 = 0.5;
constexpr double kCzG1q2 = 0.3;
constexpr double kCzGphiQ1 = 61.0 / 80.0;
constexpr double kCzGphiQ2 = 29.0 / 80.0;

}  // namespace

TEST_CASE("delta_f on evolved CZ jump operators") {
    const double lambda = 1.0;
    const GateModel cz = transmon_cz(lambda, M_PI);
    PropagatorCache cache(cz.schedule);
    const auto& layout = cz.layout;

    SECTION("relaxation q1: -(1/5)(2 + sin^2)") {
        for (double t : {0.0, 0.43, 1.1, 2.9}) {
            const double s2 = std::pow(std::sin(lambda * t), 2);
            const OperatorMatrix lt(layout,
                                    cache.heisenberg_jump(cz.templates[0].jump.data, t));
            CHECK(delta_f(lt) == Catch::Approx(-(2.0 + s2) / 5.0).margin(1e-12));
        }
    }

    SECTION("sigma_z on one of N qubits gives -d/(d+1), time independent") {
        for (int n : {1, 2, 3}) {
            auto layout_n = SystemLayout::compose(std::vector<int>(n, 2));
            const double d = static_cast<double>(layout_n.cmp_dim());
            Matrix sz = Matrix::Zero(2, 2);
            sz(0, 0) = 1.0;
            sz(1, 1) = -1.0;
            CHECK(delta_f(embed(sz, 0, layout_n)) ==
                  Catch::Approx(-d / (d + 1.0)).margin(1e-12));
        }
    }

    SECTION("zero operator gives zero") {
        CHECK(delta_f(OperatorMatrix(layout, Matrix::Zero(9, 9))) == 0.0);
    }

    SECTION("CCZS relaxation q1: -(1/9)(5 - cos(2 pi t / tau))") {
        const GateModel g = cczs(1.0, 0.7);
        PropagatorCache c3(g.schedule);
        const double tau = g.schedule.tau_total();
        for (double frac : {0.1, 0.37, 0.62, 0.95}) {
            const double t = frac * tau;
            const OperatorMatrix lt(g.layout,
                                    c3.heisenberg_jump(g.templates[0].jump.data, t));
            const double expected = -(5.0 - std::cos(2.0 * M_PI * t / tau)) / 9.0;
            CHECK(delta_f(lt) == Catch::Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("delta_f_subspace closed forms") {
    SECTION("sigma_minus on one of N qubits: -d/(2(d+1))") {
        for (int n : {1, 2, 3}) {
            auto layout = SystemLayout::compose(std::vector<int>(n, 2));
            const double d = static_cast<double>(layout.cmp_dim());
            Matrix sm = Matrix::Zero(2, 2);
            sm(0, 1) = 1.0;
            CHECK(delta_f_subspace(embed(sm, 0, layout)) ==
                  Catch::Approx(-d / (2.0 * (d + 1.0))).margin(1e-12));
        }
    }

    SECTION("sigma_z on a single qubit: -2/3") {
        auto layout = SystemLayout::compose({2});
        Matrix sz = Matrix::Zero(2, 2);
        sz(0, 0) = 1.0;
        sz(1, 1) = -1.0;
        CHECK(delta_f_subspace(OperatorMatrix(layout, sz)) ==
              Catch::Approx(-2.0 / 3.0).margin(1e-12));
    }

    SECTION("identity on the subspace: 0") {
        auto layout = SystemLayout::compose({2, 2});
        CHECK(delta_f_subspace(OperatorMatrix(layout, Matrix::Identity(4, 4))) ==
              Catch::Approx(0.0).margin(1e-15));
    }
}

TEST_CASE("delta_f_parallel") {
    const double lambda = 1.0;
    const GateModel cz = transmon_cz(lambda, M_PI);
    PropagatorCache cache(cz.schedule);

    SECTION("CZ inside a 4-qubit system, relaxation q1: -(4/17)(2 + sin^2)") {
        for (double t : {0.2, 1.3}) {
            const double s2 = std::pow(std::sin(lambda * t), 2);
            const OperatorMatrix lt(cz.layout,
                                    cache.heisenberg_jump(cz.templates[0].jump.data, t));
            CHECK(delta_f_parallel(lt, 2, 4) ==
                  Catch::Approx(-(4.0 / 17.0) * (2.0 + s2)).margin(1e-12));
        }
    }

    SECTION("CZ inside a 4-qubit system, dephasing q2") {
        for (double t : {0.2, 1.3}) {
            const double c2 = std::pow(std::cos(lambda * t), 2);
            const OperatorMatrix lt(cz.layout,
                                    cache.heisenberg_jump(cz.templates[3].jump.data, t));
            const double expected = (1.0 / 17.0) * std::pow(1.0 + c2, 2) -
                                    (2.0 / 17.0) * (3.0 + std::cos(2.0 * lambda * t));
            CHECK(delta_f_parallel(lt, 2, 4) == Catch::Approx(expected).margin(1e-12));
        }
    }

    SECTION("m = N reduces to delta_f") {
        std::mt19937_64 rng(23);
        auto layout = SystemLayout::compose({2, 2});
        for (int k = 0; k < 10; ++k) {
            const OperatorMatrix op(layout, random_matrix(4, rng));
            CHECK(delta_f_parallel(op, 2, 2) == Catch::Approx(delta_f(op)).margin(1e-12));
        }
    }

    SECTION("m > N is rejected") {
        const OperatorMatrix op(SystemLayout::compose({2, 2}), Matrix::Zero(4, 4));
        CHECK_THROWS_AS(delta_f_parallel(op, 2, 1), ValidationError);
    }
}

TEST_CASE("delta_f properties") {
    SECTION("non-positive on 1000 random matrices") {
        auto layout = SystemLayout::compose({3, 3});
        std::mt19937_64 rng(7);
        for (int k = 0; k < 1000; ++k) {
            const OperatorMatrix op(layout, random_matrix(9, rng));
            CHECK(delta_f(op) <= 1e-12);
        }
    }

    SECTION("global phase invariance and outside-subspace conjugation invariance") {
        auto layout = SystemLayout::compose({3, 3});
        std::mt19937_64 rng(19);
        const OperatorMatrix op(layout, random_matrix(9, rng));
        const double base = delta_f(op);

        CHECK(delta_f(OperatorMatrix(layout, Matrix(std::exp(Complex(0, 0.83)) * op.data))) ==
              Catch::Approx(base).margin(1e-12));

        // unitary supported entirely outside cmp: acts on the 5 leakage states
        std::vector<Eigen::Index> leak;
        for (Eigen::Index i = 0; i < 9; ++i) {
            bool cmp = false;
            for (Eigen::Index c : layout.cmp_indices()) cmp |= (c == i);
            if (!cmp) leak.push_back(i);
        }
        const Matrix block = random_matrix(5, rng);
        Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Matrix w = svd.matrixU() * svd.matrixV().adjoint();
        Matrix u = Matrix::Identity(9, 9);
        for (std::size_t i = 0; i < leak.size(); ++i)
            for (std::size_t j = 0; j < leak.size(); ++j) u(leak[i], leak[j]) = w(i, j);
        const OperatorMatrix conj(layout, Matrix(u.adjoint() * op.data * u));
        CHECK(delta_f(conj) == Catch::Approx(base).margin(1e-11));
    }

    SECTION("time independence on the iSWAP model, 20 random times") {
        const GateModel gate = iswap(1.0, M_PI / 2.0);
        PropagatorCache cache(gate.schedule);
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> pick(0.0, gate.schedule.tau_total());
        for (const auto& tmpl : gate.templates) {
            const double reference = delta_f_subspace(tmpl.jump);
            for (int k = 0; k < 20; ++k) {
                const OperatorMatrix lt(gate.layout,
                                        cache.heisenberg_jump(tmpl.jump.data, pick(rng)));
                CHECK(delta_f(lt) == Catch::Approx(reference).margin(1e-12));
            }
        }
    }
}

TEST_CASE("channel_coefficient reproduces the CZ rationals") {
    const double tau = 1.0;
    const GateModel cz = transmon_cz(M_PI / tau, tau);
    PropagatorCache cache(cz.schedule);
    const QuadratureSpec quad;

    const auto coeff = [&](int tmpl_index) {
        NoiseChannel ch = cz.make_channel(cz.templates[tmpl_index].kind,
                                          cz.templates[tmpl_index].site, 1.0);
        return channel_coefficient(cache, ch, quad);
    };

    const ChannelCoefficient c1q1 = coeff(0);
    CHECK(c1q1.value == Catch::Approx(kCzG1q1).margin(1e-10));
    CHECK(c1q1.error_estimate <= quad.abs_tol);
    CHECK(coeff(2).value == Catch::Approx(kCzG1q2).margin(1e-10));
    CHECK(coeff(1).value == Catch::Approx(kCzGphiQ1).margin(1e-10));
    CHECK(coeff(3).value == Catch::Approx(kCzGphiQ2).margin(1e-10));
}

TEST_CASE("channel_coefficient at general lambda matches the closed form") {
    const double tau = 1.0;
    for (double ratio : {0.8, 0.9, 1.1}) {
        const double lambda = ratio * M_PI / tau;
        const GateModel cz = transmon_cz(lambda, tau);
        NoiseChannel relax = cz.make_channel("relaxation", 0, 1.0);
        const double c = channel_coefficient(cz.schedule, relax, {}).value;
        const double closed = 0.5 - std::sin(2.0 * lambda * tau) / (20.0 * lambda * tau);
        CHECK(c == Catch::Approx(closed).margin(1e-10));
    }
}

TEST_CASE("quadrature methods agree to 1e-12 on CZ integrands") {
    // trigonometric polynomials of degree <= 4 in lambda t: Gauss-Legendre 20
    // per segment is effectively exact
    const GateModel cz = transmon_cz(1.0, M_PI);
    PropagatorCache cache(cz.schedule);
    QuadratureSpec gl;
    gl.method = QuadratureMethod::gauss_legendre;
    for (const auto& tmpl : cz.templates) {
        NoiseChannel ch(tmpl.kind, tmpl.jump, 1.0, tmpl.convention, tmpl.site, tmpl.kind);
        const double simpson = channel_coefficient(cache, ch, {}).value;
        const double gauss = channel_coefficient(cache, ch, gl).value;
        CHECK(gauss == Catch::Approx(simpson).margin(1e-12));
    }
}

TEST_CASE("assemble_budget") {
    SECTION("CZ with all four channels at lambda tau = pi") {
        const GateModel cz = transmon_cz(M_PI, 1.0);
        const double rate = 1e-3;
        const FidelityBudget budget =
            assemble_budget(cz.schedule, cz.all_channels(rate), {});
        REQUIRE(budget.entries.size() == 4);
        const double expected[] = {kCzG1q1, kCzGphiQ1, kCzG1q2, kCzGphiQ2};
        double loss = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(budget.entries[k].coefficient == Catch::Approx(expected[k]).margin(1e-10));
            loss += budget.entries[k].contribution;
        }
        CHECK(budget.total == 1.0 - loss);  // exact assembly
        CHECK(budget.warnings.empty());
    }

    SECTION("linearity in rates: doubling Gamma doubles every contribution") {
        const GateModel cz = transmon_cz(M_PI, 1.0);
        const FidelityBudget one = assemble_budget(cz.schedule, cz.all_channels(1e-3), {});
        const FidelityBudget two = assemble_budget(cz.schedule, cz.all_channels(2e-3), {});
        for (std::size_t k = 0; k < one.entries.size(); ++k)
            CHECK(two.entries[k].contribution ==
                  Catch::Approx(2.0 * one.entries[k].contribution).epsilon(1e-14));
    }

    SECTION("first-order validity warning at Gamma tau > 0.1") {
        const GateModel cz = transmon_cz(M_PI, 1.0);
        const FidelityBudget budget = assemble_budget(cz.schedule, cz.all_channels(0.2), {});
        CHECK(!budget.warnings.empty());
    }

    SECTION("zero rates give exactly F = 1") {
        const GateModel cz = transmon_cz(M_PI, 1.0);
        const FidelityBudget budget = assemble_budget(cz.schedule, cz.all_channels(0.0), {});
        CHECK(budget.total == 1.0);
    }
}

TEST_CASE("imperfect_cz_budget closed forms") {
    SECTION("lambda tau = pi reduces to the perfect-CZ rationals") {
        const FidelityBudget b = imperfect_cz_budget(M_PI, 1.0, {1.0, 1.0, 1.0, 1.0});
        CHECK(b.entries[0].coefficient == Catch::Approx(kCzG1q1).margin(1e-12));
        CHECK(b.entries[1].coefficient == Catch::Approx(kCzG1q2).margin(1e-12));
        CHECK(b.entries[2].coefficient == Catch::Approx(kCzGphiQ1).margin(1e-12));
        CHECK(b.entries[3].coefficient == Catch::Approx(kCzGphiQ2).margin(1e-12));
    }

    SECTION("lambda tau -> 0 limit: relaxation q1 coefficient -> 2/5") {
        const FidelityBudget b = imperfect_cz_budget(1e-7, 1.0, {1.0, 0.0, 0.0, 0.0});
        CHECK(b.entries[0].coefficient == Catch::Approx(0.4).margin(1e-9));
    }

    SECTION("agrees with the quadrature path to 1e-9 at lambda = 0.9 pi/tau") {
        const double tau = 1.0, lambda = 0.9 * M_PI;
        const FidelityBudget closed = imperfect_cz_budget(lambda, tau, {1.0, 1.0, 1.0, 1.0});
        const GateModel cz = transmon_cz(lambda, tau);
        const FidelityBudget quad = assemble_budget(cz.schedule, cz.all_channels(1.0), {});
        // template order: q1 relax, q1 dephase, q2 relax, q2 dephase
        CHECK(quad.entries[0].coefficient ==
              Catch::Approx(closed.entries[0].coefficient).margin(1e-9));
        CHECK(quad.entries[2].coefficient ==
              Catch::Approx(closed.entries[1].coefficient).margin(1e-9));
        CHECK(quad.entries[1].coefficient ==
              Catch::Approx(closed.entries[2].coefficient).margin(1e-9));
        CHECK(quad.entries[3].coefficient ==
              Catch::Approx(closed.entries[3].coefficient).margin(1e-9));
    }
}

TEST_CASE("parallel-context coefficients reproduce the simultaneous-CZ rationals") {
    const GateModel cz = transmon_cz(M_PI, 1.0);
    PropagatorCache cache(cz.schedule);
    const ParallelContext ctx{2, 4};
    const double expected[] = {10.0 / 17.0, 61.0 / 68.0, 6.0 / 17.0, 29.0 / 68.0};
    for (std::size_t k = 0; k < cz.templates.size(); ++k) {
        NoiseChannel ch = cz.make_channel(cz.templates[k].kind, cz.templates[k].site, 1.0);
        CHECK(channel_coefficient(cache, ch, {}, ctx).value ==
              Catch::Approx(expected[k]).margin(1e-10));
    }
}
