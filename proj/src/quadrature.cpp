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

#include "gatefid/quadrature.hpp"

#include <cmath>
#include <vector>

#include "gatefid/core.hpp"

namespace gatefid {

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    int evaluations_left;
    double error_sum = 0.0;
};

double simpson(double fa, double fm, double fb, double h6) { return h6 * (fa + 4.0 * fm + fb); }

double adaptive_step(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    if ((st.evaluations_left -= 2) < 0)
        throw NumericalError("quadrature: adaptive Simpson did not converge within budget");
    const double flm = (*st.f)(lm);
    const double frm = (*st.f)(rm);
    const double left = simpson(fa, flm, fm, (m - a) / 6.0);
    const double right = simpson(fm, frm, fb, (b - m) / 6.0);
    const double err = (left + right - whole) / 15.0;
    if (depth > 60) throw NumericalError("quadrature: step-size underflow");
    if (std::abs(err) <= tol || (b - a) < 1e-300) {
        st.error_sum += std::abs(err);
        return left + right + err;  // Richardson-extrapolated
    }
    return adaptive_step(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_step(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec) {
    SimpsonState st{&f, spec.max_subdivisions, 0.0};
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, (b - a) / 6.0);
    const double value = adaptive_step(st, a, b, fa, fm, fb, whole, spec.abs_tol, 0);
    return {value, st.error_sum};
}

// Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

double gl_sum(const std::function<double(double)>& f, double a, double b, int order) {
    std::vector<double> x, w;
    gauss_legendre_nodes(order, x, w);
    const double c = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += w[i] * f(mid + c * x[i]);
    return c * s;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
    if (!(b >= a)) throw ValidationError("quadrature: bad interval");
    if (a == b) return {0.0, 0.0};
    if (spec.method == QuadratureMethod::adaptive_simpson) return adaptive_simpson(f, a, b, spec);
    const double v1 = gl_sum(f, a, b, spec.gl_order);
    const double v2 = gl_sum(f, a, b, spec.gl_order + 8);
    return {v2, std::abs(v2 - v1)};
}

}  // namespace gatefid
