// Copyright 2026 The fsscomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fsscomp/numerics.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fsscomp/errors.hpp"
#include "fsscomp/units.hpp"

namespace fsscomp::numerics {
namespace {

struct SimpsonState {
    const std::function<double(double)> &f;
    bool converged = true;
};

double simpson_recurse(SimpsonState &st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        st.converged = false;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)> &f, double a, double b,
                        double rel_tol, int max_depth) {
    SimpsonState st{f};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = rel_tol * std::abs(whole);
    const double result = simpson_recurse(st, a, b, fa, fm, fb, whole, tol, max_depth);
    if (!st.converged) {
        throw NumericalError("adaptive Simpson did not reach the requested tolerance");
    }
    return result;
}

double bisect(const std::function<double(double)> &g, double lo, double hi, double rel_tol,
              int max_iterations) {
    double g_lo = g(lo);
    const double g_hi = g(hi);
    if (g_lo == 0.0) {
        return lo;
    }
    if (g_hi == 0.0) {
        return hi;
    }
    if ((g_lo < 0.0) == (g_hi < 0.0)) {
        throw NumericalError("bisection bracket does not straddle a root");
    }
    for (int i = 0; i < max_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::abs(hi) || mid == lo || mid == hi) {
            return mid;
        }
        const double g_mid = g(mid);
        if (g_mid == 0.0) {
            return mid;
        }
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    throw NumericalError("bisection did not converge");
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1) {
        throw InvalidArgument("Gauss-Hermite order must be >= 1");
    }
    // Golub-Welsch: eigen-decomposition of the Jacobi matrix.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double off = std::sqrt(0.5 * i);
        jacobi(i, i - 1) = off;
        jacobi(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Gauss-Hermite eigen solver failed");
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mass = std::sqrt(kPi);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v = solver.eigenvectors()(0, i);
        rule.weights[i] = mass * v * v;
    }
    return rule;
}

InterpolationStencil kaiser_sinc_stencil(double u, double beta) {
    InterpolationStencil st;
    const double base = std::floor(u);
    st.first = static_cast<long>(base) - (kInterpolationTaps / 2 - 1);
    const double half = kInterpolationTaps / 2.0;
    const double norm = std::cyl_bessel_i(0.0, beta);
    double sum = 0.0;
    for (int k = 0; k < kInterpolationTaps; ++k) {
        const double dist = u - static_cast<double>(st.first + k);
        const double sinc = dist == 0.0 ? 1.0 : std::sin(kPi * dist) / (kPi * dist);
        const double r = dist / half;
        const double window =
            std::abs(r) >= 1.0 ? 0.0 : std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - r * r)) / norm;
        st.weights[k] = sinc * window;
        sum += st.weights[k];
    }
    for (double &w : st.weights) {
        w /= sum;
    }
    return st;
}

double wrap_phase(double phase) {
    double wrapped = std::remainder(phase, 2.0 * kPi);
    if (wrapped <= -kPi) {
        wrapped += 2.0 * kPi;
    }
    return wrapped;
}

}  // namespace fsscomp::numerics
