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

#ifndef FSSCOMP_NUMERICS_HPP
#define FSSCOMP_NUMERICS_HPP

#include <array>
#include <functional>
#include <vector>

namespace fsscomp::numerics {

/// Adaptive Simpson quadrature of f over [a, b] to the given relative tolerance.
/// Throws NumericalError if max_depth is exhausted without meeting it.
double adaptive_simpson(const std::function<double(double)> &f, double a, double b,
                        double rel_tol, int max_depth = 40);

/// Root of a monotone g on [lo, hi] by bisection; g(lo) and g(hi) must bracket 0.
/// Stops when the bracket is narrower than rel_tol * |hi|.
double bisect(const std::function<double(double)> &g, double lo, double hi, double rel_tol,
              int max_iterations = 400);

/// Gauss-Hermite rule for integrals against exp(-z^2): nodes and weights.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_hermite(int n);

/// Windowed-sinc interpolation weights for fractional position u relative to
/// taps floor(u) - 3 ... floor(u) + 4 (8 taps, Kaiser window).
inline constexpr int kInterpolationTaps = 8;
struct InterpolationStencil {
    long first = 0;
    std::array<double, kInterpolationTaps> weights{};
};
InterpolationStencil kaiser_sinc_stencil(double u, double beta = 8.0);

/// Wraps to (-pi, pi].
double wrap_phase(double phase);

}  // namespace fsscomp::numerics

#endif
