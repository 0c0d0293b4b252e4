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

#include "fsscomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fsscomp/errors.hpp"
#include "fsscomp/numerics.hpp"

namespace fsscomp::oracle {
namespace {

using cplx = std::complex<double>;

constexpr double kSimpsonTolerance = 1e-13;
constexpr double kBisectionTolerance = 1e-15;
constexpr double kTrainLengths = 30.0;
// Points this close (in grid steps) to a front edge are excluded from comparisons.
constexpr double kEdgeGuard = numerics::kInterpolationTaps / 2.0;

ModeProfile mode_along(const TwoPhotonBranch &branch, int photon) {
    const bool first = photon == 1;
    ModeProfile mode;
    mode.amp = branch.amp;
    mode.phase0 = branch.phase0;
    mode.env = first ? branch.env1 : branch.env2;
    mode.kappa = first ? branch.kappa1 : branch.kappa2;
    mode.edge_scale = first ? branch.wedge.s1 : branch.wedge.s2;
    mode.edge_offset = first ? branch.wedge.t1 : branch.wedge.t2;
    return mode;
}

// mode / exp(i carrier x), zero past the front.
cplx demodulated(const ModeProfile &mode, double carrier, double x) {
    if (!(mode.edge_scale * x + mode.edge_offset < 0.0)) {
        return {0.0, 0.0};
    }
    return mode.amp * std::exp(cplx{mode.env * x, mode.phase0 + (mode.kappa - carrier) * x});
}

// Integral over [a, b] of clamp(alpha + beta x, 0, h).
double clamped_linear_integral(double alpha, double beta, double a, double b, double h) {
    std::array<double, 4> pts{a, b, a, a};
    int count = 2;
    if (beta != 0.0) {
        for (const double level : {0.0, h}) {
            const double root = (level - alpha) / beta;
            if (root > a && root < b) {
                pts[count++] = root;
            }
        }
    }
    std::sort(pts.begin(), pts.begin() + count);
    double total = 0.0;
    for (int k = 0; k + 1 < count; ++k) {
        const double mid = 0.5 * (pts[k] + pts[k + 1]);
        total += (pts[k + 1] - pts[k]) * std::clamp(alpha + beta * mid, 0.0, h);
    }
    return total;
}

struct Line {
    double slope;
    double offset;
    double at(double x) const { return slope * x + offset; }
};

struct Region {
    double p;  // x1 < p
    Line a;
    Line b;
    double lower(double x) const { return std::min(a.at(x), b.at(x)); }
    // Crossing of the two bounding lines, or NaN when parallel.
    double kink() const {
        if (a.slope == b.slope) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return (b.offset - a.offset) / (a.slope - b.slope);
    }
};

Line upper_line(const Wedge &w) { return Line{w.s1 / w.s2, (w.t1 - w.t2) / w.s2}; }

}  // namespace

double SampledWave::norm() const {
    double sum = 0.0;
    for (const auto &v : envelope) {
        sum += std::norm(v);
    }
    return sum * dx;
}

SampledWave SampledWave::sample(const ModeProfile &mode, Pol pol, double extent, std::size_t n,
                                double carrier) {
    if (n < 2 || !(extent > 0.0)) {
        throw InvalidArgument("sampled wave needs n >= 2 and a positive extent");
    }
    SampledWave wave;
    wave.dx = extent / static_cast<double>(n - 1);
    wave.x_min = -extent;
    wave.carrier = carrier;
    wave.pol = pol;
    wave.envelope.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        wave.envelope[i] = demodulated(mode, carrier, wave.position(i));
    }
    return wave;
}

double numerical_transit_time(const CellParams &cell, const RampProfile &ramp, Pol pol, double x) {
    const double t_in = (ramp.lead_in - x) / kConstants.c;
    const std::function<double(double)> speed = [&](double tau) {
        return pol == Pol::V ? instantaneous_speed(cell, ramp, t_in + tau) : cell.v0;
    };
    const std::function<double(double)> excess = [&](double duration) {
        return numerics::adaptive_simpson(speed, 0.0, duration, kSimpsonTolerance) -
               cell.thickness;
    };
    double hi = 4.0 * cell.thickness / speed(0.0);
    for (int i = 0; excess(hi) < 0.0; ++i) {
        if (i > 60) {
            throw NumericalError("could not bracket the transit time");
        }
        hi *= 2.0;
    }
    return numerics::bisect(excess, 0.0, hi, kBisectionTolerance);
}

SampledWave propagate_grid(const SampledWave &wave, const CellParams &cell,
                           const RampProfile &ramp) {
    const std::size_t n = wave.size();
    if (n < 2) {
        throw InvalidArgument("propagate_grid needs at least two samples");
    }
    const double c = kConstants.c;
    const double reference = numerical_transit_time(cell, ramp, Pol::V, 0.0);

    // shift[j] = y_j - x_j: output position minus input position in the V reference frame.
    std::vector<double> shift(n);
    for (std::size_t j = 0; j < n; ++j) {
        shift[j] = c * (reference - numerical_transit_time(cell, ramp, wave.pol, wave.position(j)));
    }
    std::vector<double> slope(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t lo = j == 0 ? 0 : j - 1;
        const std::size_t hi = j + 1 == n ? n - 1 : j + 1;
        slope[j] = wave.dx + (shift[hi] - shift[lo]) / static_cast<double>(hi - lo);
        if (!(slope[j] > 0.0)) {
            throw NumericalError("propagated sample positions are not monotone");
        }
    }
    // Transported envelope values living at y_j.
    std::vector<cplx> carried(n);
    for (std::size_t j = 0; j < n; ++j) {
        carried[j] = wave.envelope[j] * std::sqrt(wave.dx / slope[j]) *
                     std::polar(1.0, -wave.carrier * shift[j]);
    }

    SampledWave out = wave;
    std::size_t j = 0;
    for (std::size_t m = 0; m < n; ++m) {
        // distance from y_j to the output point Y_m, computed without the large x_min
        const auto gap = [&](std::size_t idx) {
            return (static_cast<double>(m) - static_cast<double>(idx)) * wave.dx - shift[idx];
        };
        while (j + 1 < n && gap(j + 1) >= 0.0) {
            ++j;
        }
        double u;
        if (gap(j) < 0.0) {
            u = static_cast<double>(j) + gap(j) / slope[j];
        } else if (j + 1 < n) {
            const double span = gap(j) - gap(j + 1);
            u = static_cast<double>(j) + gap(j) / span;
        } else {
            u = static_cast<double>(j) + gap(j) / slope[j];
        }
        const auto stencil = numerics::kaiser_sinc_stencil(u);
        cplx value{0.0, 0.0};
        for (int k = 0; k < numerics::kInterpolationTaps; ++k) {
            const long idx = stencil.first + k;
            if (idx >= 0 && idx < static_cast<long>(n)) {
                value += stencil.weights[k] * carried[static_cast<std::size_t>(idx)];
            }
        }
        out.envelope[m] = value;
    }
    return out;
}

double dominant_wavenumber(const SampledWave &wave) {
    const std::size_t n = wave.size();
    const double bin = 2.0 * kPi / (static_cast<double>(n) * wave.dx);
    double best_k = 0.0;
    double best = -1.0;
    const long half = static_cast<long>(n / 2);
    for (long m = -half; m < half; ++m) {
        const double k = bin * static_cast<double>(m);
        cplx sum{0.0, 0.0};
        const cplx step = std::polar(1.0, -k * wave.dx);
        cplx phasor = std::polar(1.0, -k * wave.x_min);
        for (std::size_t j = 0; j < n; ++j) {
            sum += wave.envelope[j] * phasor;
            phasor *= step;
        }
        if (std::abs(sum) > best) {
            best = std::abs(sum);
            best_k = k;
        }
    }
    return wave.carrier + best_k;
}

PolDensityMatrix density_matrix_grid(const TwoPhotonState &state, int n) {
    if (n < 512) {
        throw InvalidArgument("density_matrix_grid needs at least 512 points per axis");
    }
    double min_env = std::numeric_limits<double>::infinity();
    double top = 0.0;
    for (const auto &b : state.branches) {
        b.check_integrable();
        min_env = std::min({min_env, b.env1, b.env2});
        top = std::max(top, -b.wedge.t1 / b.wedge.s1);
    }
    // env = gamma / 2c, so 15 / env is 30 coherence lengths.
    const double extent = kTrainLengths / (2.0 * min_env) + top;
    const double h = extent / n;
    const double grid_lo = top - extent;
    std::vector<double> lo(n);
    std::vector<double> mid(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = grid_lo + i * h;
        mid[i] = lo[i] + 0.5 * h;
    }

    PolDensityMatrix out;
    const std::size_t count = state.branches.size();
    for (std::size_t ia = 0; ia < count; ++ia) {
        for (std::size_t ib = ia; ib < count; ++ib) {
            const TwoPhotonBranch &A = state.branches[ia];
            const TwoPhotonBranch &B = state.branches[ib];
            const cplx a1{A.env1 + B.env1, A.kappa1 - B.kappa1};
            const cplx a2{A.env2 + B.env2, A.kappa2 - B.kappa2};
            std::vector<cplx> e1(n);
            std::vector<cplx> e2(n);
            for (int i = 0; i < n; ++i) {
                e1[i] = std::exp(a1 * mid[i]);
                e2[i] = std::exp(a2 * mid[i]);
            }
            const Region region{std::min(-A.wedge.t1 / A.wedge.s1, -B.wedge.t1 / B.wedge.s1),
                                upper_line(A.wedge), upper_line(B.wedge)};
            const double kink = region.kink();

            cplx total{0.0, 0.0};
            for (int i = 0; i < n; ++i) {
                const double xa = lo[i];
                const double xb = std::min(lo[i] + h, region.p);
                if (!(xb > xa)) {
                    continue;
                }
                const bool kinked = !std::isnan(kink) && kink > xa && kink < xb;
                const double g_a = region.lower(xa);
                const double g_b = region.lower(xb);
                const double g_min = std::min(g_a, g_b);
                const double g_max = kinked ? std::max({g_a, g_b, region.lower(kink)})
                                            : std::max(g_a, g_b);
                const double width = (xb - xa) / h;
                cplx column{0.0, 0.0};
                for (int j = 0; j < n; ++j) {
                    double coverage;
                    if (lo[j] + h <= g_min) {
                        coverage = width;
                    } else if (lo[j] >= g_max) {
                        break;
                    } else {
                        double area = 0.0;
                        const auto add_piece = [&](double a, double b) {
                            const double m = 0.5 * (a + b);
                            const Line &line = region.a.at(m) <= region.b.at(m) ? region.a
                                                                                  : region.b;
                            area += clamped_linear_integral(line.offset - lo[j], line.slope, a, b,
                                                            h);
                        };
                        if (kinked) {
                            add_piece(xa, kink);
                            add_piece(kink, xb);
                        } else {
                            add_piece(xa, xb);
                        }
                        coverage = area / (h * h);
                    }
                    column += coverage * e2[j];
                }
                total += column * e1[i];
            }
            const cplx prefactor = A.amp * std::conj(B.amp) * std::polar(1.0, A.phase0 - B.phase0);
            const cplx entry = prefactor * total * h * h;
            const int r = pair_index(A.pol1, A.pol2);
            const int col = pair_index(B.pol1, B.pol2);
            out.rho(r, col) += entry;
            if (ib != ia) {
                out.rho(col, r) += std::conj(entry);
            }
        }
    }
    return out;
}

TransformErrorReport compare_transform(const TwoPhotonState &state, const CellParams &cell,
                                       const RampProfile &ramp, int photon, std::size_t n,
                                       double scale_corruption) {
    if (photon != 1 && photon != 2) {
        throw InvalidArgument("photon index must be 1 or 2");
    }
    TransformErrorReport report;
    for (const auto &branch : state.branches) {
        branch.check_integrable();
        const Pol pol = photon == 1 ? branch.pol1 : branch.pol2;
        const ModeProfile mode = mode_along(branch, photon);
        const double extent = kTrainLengths / (2.0 * mode.env);
        const SampledWave input = SampledWave::sample(mode, pol, extent, n, mode.kappa);
        const SampledWave propagated = propagate_grid(input, cell, ramp);

        CoordinateMap map = cell_coordinate_map(pol, cell, ramp);
        if (pol == Pol::V) {
            map.scale *= scale_corruption;
        }
        const ModeProfile closed = apply_map(mode, map);
        const double front = closed.front();

        std::vector<cplx> expected(n);
        std::vector<bool> used(n, false);
        double peak = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double y = propagated.position(m);
            used[m] = std::abs(y - front) >= kEdgeGuard * input.dx;
            expected[m] = demodulated(closed, mode.kappa, y);
            if (used[m]) {
                peak = std::max(peak, std::abs(expected[m]));
            }
        }
        double diff2 = 0.0;
        double ref2 = 0.0;
        double phase_error = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            if (!used[m]) {
                continue;
            }
            diff2 += std::norm(propagated.envelope[m] - expected[m]);
            ref2 += std::norm(expected[m]);
            if (std::abs(expected[m]) > 1e-3 * peak) {
                phase_error = std::max(
                    phase_error, std::abs(std::arg(propagated.envelope[m] * std::conj(expected[m]))));
            }
        }
        BranchTransformError err{pol, ref2 > 0.0 ? std::sqrt(diff2 / ref2) : std::sqrt(diff2),
                                 phase_error};
        report.l2_error = std::max(report.l2_error, err.l2_error);
        report.max_phase_error = std::max(report.max_phase_error, err.max_phase_error);
        report.branches.push_back(err);
    }
    return report;
}

}  // namespace fsscomp::oracle
