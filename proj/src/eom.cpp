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

#include "fsscomp/eom.hpp"

#include <cmath>
#include <sstream>

#include "fsscomp/errors.hpp"

namespace fsscomp {
namespace {

constexpr double kSeriesThreshold = 1e-3;

// expm1(x) / x
double relative_growth(double x) {
    if (std::abs(x) < kSeriesThreshold) {
        return 1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0 *
               (1.0 + x / 6.0 * (1.0 + x / 7.0)))));
    }
    return std::expm1(x) / x;
}

// (expm1(x) - x) / x
double excess_growth(double x) {
    if (std::abs(x) < kSeriesThreshold) {
        return x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0 *
               (1.0 + x / 6.0 * (1.0 + x / 7.0 * (1.0 + x / 8.0))))));
    }
    return (std::expm1(x) - x) / x;
}

double drive_factor(const CellParams &cell, const RampProfile &ramp, double t) {
    const double factor = 1.0 + cell.eta * ramp.voltage(t);
    if (!(factor > 0.0)) {
        std::ostringstream msg;
        msg << "unphysical voltage: 1 + eta V(t) = " << factor << " at t = " << t << " s";
        throw PhysicsError(msg.str());
    }
    return factor;
}

}  // namespace

double instantaneous_speed(const CellParams &cell, const RampProfile &ramp, double t) {
    return cell.v0 / drive_factor(cell, ramp, t);
}

double transit_time(const CellParams &cell, const RampProfile &ramp, double x) {
    const double t_in = (ramp.lead_in - x) / kConstants.c;
    // 1 + eta V grows by exp(eta b s / v0) during transit, so positivity at entry suffices.
    const double factor = drive_factor(cell, ramp, t_in);
    const double exponent = cell.delay_coefficient() * ramp.rate;
    return factor * cell.thickness / cell.v0 * relative_growth(exponent);
}

double scale_factor(const CellParams &cell, double rate) {
    return std::exp(-cell.delay_coefficient() * rate);
}

double walkoff(const CellParams &cell, const RampProfile &ramp) {
    drive_factor(cell, ramp, ramp.lead_in / kConstants.c);
    const double exponent = cell.delay_coefficient() * ramp.rate;
    const double c = kConstants.c;
    return c * cell.thickness / cell.v0 * excess_growth(exponent) +
           ramp.offset * c * cell.delay_coefficient() * relative_growth(exponent) +
           ramp.lead_in * std::expm1(exponent);
}

double phase_difference(const CellParams &cell, const RampProfile &ramp, double k_v, double k_h,
                        double x) {
    const double f = scale_factor(cell, ramp.rate);
    return (f * k_v - k_h) * x + k_h * walkoff(cell, ramp);
}

CoordinateMap cell_coordinate_map(Pol pol, const CellParams &cell, const RampProfile &ramp) {
    if (pol == Pol::V) {
        drive_factor(cell, ramp, ramp.lead_in / kConstants.c);
        const double f = scale_factor(cell, ramp.rate);
        return CoordinateMap{f, 0.0, std::sqrt(f)};
    }
    return CoordinateMap{1.0, walkoff(cell, ramp), 1.0};
}

std::complex<double> ModeProfile::value(double x) const {
    if (!(edge_scale * x + edge_offset < 0.0)) {
        return {0.0, 0.0};
    }
    return amp * std::exp(std::complex<double>{env * x, phase0 + kappa * x});
}

ModeProfile apply_map(const ModeProfile &mode, const CoordinateMap &map) {
    ModeProfile out = mode;
    out.amp *= map.amplitude * std::exp(-mode.env * map.shift);
    out.phase0 -= mode.kappa * map.shift;
    out.env *= map.scale;
    out.kappa *= map.scale;
    out.edge_offset -= mode.edge_scale * map.shift;
    out.edge_scale *= map.scale;
    return out;
}

TwoPhotonBranch apply_map(const TwoPhotonBranch &branch, int photon, const CoordinateMap &map) {
    if (photon != 1 && photon != 2) {
        throw InvalidArgument("photon index must be 1 or 2");
    }
    const bool first = photon == 1;
    ModeProfile mode;
    mode.amp = branch.amp;
    mode.env = first ? branch.env1 : branch.env2;
    mode.kappa = first ? branch.kappa1 : branch.kappa2;
    mode.phase0 = branch.phase0;
    mode.edge_scale = first ? branch.wedge.s1 : branch.wedge.s2;
    mode.edge_offset = first ? branch.wedge.t1 : branch.wedge.t2;
    const ModeProfile mapped = apply_map(mode, map);

    TwoPhotonBranch out = branch;
    out.amp = mapped.amp;
    out.phase0 = mapped.phase0;
    (first ? out.env1 : out.env2) = mapped.env;
    (first ? out.kappa1 : out.kappa2) = mapped.kappa;
    (first ? out.wedge.s1 : out.wedge.s2) = mapped.edge_scale;
    (first ? out.wedge.t1 : out.wedge.t2) = mapped.edge_offset;
    return out;
}

TwoPhotonState apply_cell(const TwoPhotonState &state, const CellParams &cell,
                          const RampProfile &ramp, int photon) {
    if (photon != 1 && photon != 2) {
        throw InvalidArgument("photon index must be 1 or 2");
    }
    const CoordinateMap v_map = cell_coordinate_map(Pol::V, cell, ramp);
    const CoordinateMap h_map = cell_coordinate_map(Pol::H, cell, ramp);
    TwoPhotonState out;
    out.branches.reserve(state.branches.size());
    for (const auto &branch : state.branches) {
        const Pol pol = photon == 1 ? branch.pol1 : branch.pol2;
        out.branches.push_back(apply_map(branch, photon, pol == Pol::V ? v_map : h_map));
    }
    return out;
}

}  // namespace fsscomp
