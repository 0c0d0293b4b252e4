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

#ifndef FSSCOMP_EOM_HPP
#define FSSCOMP_EOM_HPP

#include <complex>

#include "fsscomp/source.hpp"
#include "fsscomp/units.hpp"

namespace fsscomp {

/// Linear drive V(t) = offset + rate * t. Time is measured from the moment
/// the wave train's reference point (its front) sits a distance lead_in
/// before the crystal's entrance face.
struct RampProfile {
    double offset = 0.0;          // a, V
    double rate = 0.0;            // b, V/s
    double lead_in = 0.0;         // L, m
    double t_start_offset = 0.0;  // ramp start minus reference time, s

    double voltage(double t) const { return offset + rate * t; }
    bool covers_train() const { return t_start_offset <= 0.0; }
};

/// v0 / (1 + eta V(t)) for the V axis. Throws PhysicsError if 1 + eta V(t) <= 0.
double instantaneous_speed(const CellParams &cell, const RampProfile &ramp, double t);

/// Time the point at train coordinate x (x <= 0 behind the front) spends in
/// the crystal on the V axis. Continuous through rate == 0.
double transit_time(const CellParams &cell, const RampProfile &ramp, double x);

/// exp(-eta b s / v0): k_V' / k_V after the cell.
double scale_factor(const CellParams &cell, double rate);

/// Position of the H reference point in the V reference frame after the cell.
double walkoff(const CellParams &cell, const RampProfile &ramp);

/// (f k_V - k_H) x + k_H d.
double phase_difference(const CellParams &cell, const RampProfile &ramp, double k_v, double k_h,
                        double x);

/// psi(x) -> amplitude * psi(scale * x - shift).
struct CoordinateMap {
    double scale = 1.0;
    double shift = 0.0;
    double amplitude = 1.0;
};

/// V: scale f with amplitude sqrt(f). H: shift by the walk-off.
CoordinateMap cell_coordinate_map(Pol pol, const CellParams &cell, const RampProfile &ramp);

/// Single-coordinate exponential-linear wave train
///   amp * exp(i phase0) * exp((env + i kappa) x)  for edge_scale * x + edge_offset < 0.
struct ModeProfile {
    std::complex<double> amp{1.0, 0.0};
    double env = 0.0;
    double kappa = 0.0;
    double phase0 = 0.0;
    double edge_scale = 1.0;
    double edge_offset = 0.0;

    std::complex<double> value(double x) const;
    /// Position of the front edge.
    double front() const { return -edge_offset / edge_scale; }
};

ModeProfile apply_map(const ModeProfile &mode, const CoordinateMap &map);
/// Applies the map to coordinate `photon` (1 or 2) of the branch.
TwoPhotonBranch apply_map(const TwoPhotonBranch &branch, int photon, const CoordinateMap &map);

/// Passes one photon of every branch through the cell: V components are
/// dilated by f, H components shifted by the walk-off. Norm preserving.
TwoPhotonState apply_cell(const TwoPhotonState &state, const CellParams &cell,
                          const RampProfile &ramp, int photon);

}  // namespace fsscomp

#endif
