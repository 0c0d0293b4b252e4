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

#ifndef FSSCOMP_ORACLE_HPP
#define FSSCOMP_ORACLE_HPP

// Brute-force cross-checks of the closed-form transforms. Nothing here calls
// transit_time, walkoff, scale_factor or the wedge integrals; the only physics
// input is the instantaneous speed v(t) of the crystal.

#include <complex>
#include <vector>

#include "fsscomp/eom.hpp"
#include "fsscomp/metrics.hpp"
#include "fsscomp/source.hpp"

namespace fsscomp::oracle {

/// Uniformly sampled single-photon wave on [x_min, x_min + (n-1) dx].
/// Samples are complex envelopes: the field is envelope[i] * exp(i carrier x_i).
struct SampledWave {
    double x_min = 0.0;
    double dx = 0.0;
    double carrier = 0.0;  // rad/m
    Pol pol = Pol::V;
    std::vector<std::complex<double>> envelope;

    std::size_t size() const { return envelope.size(); }
    double position(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
    /// sum |envelope|^2 dx
    double norm() const;

    /// Samples a mode profile on n points spanning [-extent, 0].
    static SampledWave sample(const ModeProfile &mode, Pol pol, double extent, std::size_t n,
                              double carrier);
};

/// Advances every sample through the crystal by solving  integral v(t) dt = s
/// for its transit time (adaptive Simpson + bisection), places it in the
/// frame of the V reference point and resamples onto the input grid with
/// 8-tap Kaiser-windowed sinc interpolation.
SampledWave propagate_grid(const SampledWave &wave, const CellParams &cell,
                           const RampProfile &ramp);

/// Transit time of train coordinate x on the given axis, by numerical
/// integration of the speed. H sees the zero-voltage speed v0.
double numerical_transit_time(const CellParams &cell, const RampProfile &ramp, Pol pol, double x);

/// Peak of the discrete Fourier transform of the sampled field, in rad/m.
double dominant_wavenumber(const SampledWave &wave);

/// Midpoint-rule density matrix over an n x n grid covering 30 coherence
/// lengths, with exact cell coverage fractions along the wedge boundaries.
PolDensityMatrix density_matrix_grid(const TwoPhotonState &state, int n);

struct BranchTransformError {
    Pol pol = Pol::H;
    double l2_error = 0.0;         // relative
    double max_phase_error = 0.0;  // rad
};

struct TransformErrorReport {
    double l2_error = 0.0;
    double max_phase_error = 0.0;
    std::vector<BranchTransformError> branches;
};

/// Samples every branch's profile along `photon`, propagates it with
/// propagate_grid and compares against apply_cell's closed form.
/// `scale_corruption` multiplies the closed-form V dilation (test hook).
TransformErrorReport compare_transform(const TwoPhotonState &state, const CellParams &cell,
                                       const RampProfile &ramp, int photon,
                                       std::size_t n = 1u << 14, double scale_corruption = 1.0);

}  // namespace fsscomp::oracle

#endif
